"""Boolean operations, product, star and reversal, plus the closed-form bounds.

Every public operation returns a minimal DFA. The ``*_nfa`` and
``product_automaton`` builders expose the raw constructions for testing.
"""
from __future__ import annotations

import numpy as np

from .automata import Dfa, Nfa, align, determinize, minimize, product, reachable
from .errors import InputError
from .freeness import require_standard_form

BOOLEAN_KINDS = ("union", "intersection", "difference", "symmetric_difference")
KIND_ALIASES = {
    "inter": "intersection",
    "diff": "difference",
    "symdiff": "symmetric_difference",
}


def _kind(kind):
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in BOOLEAN_KINDS:
        raise InputError(f"unknown Boolean operation {kind!r}")
    return kind


def product_automaton(d1: Dfa, d2: Dfa, kind: str) -> Dfa:
    """Reachable direct product with finals chosen by ``kind`` (not minimized)."""
    kind = _kind(kind)
    delta, pairs = product(d1, d2)
    in1 = [p in d1.finals for p, _ in pairs]
    in2 = [q in d2.finals for _, q in pairs]
    if kind == "union":
        keep = [x or y for x, y in zip(in1, in2)]
    elif kind == "intersection":
        keep = [x and y for x, y in zip(in1, in2)]
    elif kind == "difference":
        keep = [x and not y for x, y in zip(in1, in2)]
    else:
        keep = [x != y for x, y in zip(in1, in2)]
    finals = frozenset(i for i, f in enumerate(keep) if f)
    return Dfa(d1.alphabet, delta, 0, finals)


def boolean(d1: Dfa, d2: Dfa, kind: str) -> Dfa:
    return minimize(product_automaton(d1, d2, kind))


def union(d1, d2):
    return boolean(d1, d2, "union")


def intersection(d1, d2):
    return boolean(d1, d2, "intersection")


def difference(d1, d2):
    return boolean(d1, d2, "difference")


def symmetric_difference(d1, d2):
    return boolean(d1, d2, "symmetric_difference")


def _nfa_rows(delta, offset=0):
    return [[frozenset((t + offset,)) for t in row] for row in delta.tolist()]


def concat_nfa(d1: Dfa, d2: Dfa) -> Nfa:
    """States of ``d1`` then ``d2`` (shifted); epsilon from each final of ``d1``."""
    delta2 = align(d1, d2)
    n1 = d1.state_count
    rows = _nfa_rows(d1.delta) + _nfa_rows(delta2, n1)
    eps = [frozenset()] * (n1 + d2.state_count)
    for f in d1.finals:
        eps[f] = frozenset((n1 + d2.initial,))
    finals = frozenset(n1 + f for f in d2.finals)
    return Nfa(len(rows), d1.alphabet, tuple(map(tuple, rows)), tuple(eps),
               frozenset((d1.initial,)), finals)


def concat(d1: Dfa, d2: Dfa, max_states=None) -> Dfa:
    return minimize(determinize(concat_nfa(d1, d2), max_states))


def star_nfa(d: Dfa) -> Nfa:
    """Epsilon from every final back to the initial state.

    When the initial state has no incoming transitions the initial state itself
    is the only final one. Otherwise a fresh accepting initial state is added so
    that returning words are not accepted spuriously.
    """
    n = d.state_count
    live = reachable(d)
    returning = bool(np.any(d.delta[live] == d.initial))
    rows = _nfa_rows(d.delta)
    eps = [frozenset()] * n
    for f in d.finals:
        eps[f] = frozenset((d.initial,))
    if not returning:
        return Nfa(n, d.alphabet, tuple(map(tuple, rows)), tuple(eps),
                   frozenset((d.initial,)), frozenset((d.initial,)))
    rows.append([frozenset()] * d.symbol_count)
    eps.append(frozenset((d.initial,)))
    return Nfa(n + 1, d.alphabet, tuple(map(tuple, rows)), tuple(eps),
               frozenset((n,)), d.finals | {n})


def star(d: Dfa, max_states=None) -> Dfa:
    return minimize(determinize(star_nfa(d), max_states))


def reverse_nfa(d: Dfa) -> Nfa:
    n, k = d.delta.shape
    preimages = [[set() for _ in range(k)] for _ in range(n)]
    for p, row in enumerate(d.delta.tolist()):
        for a, q in enumerate(row):
            preimages[q][a].add(p)
    rows = tuple(tuple(frozenset(s) for s in row) for row in preimages)
    return Nfa(n, d.alphabet, rows, (), d.finals, frozenset((d.initial,)))


def reverse(d: Dfa, max_states=None) -> Dfa:
    return minimize(determinize(reverse_nfa(d), max_states))


def star_complexity_predicted(d: Dfa) -> int:
    """n-1 if some letter sends a state of {0..n-3} to the empty state, else n-2."""
    require_standard_form(d, "star_complexity_predicted")
    n = d.state_count
    hits_empty = bool(np.any(d.delta[: n - 2] == n - 1))
    return n - 1 if hits_empty else n - 2


def bounds(m: int, n: int) -> dict:
    """Tight upper bounds on the state complexity of each operation.

    Boolean entries are None unless ``m, n >= 4``; star and reversal refer to
    the second operand.
    """
    if m < 3 or n < 3:
        raise InputError("bounds need m, n >= 3")
    boolean_ok = m >= 4 and n >= 4
    return {
        "union": m * n - (m + n) if boolean_ok else None,
        "symdiff": m * n - (m + n) if boolean_ok else None,
        "intersection": m * n - 3 * (m + n - 4) if boolean_ok else None,
        "difference": m * n - (2 * m + 3 * n - 9) if boolean_ok else None,
        "concat": m + n - 2,
        "star": n - 1,
        "reverse": 2 ** (n - 3) + 2,
    }


def reverse_range(n: int) -> tuple[int, int]:
    """Inclusive range of reversal complexities for bifix-free languages of complexity n."""
    if n < 3:
        raise InputError("reverse_range needs n >= 3")
    # ceil(log2(n - 2)) == (n - 3).bit_length()
    return 3 + (n - 3).bit_length(), 2 + 2 ** (n - 3)
