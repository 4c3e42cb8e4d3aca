"""Atoms of a regular language and their quotient complexities.

The atom ``A_S`` is the set of words ``w`` with ``{q : q.w final} == S``. Its
DFA runs on disjoint pairs ``(X, Y)`` of state sets: ``X`` must end inside
the finals, ``Y`` outside. Pairs are stored as two bitmasks.
"""
from __future__ import annotations

from math import comb

import numpy as np

from .automata import Dfa, mask_to_set, minimize, subset_construction
from .errors import DomainError, InputError
from .operations import reverse_nfa

BOTTOM = None  # the dead pair, state label only


def _state_mask(d: Dfa, states) -> int:
    n = d.state_count
    mask = 0
    for q in states:
        q = int(q)
        if not 0 <= q < n:
            raise InputError(f"state {q} not in [0, {n})")
        mask |= 1 << q
    return mask


def _bit_table(d: Dfa) -> np.ndarray:
    if d.state_count <= 64:
        return np.left_shift(np.uint64(1), d.delta.astype(np.uint64))
    return np.array([[1 << t for t in row] for row in d.delta.tolist()], dtype=object)


def _images(table, mask, k):
    members = [q for q in range(mask.bit_length()) if mask >> q & 1]
    if not members:
        return [0] * k
    return [int(x) for x in np.bitwise_or.reduce(table[members], axis=0).tolist()]


def atom_automaton_states(d: Dfa, S):
    """Complete DFA for ``A_S`` plus the label of each state.

    Labels are ``(X, Y)`` frozenset pairs, or :data:`BOTTOM` for the dead state.
    """
    n, k = d.delta.shape
    x0 = _state_mask(d, S)
    full = (1 << n) - 1
    table = _bit_table(d)
    final_mask = _state_mask(d, d.finals)
    start = (x0, full ^ x0)
    index = {start: 0}
    labels = [start]
    rows = []
    i = 0
    while i < len(labels):
        label = labels[i]
        if label is BOTTOM:
            rows.append([i] * k)
            i += 1
            continue
        xs = _images(table, label[0], k)
        ys = _images(table, label[1], k)
        row = []
        for xa, ya in zip(xs, ys):
            target = BOTTOM if xa & ya else (xa, ya)
            j = index.get(target)
            if j is None:
                j = index[target] = len(labels)
                labels.append(target)
            row.append(j)
        rows.append(row)
        i += 1
    finals = frozenset(
        i for i, lab in enumerate(labels)
        if lab is not BOTTOM and not lab[0] & ~final_mask and not lab[1] & final_mask)
    dfa = Dfa(d.alphabet, np.array(rows, dtype=np.int64), 0, finals)
    pretty = [BOTTOM if lab is BOTTOM else (mask_to_set(lab[0]), mask_to_set(lab[1]))
              for lab in labels]
    return dfa, pretty


def atom_automaton(d: Dfa, S) -> Dfa:
    return atom_automaton_states(d, S)[0]


def _sort_key(s):
    return (len(s), sorted(s))


def atoms(d: Dfa) -> list[frozenset]:
    """Every S whose atom is nonempty, ordered by size then lexicographically.

    ``S`` ranges over ``{q : q.w final}`` for all words ``w``; these are exactly
    the subsets reachable when determinizing the reversed automaton.
    """
    _, subsets = subset_construction(reverse_nfa(d))
    return sorted((mask_to_set(m) for m in subsets), key=_sort_key)


def atom_complexity(d: Dfa, S) -> int:
    m = minimize(atom_automaton(d, S))
    if not m.finals:
        raise DomainError(f"atom A_{sorted(S)} is empty")
    return m.state_count


def atom_count_bound(n: int) -> int:
    if n < 3:
        raise InputError("atom bounds need n >= 3")
    return 2 ** (n - 3) + 2


def atom_bound(n: int, S) -> int:
    """Upper bound on the quotient complexity of ``A_S`` for complexity-n bifix-free languages.

    ``S`` must be {0}, {n-2} or a subset of the middle states; other sets give
    empty atoms and raise InputError.
    """
    S = frozenset(int(q) for q in S)
    if n < 3:
        raise InputError("atom bounds need n >= 3")
    if not S:
        return 2 ** (n - 2) + 1
    if S == {0}:
        return n
    if S == {n - 2}:
        return 2
    if not all(1 <= q <= n - 3 for q in S):
        raise InputError(f"A_S is empty for S = {sorted(S)} (n = {n})")
    size, mid = len(S), n - 3
    return 3 + sum(comb(mid, x) * comb(mid - x, y)
                   for x in range(1, size + 1)
                   for y in range(0, mid - size + 1))
