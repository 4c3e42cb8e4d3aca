"""Prefix-, suffix- and bifix-freeness via the structure of the minimal DFA.

For a minimal DFA of a nonempty language with ``n`` states the standard
layout is: initial ``0``, unique final ``n-2`` whose quotient is {ε}, and
empty state ``n-1``. :func:`standard_form` renumbers into that layout.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from .automata import Dfa, minimize
from .errors import InputError


def find_empty_state(d: Dfa):
    """Lowest non-final state fixed by every letter, or None."""
    n = d.state_count
    fixed = np.all(d.delta == np.arange(n)[:, None], axis=1)
    for q in np.flatnonzero(fixed).tolist():
        if q not in d.finals:
            return q
    return None


def _prefix_free_minimal(m: Dfa) -> bool:
    if not m.finals:
        return True
    empty = find_empty_state(m)
    if empty is None or len(m.finals) != 1:
        return False
    (f,) = m.finals
    return bool(np.all(m.delta[f] == empty))


def _suffix_free_minimal(m: Dfa) -> bool:
    if not m.finals:
        return True
    empty = find_empty_state(m)
    if empty is None:
        return False
    n = m.state_count
    start = m.initial
    if start in m.finals:
        # ε is a proper suffix of every other word
        return bool(np.all(m.delta[start] == empty))
    if np.any(m.delta == start):
        # a nonempty word w with L.w = L makes every word of L a suffix of wu
        return False
    seen = set()
    queue = deque()
    for a in range(m.symbol_count):
        p = int(m.delta[start, a])
        for q in range(n):
            if q == start:
                continue
            pair = (p, int(m.delta[q, a]))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    rows = m.delta.tolist()
    while queue:
        p, q = queue.popleft()
        if p == q:
            if p != empty:
                return False
            continue
        for pa, qa in zip(rows[p], rows[q]):
            if (pa, qa) not in seen:
                seen.add((pa, qa))
                queue.append((pa, qa))
    return True


def is_prefix_free(d: Dfa) -> bool:
    return _prefix_free_minimal(minimize(d))


def is_suffix_free(d: Dfa) -> bool:
    return _suffix_free_minimal(minimize(d))


def is_bifix_free(d: Dfa) -> bool:
    m = minimize(d)
    return _prefix_free_minimal(m) and _suffix_free_minimal(m)


def is_non_returning(d: Dfa) -> bool:
    """True iff no transition of the minimal DFA enters its initial state."""
    m = minimize(d)
    return not bool(np.any(m.delta == m.initial))


def is_standard_form(d: Dfa) -> bool:
    """Whether ``d`` is minimal bifix-free with initial 0, final n-2, empty n-1."""
    n = d.state_count
    if n < 3 or d.initial != 0 or d.finals != frozenset((n - 2,)):
        return False
    if not np.all(d.delta[n - 1] == n - 1) or not np.all(d.delta[n - 2] == n - 1):
        return False
    return minimize(d).state_count == n and is_bifix_free(d)


def standard_form(d: Dfa) -> Dfa:
    """Minimal DFA of a nonempty bifix-free language, renumbered to the standard layout.

    Middle states keep their relative canonical (BFS) order.
    """
    m = minimize(d)
    if not m.finals or not (_prefix_free_minimal(m) and _suffix_free_minimal(m)):
        raise InputError("standard form requires a nonempty bifix-free language")
    n = m.state_count
    if n < 3:
        raise InputError("standard form needs at least 3 states ({ε} has no middle layout)")
    (final,) = m.finals
    empty = find_empty_state(m)
    middle = [q for q in range(n) if q not in (m.initial, final, empty)]
    order = [m.initial, *middle, final, empty]
    index = np.empty(n, dtype=np.int64)
    index[order] = np.arange(n)
    return Dfa(m.alphabet, index[m.delta[order]], 0, frozenset((n - 2,)))


def require_standard_form(d: Dfa, what="operation"):
    if not is_standard_form(d):
        raise InputError(
            f"{what} requires a minimal bifix-free DFA with initial 0, "
            "final n-2 and empty state n-1 (see standard_form)")
