"""Deterministic and nondeterministic automata with dense integer states.

A :class:`Dfa` is always complete: ``delta[q, a]`` is defined for every state
``q`` and symbol index ``a``. Symbols are identified by position inside one
automaton and by name across automata.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import limits
from .errors import InputError, ResourceError

Word = Sequence[int]


def _check_symbols(alphabet):
    alphabet = tuple(alphabet)
    if not alphabet:
        raise InputError("alphabet must contain at least one symbol")
    for name in alphabet:
        if not isinstance(name, str) or not name:
            raise InputError(f"invalid symbol name {name!r}")
        if "#" in name or any(ch.isspace() for ch in name):
            raise InputError(f"symbol name {name!r} contains whitespace or '#'")
    if len(set(alphabet)) != len(alphabet):
        dupes = sorted({s for s in alphabet if alphabet.count(s) > 1})
        raise InputError(f"duplicate symbol names: {', '.join(dupes)}")
    return alphabet


@dataclass(frozen=True, eq=False)
class Dfa:
    """Complete DFA over states ``0..n-1``.

    ``delta`` has shape ``(n, k)``; row ``q`` lists the targets of ``q`` under
    the symbols in ``alphabet`` order. Instances are immutable.
    """

    alphabet: tuple[str, ...]
    delta: np.ndarray
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        alphabet = _check_symbols(self.alphabet)
        try:
            delta = np.array(self.delta, dtype=np.int64)
        except (ValueError, TypeError) as exc:
            raise InputError(f"transition table is not rectangular: {exc}") from None
        if delta.ndim != 2 or delta.shape[0] < 1 or delta.shape[1] != len(alphabet):
            raise InputError(
                f"transition table must have shape (n>=1, {len(alphabet)}), got {delta.shape}")
        n = delta.shape[0]
        if delta.min() < 0 or delta.max() >= n:
            raise InputError(f"transition target out of range [0, {n})")
        delta.flags.writeable = False
        initial = int(self.initial)
        if not 0 <= initial < n:
            raise InputError(f"initial state {initial} out of range [0, {n})")
        finals = frozenset(int(f) for f in self.finals)
        bad = sorted(f for f in finals if not 0 <= f < n)
        if bad:
            raise InputError(f"final states out of range: {bad}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "finals", finals)

    @classmethod
    def from_transformations(cls, alphabet, transformations, initial=0, finals=()):
        """Build from one target vector per letter (the letter's transformation)."""
        table = np.array([list(t) for t in transformations], dtype=np.int64)
        if table.ndim != 2:
            raise InputError("letter transformations must all have the same length")
        return cls(tuple(alphabet), table.T, initial, frozenset(finals))

    @property
    def state_count(self) -> int:
        return self.delta.shape[0]

    @property
    def symbol_count(self) -> int:
        return self.delta.shape[1]

    def symbol_index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise InputError(f"unknown symbol {name!r}") from None

    def encode(self, names: Iterable[str]) -> tuple[int, ...]:
        """Translate a sequence of symbol names into a word of indices."""
        return tuple(self.symbol_index(s) for s in names)

    def transformation(self, symbol) -> tuple[int, ...]:
        a = symbol if isinstance(symbol, (int, np.integer)) else self.symbol_index(symbol)
        return tuple(self.delta[:, a].tolist())

    def transformations(self) -> list[tuple[int, ...]]:
        return [tuple(col) for col in self.delta.T.tolist()]

    def accepts(self, word: Word) -> bool:
        return apply_word(self, self.initial, word) in self.finals

    def with_initial(self, q: int) -> Dfa:
        return Dfa(self.alphabet, self.delta, q, self.finals)

    def with_finals(self, finals) -> Dfa:
        return Dfa(self.alphabet, self.delta, self.initial, frozenset(finals))

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and self.initial == other.initial
                and self.finals == other.finals
                and self.delta.shape == other.delta.shape
                and bool(np.array_equal(self.delta, other.delta)))

    def __hash__(self):
        return hash((self.alphabet, self.initial, self.finals, self.delta.tobytes()))

    def __repr__(self):
        return (f"Dfa(states={self.state_count}, alphabet={list(self.alphabet)}, "
                f"initial={self.initial}, finals={sorted(self.finals)})")


@dataclass(frozen=True)
class Nfa:
    """NFA with epsilon moves. ``delta[q][a]`` and ``epsilon[q]`` are state sets."""

    state_count: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    epsilon: tuple[frozenset[int], ...]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        n = self.state_count
        alphabet = _check_symbols(self.alphabet)
        if n < 1:
            raise InputError("an NFA needs at least one state")
        delta = tuple(tuple(frozenset(row_a) for row_a in row) for row in self.delta)
        eps = tuple(frozenset(e) for e in self.epsilon) if self.epsilon else (frozenset(),) * n
        if len(delta) != n or any(len(row) != len(alphabet) for row in delta) or len(eps) != n:
            raise InputError("NFA transition table has the wrong shape")

        def in_range(states):
            return all(0 <= s < n for s in states)

        if not all(in_range(s) for row in delta for s in row) or not all(in_range(e) for e in eps):
            raise InputError("NFA transition target out of range")
        if not in_range(self.initials) or not in_range(self.finals):
            raise InputError("NFA initial/final state out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))

    @classmethod
    def from_dfa(cls, d: Dfa) -> Nfa:
        rows = tuple(tuple(frozenset((t,)) for t in row) for row in d.delta.tolist())
        return cls(d.state_count, d.alphabet, rows, (), frozenset((d.initial,)), d.finals)


def apply_word(d: Dfa, q: int, w: Word) -> int:
    """Return the state reached from ``q`` after reading ``w``.

    ``w`` holds symbol indices; symbol names are accepted too.
    """
    n, k = d.delta.shape
    if not 0 <= q < n:
        raise InputError(f"state {q} out of range [0, {n})")
    delta = d.delta
    for a in w:
        if isinstance(a, str):
            a = d.symbol_index(a)
        if not 0 <= a < k:
            raise InputError(f"symbol index {a} out of range [0, {k})")
        q = int(delta[q, a])
    return q


def _bfs_order(delta: np.ndarray, start: int) -> list[int]:
    seen = {start}
    order = [start]
    queue = deque(order)
    rows = delta.tolist()
    while queue:
        q = queue.popleft()
        for t in rows[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def reachable(d: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS discovery order."""
    return _bfs_order(d.delta, d.initial)


def canonical(d: Dfa) -> Dfa:
    """Renumber the reachable part in BFS order (symbols explored in declared order)."""
    order = _bfs_order(d.delta, d.initial)
    index = np.full(d.state_count, -1, dtype=np.int64)
    index[order] = np.arange(len(order))
    delta = index[d.delta[order]]
    finals = frozenset(int(index[f]) for f in d.finals if index[f] >= 0)
    return Dfa(d.alphabet, delta, 0, finals)


def minimize(d: Dfa) -> Dfa:
    """Minimal equivalent DFA in canonical BFS numbering (Moore refinement)."""
    d = canonical(d)
    delta = d.delta
    n = d.state_count
    blocks = np.zeros(n, dtype=np.int64)
    blocks[list(d.finals)] = 1
    count = len(np.unique(blocks))
    while True:
        signature = np.column_stack((blocks, blocks[delta]))
        _, inverse = np.unique(signature, axis=0, return_inverse=True)
        inverse = inverse.ravel()
        new_count = int(inverse.max()) + 1
        blocks = inverse
        if new_count == count:
            break
        count = new_count
    _, reps = np.unique(blocks, return_index=True)
    quotient = blocks[delta[reps]]
    finals = frozenset(int(blocks[f]) for f in d.finals)
    return canonical(Dfa(d.alphabet, quotient, int(blocks[d.initial]), finals))


def is_isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Equality of canonical forms; callers minimize first."""
    return canonical(d1) == canonical(d2)


def align(reference: Dfa, other: Dfa) -> np.ndarray:
    """Columns of ``other.delta`` reordered to ``reference``'s symbol order."""
    if set(reference.alphabet) != set(other.alphabet) or \
            len(reference.alphabet) != len(other.alphabet):
        raise InputError(
            f"alphabet mismatch: {list(reference.alphabet)} vs {list(other.alphabet)}")
    if reference.alphabet == other.alphabet:
        return other.delta
    cols = [other.alphabet.index(s) for s in reference.alphabet]
    return other.delta[:, cols]


def product(d1: Dfa, d2: Dfa):
    """Reachable direct product. Returns ``(delta, pairs)`` with pairs in BFS order."""
    delta2 = align(d1, d2)
    n2 = d2.state_count
    start = d1.initial * n2 + d2.initial
    index = {start: 0}
    codes = [start]
    rows = []
    i = 0
    while i < len(codes):
        p, q = divmod(codes[i], n2)
        targets = (d1.delta[p] * n2 + delta2[q]).tolist()
        row = []
        for t in targets:
            j = index.get(t)
            if j is None:
                j = index[t] = len(codes)
                codes.append(t)
            row.append(j)
        rows.append(row)
        i += 1
    pairs = [divmod(c, n2) for c in codes]
    return np.array(rows, dtype=np.int64), pairs


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """True iff both automata accept the same language (symbols matched by name)."""
    _, pairs = product(d1, d2)
    return all((p in d1.finals) == (q in d2.finals) for p, q in pairs)


def state_complexity(d: Dfa) -> int:
    return minimize(d).state_count


def quotient_complexities(d: Dfa) -> list[int]:
    """State complexity of the quotient at each state of ``minimize(d)``."""
    m = minimize(d)
    return [state_complexity(m.with_initial(q)) for q in range(m.state_count)]


def _bits(mask: int) -> list[int]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return out


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def _epsilon_closures(nfa: Nfa) -> list[int]:
    closures = []
    for q in range(nfa.state_count):
        seen = {q}
        stack = [q]
        while stack:
            p = stack.pop()
            for r in nfa.epsilon[p]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        closures.append(sum(1 << r for r in seen))
    return closures


def subset_construction(nfa: Nfa, max_states=None):
    """Accessible powerset automaton.

    Returns ``(dfa, subsets)`` where ``subsets[i]`` is the bitmask of NFA states
    forming DFA state ``i``, in BFS discovery order. Raises ResourceError when
    more than ``max_states`` subsets are discovered.
    """
    cap = limits.max_states(max_states)
    n = nfa.state_count
    k = len(nfa.alphabet)
    closures = _epsilon_closures(nfa)

    def close(states):
        mask = 0
        for r in states:
            mask |= closures[r]
        return mask

    dtype = np.uint64 if n <= 64 else object
    table = np.zeros((n, k), dtype=dtype)
    for q in range(n):
        for a in range(k):
            table[q, a] = close(nfa.delta[q][a])
    start = close(nfa.initials)
    index = {start: 0}
    subsets = [start]
    rows = []
    i = 0
    while i < len(subsets):
        members = _bits(subsets[i])
        if members:
            images = np.bitwise_or.reduce(table[members], axis=0).tolist()
        else:
            images = [0] * k
        row = []
        for img in images:
            img = int(img)
            j = index.get(img)
            if j is None:
                if len(subsets) >= cap:
                    raise ResourceError(f"powerset construction exceeded {cap} states")
                j = index[img] = len(subsets)
                subsets.append(img)
            row.append(j)
        rows.append(row)
        i += 1
    final_mask = sum(1 << f for f in nfa.finals)
    finals = frozenset(i for i, s in enumerate(subsets) if s & final_mask)
    return Dfa(nfa.alphabet, np.array(rows, dtype=np.int64), 0, finals), subsets


def determinize(nfa: Nfa, max_states=None) -> Dfa:
    return subset_construction(nfa, max_states)[0]
