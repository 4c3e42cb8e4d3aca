"""Transformations, transition-semigroup closure and the bifix-free type classes.

Transformations are tuples of targets: entry ``q`` is the image of ``q``.
Composition is left to right, ``compose(t1, t2)[q] == t2[t1[q]]``, so the
transformation of a word ``uv`` is ``compose(t_u, t_v)``.
"""
from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import limits
from .automata import Dfa, minimize
from .errors import InputError, ResourceError

Transformation = tuple  # tuple[int, ...]

# n ** n must fit in int64 for the vectorized encoder
_MAX_VECTOR_DEGREE = 15
_CHUNK_PRODUCTS = 1 << 20


class WbfType(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3


def identity(n: int) -> Transformation:
    return tuple(range(n))


def compose(t1: Sequence[int], t2: Sequence[int]) -> Transformation:
    if len(t1) != len(t2):
        raise InputError(f"cannot compose transformations of degree {len(t1)} and {len(t2)}")
    return tuple(t2[x] for x in t1)


@dataclass(frozen=True, eq=False)
class SemigroupClosure:
    """Elements of a finitely generated transformation semigroup, in BFS discovery order."""

    elements: np.ndarray
    generator_count: int

    @property
    def size(self) -> int:
        return self.elements.shape[0]

    @property
    def degree(self) -> int:
        return self.elements.shape[1]

    def __len__(self):
        return self.size

    def __iter__(self):
        for row in self.elements.tolist():
            yield tuple(row)

    def __contains__(self, t):
        return tuple(t) in self.as_set()

    def as_set(self) -> frozenset:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(map(tuple, self.elements.tolist()))
            object.__setattr__(self, "_set", cached)
        return cached


def _as_generator_array(generators):
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise InputError("closure needs at least one generator")
    n = len(gens[0])
    if n == 0 or any(len(g) != n for g in gens):
        raise InputError("generators must be nonempty and of equal degree")
    if any(not 0 <= x < n for g in gens for x in g):
        raise InputError("generator entry out of range")
    return gens, n


def _closure_python(gens, n, cap):
    seen = {}
    queue = deque()
    for g in gens:
        if g not in seen:
            seen[g] = None
            queue.append(g)
    if len(seen) > cap:
        raise ResourceError(f"semigroup closure exceeded {cap} elements")
    while queue:
        t = queue.popleft()
        for g in gens:
            u = tuple(g[x] for x in t)
            if u not in seen:
                if len(seen) >= cap:
                    raise ResourceError(f"semigroup closure exceeded {cap} elements")
                seen[u] = None
                queue.append(u)
    return np.array(list(seen), dtype=np.int64).reshape(len(seen), n)


def _closure_numpy(gens, n, cap):
    dtype = np.uint8 if n <= 255 else np.int64
    gen_arr = np.array(gens, dtype=dtype)
    powers = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = gen_arr.astype(np.int64) @ powers
    _, first = np.unique(codes, return_index=True)
    first.sort()
    frontier = gen_arr[first]
    if len(frontier) > cap:
        raise ResourceError(f"semigroup closure exceeded {cap} elements")
    known = np.sort(codes[first])
    levels = [frontier]
    total = len(frontier)
    g = len(gen_arr)
    chunk = max(1, _CHUNK_PRODUCTS // g)
    while len(frontier):
        found = []
        for start in range(0, len(frontier), chunk):
            block = frontier[start:start + chunk]
            # row i*g + j is block[i] followed by generator j
            cand = gen_arr[np.arange(g)[None, :, None], block[:, None, :]].reshape(-1, n)
            cand_codes = cand.astype(np.int64) @ powers
            uniq, first = np.unique(cand_codes, return_index=True)
            pos = np.searchsorted(known, uniq)
            pos[pos == len(known)] = 0
            fresh = known[pos] != uniq if len(known) else np.ones(len(uniq), bool)
            picked = np.sort(first[fresh])
            if not len(picked):
                continue
            total += len(picked)
            if total > cap:
                raise ResourceError(f"semigroup closure exceeded {cap} elements")
            found.append(cand[picked])
            known = np.union1d(known, cand_codes[picked])
        frontier = np.concatenate(found) if found else frontier[:0]
        levels.append(frontier)
    return np.concatenate(levels).astype(np.int64)


def closure(generators, max_elements=None) -> SemigroupClosure:
    """BFS closure under right multiplication by the generators.

    Discovery order is generator order, then FIFO. Raises ResourceError past
    ``max_elements`` (default from :mod:`bifixlab.limits`).
    """
    gens, n = _as_generator_array(generators)
    cap = limits.max_elements(max_elements, n)
    if n <= _MAX_VECTOR_DEGREE:
        elements = _closure_numpy(gens, n, cap)
    else:
        elements = _closure_python(gens, n, cap)
    elements.flags.writeable = False
    return SemigroupClosure(elements, len(gens))


def transition_semigroup(d: Dfa, max_elements=None) -> SemigroupClosure:
    """Closure of the letter transformations of ``d`` as given (no minimization)."""
    return closure(d.transformations(), max_elements)


def syntactic_complexity(d: Dfa, max_elements=None) -> int:
    return transition_semigroup(minimize(d), max_elements).size


def _type_codes(elements: np.ndarray) -> np.ndarray:
    """0 for no type, else 1/2/3, computed row-wise."""
    e = np.asarray(elements)
    n = e.shape[1]
    if n < 3:
        raise InputError("type classification needs degree >= 3")
    last, fin = n - 1, n - 2
    middle = e[:, 1:n - 2]
    tail_dead = (e[:, fin] == last) & (e[:, last] == last)
    start = e[:, 0]
    start_mid = (start >= 1) & (start <= n - 3)
    type1 = (start == last) & tail_dead & np.all(middle != 0, axis=1)
    type2 = (start == fin) & tail_dead & np.all((middle != 0) & (middle != fin), axis=1)
    type3 = start_mid & tail_dead & np.all(middle >= fin, axis=1)
    out = np.zeros(len(e), dtype=np.int64)
    out[type3] = 3
    out[type2] = 2
    out[type1] = 1
    return out


def classify_wbf(t: Sequence[int]):
    """WbfType of ``t``, or None if it lies outside the largest bifix-free semigroup."""
    code = int(_type_codes(np.array([list(t)]))[0])
    return WbfType(code) if code else None


def is_sub_wbf(c: SemigroupClosure) -> bool:
    return bool(np.all(_type_codes(c.elements) > 0))


def type_counts(c: SemigroupClosure) -> dict:
    codes = _type_codes(c.elements)
    return {name: int(np.count_nonzero(codes == v))
            for name, v in (("none", 0), ("type1", 1), ("type2", 2), ("type3", 3))}


def wbf_size_formula(n: int) -> int:
    if n < 6:
        raise InputError("the syntactic complexity formula holds for n >= 6")
    return (n - 1) ** (n - 3) + (n - 2) ** (n - 3) + (n - 3) * 2 ** (n - 3)


def wbf_elements(n: int, kind=None) -> list[Transformation]:
    """Direct enumeration of the type 1/2/3 transformations, lexicographic within each type.

    ``kind`` restricts to one WbfType; otherwise all three in sorted order.
    """
    if n < 3:
        raise InputError("degree must be >= 3")
    last, fin = n - 1, n - 2
    mids = range(1, n - 2)
    out = []
    if kind in (None, WbfType.TYPE3):
        for q in mids:
            for img in itertools.product((fin, last), repeat=n - 3):
                out.append((q, *img, last, last))
    if kind in (None, WbfType.TYPE2):
        for img in itertools.product([*mids, last], repeat=n - 3):
            out.append((fin, *img, last, last))
    if kind in (None, WbfType.TYPE1):
        for img in itertools.product(range(1, n), repeat=n - 3):
            out.append((last, *img, last, last))
    return sorted(out) if kind is None else out


def colliding_pairs(c: SemigroupClosure) -> set:
    """Pairs (p, q), p < q, of middle states with 0t = p and rt = q for a middle r."""
    e = c.elements
    n = c.degree
    start = e[:, 0]
    pairs = set()
    rows = e[(start >= 1) & (start <= n - 3)]
    if not len(rows):
        return pairs
    p = rows[:, 0]
    for r in range(1, n - 2):
        q = rows[:, r]
        ok = (q >= 1) & (q <= n - 3) & (q != p)
        if np.any(ok):
            lo = np.minimum(p[ok], q[ok])
            hi = np.maximum(p[ok], q[ok])
            pairs.update(zip(lo.tolist(), hi.tolist()))
    return pairs


def focused_pairs(c: SemigroupClosure) -> set:
    """Pairs (p, q), p < q, of middle states sent to one state of Q_M or the final state."""
    e = c.elements
    n = c.degree
    out = set()
    for p, q in itertools.combinations(range(1, n - 2), 2):
        tp = e[:, p]
        hit = (tp == e[:, q]) & (tp >= 1) & (tp <= n - 2)
        if np.any(hit):
            out.add((p, q))
    return out
