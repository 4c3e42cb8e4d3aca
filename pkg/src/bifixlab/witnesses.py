"""Witness families, permutational dialects and random bifix-free DFAs.

Every generator returns a DFA in the standard layout: initial 0, final
``n-2``, empty state ``n-1``.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import limits
from .automata import Dfa, minimize
from .errors import GenerationError, InputError
from .freeness import standard_form
from .operations import reverse, reverse_range
from .semigroup import WbfType, wbf_elements

FAMILIES = ("unary", "ternary", "ternary_dialect", "wstream", "atom_witness",
            "revmagic", "random")


@dataclass(frozen=True)
class WitnessSpec:
    family: str
    n: int
    alpha: Optional[int] = None
    seed: Optional[int] = None
    letters: Optional[int] = None

    def build(self) -> Dfa:
        family = self.family.replace("-", "_")
        if family == "unary":
            return unary_free(self.n)
        if family == "ternary":
            return ternary_witness(self.n)
        if family == "ternary_dialect":
            return ternary_dialect(self.n)
        if family == "wstream":
            return wstream_witness(self.n)
        if family in ("atom_witness", "atoms"):
            return atom_witness(self.n)
        if family == "revmagic":
            if self.alpha is None:
                raise InputError("revmagic needs alpha")
            return revmagic(self.n, self.alpha)
        if family == "random":
            return random_bifix_free(self.n, self.letters or 3, self.seed or 0)
        raise InputError(f"unknown witness family {self.family!r}")


def _dfa(alphabet, transformations, n):
    return Dfa.from_transformations(alphabet, transformations, 0, {n - 2})


def unary_free(n: int) -> Dfa:
    """The language {a^(n-2)}."""
    if n < 3:
        raise InputError("unary_free needs n >= 3")
    return _dfa(("a",), [[min(q + 1, n - 1) for q in range(n)]], n)


def ternary_witness(n: int) -> Dfa:
    """Ternary stream meeting every basic-operation bound (bounds hold from n = 9)."""
    if n < 7:
        raise InputError("ternary_witness needs n >= 7")
    last, fin = n - 1, n - 2
    h = (n - 1) // 2
    a = [1] + [fin] * (n - 3) + [last, last]
    b = [last] + [q + 1 for q in range(1, n - 3)] + [1] + [last, last]
    c = [last] * n
    c[1], c[h] = h, fin
    # cycle n-3 -> n-4 -> ... -> h+1 -> h-1 -> ... -> 2 -> n-3
    cycle = [q for q in range(n - 3, 1, -1) if q != h]
    for i, q in enumerate(cycle):
        c[q] = cycle[(i + 1) % len(cycle)]
    return _dfa(("a", "b", "c"), [a, b, c], n)


def dialect(d: Dfa, mapping) -> Dfa:
    """Permutational dialect: letter x acts as old letter ``mapping[x]``.

    Letters not in the mapping, or mapped to None, are deleted. The remaining
    letters keep their names and original relative order. Not minimized.
    """
    mapping = dict(mapping)
    for x, y in mapping.items():
        if x not in d.alphabet:
            raise InputError(f"unknown symbol {x!r} in dialect mapping")
        if y is not None and y not in d.alphabet:
            raise InputError(f"unknown target symbol {y!r} in dialect mapping")
    targets = [y for y in mapping.values() if y is not None]
    if len(set(targets)) != len(targets):
        raise InputError("dialect mapping is not injective")
    kept = [x for x in d.alphabet if mapping.get(x) is not None]
    if not kept:
        raise InputError("dialect deletes every letter")
    cols = [d.symbol_index(mapping[x]) for x in kept]
    return Dfa(tuple(kept), d.delta[:, cols], d.initial, d.finals)


def ternary_dialect(n: int) -> Dfa:
    """ternary_witness(n) with the actions of b and c swapped."""
    return dialect(ternary_witness(n), {"a": "a", "b": "c", "c": "b"})


def wstream_alphabet_size(n: int) -> int:
    return (n - 2) ** (n - 3) + (n - 3) * 2 ** (n - 3) - 1


def wstream_witness(n: int, max_letters=None) -> Dfa:
    """DFA whose transition semigroup is the full largest bifix-free semigroup.

    Letters: b1..b{n-3}, then c/d letters for the type-2/type-3 transformations
    (lexicographic by target vector) minus the ones sending every middle state
    to the empty state.
    """
    if n < 6:
        raise InputError("wstream_witness needs n >= 6")
    cap = limits.DEFAULT_MAX_LETTERS if max_letters is None else max_letters
    size = wstream_alphabet_size(n)
    if size > cap:
        raise InputError(f"wstream_witness({n}) needs {size} letters, cap is {cap}")
    last, fin = n - 1, n - 2
    names, trans = [], []
    for i in range(1, n - 2):
        t = list(range(n))
        t[0], t[i], t[fin] = last, fin, last
        names.append(f"b{i}")
        trans.append(t)
    width = max(6, len(str(size)))
    c_list = [t for t in wbf_elements(n, WbfType.TYPE2) if any(x != last for x in t[1:n - 2])]
    d_list = [t for t in wbf_elements(n, WbfType.TYPE3) if any(x != last for x in t[1:n - 2])]
    for prefix, group in (("c", c_list), ("d", d_list)):
        for j, t in enumerate(sorted(group), 1):
            names.append(f"{prefix}{j:0{width}d}")
            trans.append(list(t))
    return _dfa(names, trans, n)


def atom_witness(n: int) -> Dfa:
    """Alphabet of n+1 letters meeting the bounds on number and complexity of atoms."""
    if n < 6:
        raise InputError("atom_witness needs n >= 6")
    last, fin = n - 1, n - 2

    def base():
        t = list(range(n))
        t[0] = t[fin] = last
        return t

    a = [1] + [last] * (n - 1)
    b = base()
    b[1], b[2] = 2, 1
    c = base()
    for q in range(1, n - 2):
        c[q] = q + 1 if q < n - 3 else 1
    d = base()
    d[2] = 1
    names = ["a", "b", "c", "d"]
    trans = [a, b, c, d]
    for q in range(1, n - 2):
        e = base()
        e[q] = fin
        names.append(f"e{q}")
        trans.append(e)
    return _dfa(names, trans, n)


def revmagic_subsets(n: int, alpha: int) -> list[frozenset]:
    """The alpha-2 subsets of the middle states used by the direct construction."""
    mids = n - 3
    chosen = [0] + [1 << (q - 1) for q in range(1, n - 2)]
    rest = [m for m in range(1 << mids) if m not in chosen]
    masks = (chosen + rest)[: alpha - 2]
    return [frozenset(q for q in range(1, n - 2) if m >> (q - 1) & 1) for m in masks]


def revmagic(n: int, alpha: int) -> Dfa:
    """Bifix-free DFA with n states whose reversal has exactly ``alpha`` states."""
    lo, hi = reverse_range(n)
    if not lo <= alpha <= hi:
        raise InputError(f"alpha={alpha} outside [{lo}, {hi}] for n={n}")
    if n == 3:
        return unary_free(3)
    if alpha < n:
        return standard_form(reverse(revmagic(alpha, n)))
    last, fin = n - 1, n - 2
    names, trans = [], []
    for q in range(1, n - 2):
        t = [last] * n
        t[0] = q
        names.append(f"a{q}")
        trans.append(t)
    for S in revmagic_subsets(n, alpha):
        t = [fin if p in S else last for p in range(n)]
        names.append("b_" + ("".join(f"{p}." for p in sorted(S)).rstrip(".") or "e"))
        trans.append(t)
    return _dfa(names, trans, n)


def _letter_names(k: int) -> list[str]:
    if k <= 26:
        return list(string.ascii_lowercase[:k])
    return [f"x{i}" for i in range(1, k + 1)]


def _sample_transformation(rng, n):
    last, fin = n - 1, n - 2
    mids = n - 3
    kinds = [1, 2, 3] if mids else [1, 2]
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == 1:
        img = rng.integers(1, n, size=mids)
        return [last, *img.tolist(), last, last]
    if kind == 2:
        choices = np.array([*range(1, n - 2), last])
        img = choices[rng.integers(len(choices), size=mids)]
        return [fin, *img.tolist(), last, last]
    q = int(rng.integers(1, n - 2))
    img = np.where(rng.integers(2, size=mids) == 1, fin, last)
    return [q, *img.tolist(), last, last]


def random_bifix_free(n: int, k: int, seed: int, attempts: int = 1000) -> Dfa:
    """Random minimal bifix-free DFA with n states and at most k letters.

    Each letter picks one of the three transformation types with equal
    probability, then a uniform transformation of that type. Duplicate letters
    are dropped. Whole samples are redrawn until the DFA is minimal.
    """
    if n < 3 or k < 1:
        raise InputError("random_bifix_free needs n >= 3 and k >= 1")
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        trans = []
        for _ in range(k):
            t = _sample_transformation(rng, n)
            if t not in trans:
                trans.append(t)
        d = _dfa(_letter_names(len(trans)), trans, n)
        if minimize(d).state_count == n:
            return d
    raise GenerationError(
        f"no minimal bifix-free DFA with n={n}, k={k} after {attempts} samples")


def pad_alphabet(d: Dfa, alphabet) -> Dfa:
    """Extend ``d`` to ``alphabet``; new letters send every state to the last state.

    ``alphabet`` must start with ``d.alphabet``. For DFAs in standard layout the
    last state is empty, so the language is unchanged.
    """
    alphabet = tuple(alphabet)
    if alphabet[: d.symbol_count] != d.alphabet:
        raise InputError("padded alphabet must extend the original one")
    extra = len(alphabet) - d.symbol_count
    if not extra:
        return d
    n = d.state_count
    delta = np.hstack([d.delta, np.full((n, extra), n - 1, dtype=np.int64)])
    return Dfa(alphabet, delta, d.initial, d.finals)


def common_alphabet(d1: Dfa, d2: Dfa) -> tuple[Dfa, Dfa]:
    """Pad two random DFAs (letters a, b, c, ...) to the longer of their alphabets."""
    big = max(d1.alphabet, d2.alphabet, key=len)
    return pad_alphabet(d1, big), pad_alphabet(d2, big)
