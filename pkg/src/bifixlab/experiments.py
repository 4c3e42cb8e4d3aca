"""Experiment harness: observed complexities against the closed-form values.

Each experiment returns a :class:`Report`. A measure passes when
``observed == expected`` (``eq``), ``observed <= expected`` (``le``),
``lo <= observed <= hi`` (``range``), or always (``record``, observation only).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import limits
from .atoms import atom_bound, atom_complexity, atom_count_bound, atoms
from .errors import InputError, ResourceError
from .operations import (boolean, bounds, concat, reverse, reverse_range, star,
                         star_complexity_predicted)
from .semigroup import is_sub_wbf, transition_semigroup, wbf_size_formula
from .witnesses import (atom_witness, common_alphabet, random_bifix_free, revmagic, ternary_dialect,
                        ternary_witness, wstream_alphabet_size, wstream_witness)

RELATIONS = ("eq", "le", "range", "record")

# below this size the ternary stream is generated but bounds are only recorded
TERNARY_ASSERT_FROM = 9


@dataclass
class Measure:
    name: str
    observed: int
    expected: Any = None
    relation: str = "eq"

    @property
    def passed(self) -> bool:
        if self.relation == "eq":
            return self.observed == self.expected
        if self.relation == "le":
            return self.observed <= self.expected
        if self.relation == "range":
            lo, hi = self.expected
            return lo <= self.observed <= hi
        return True


@dataclass
class Report:
    experiment: str
    params: dict
    measures: list = field(default_factory=list)

    def add(self, name, observed, expected=None, relation="eq"):
        if relation not in RELATIONS:
            raise InputError(f"unknown relation {relation!r}")
        self.measures.append(Measure(name, int(observed), expected, relation))

    @property
    def passed(self) -> bool:
        return all(m.passed for m in self.measures)

    def to_dict(self) -> dict:
        def plain(v):
            return list(v) if isinstance(v, tuple) else v

        return {
            "experiment": self.experiment,
            "params": dict(self.params),
            "measures": [m.name for m in self.measures],
            "observed": {m.name: m.observed for m in self.measures},
            "expected": {m.name: plain(m.expected) for m in self.measures},
            "relation": {m.name: m.relation for m in self.measures},
            "passed": {m.name: m.passed for m in self.measures},
            "all_passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def format_table(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = ("measure", "observed", "expected", "relation", "status")
        rows = []
        for m in self.measures:
            exp = m.expected
            if isinstance(exp, tuple):
                exp = f"[{exp[0]},{exp[1]}]"
            rows.append((m.name, str(m.observed), "-" if exp is None else str(exp),
                         m.relation, "PASS" if m.passed else "FAIL"))
        widths = [max(len(r[i]) for r in [head, *rows]) for i in range(len(head))]
        lines = [f"experiment: {self.experiment}  {params}".rstrip()]
        for r in [head, *rows]:
            lines.append("  ".join(c.ljust(w) if i in (0, 3) else c.rjust(w)
                                   for i, (c, w) in enumerate(zip(r, widths))).rstrip())
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def table_ops(m: int, n: int, max_states=None) -> Report:
    """All basic operations on the ternary stream and its b/c dialect."""
    if m < 7 or n < 7:
        raise InputError("the ternary stream is defined for m, n >= 7")
    report = Report("table-ops", {"m": m, "n": n})
    rel = "eq" if min(m, n) >= TERNARY_ASSERT_FROM else "record"
    expect = bounds(m, n)
    lhs, rhs = ternary_witness(m), ternary_dialect(n)
    for name, kind in (("union", "union"), ("symdiff", "symmetric_difference"),
                       ("intersection", "intersection"), ("difference", "difference")):
        report.add(name, boolean(lhs, rhs, kind).state_count, expect[name], rel)
    base_n = ternary_witness(n)
    report.add("product", concat(lhs, base_n, max_states).state_count, expect["concat"], rel)
    report.add("star", star(base_n, max_states).state_count, expect["star"], rel)
    report.add("reversal", reverse(base_n, max_states).state_count, expect["reverse"], rel)
    return report


def verify_syntactic(n: int, max_elements=None) -> Report:
    if n < 6:
        raise InputError("syntactic verification needs n >= 6")
    size = wstream_alphabet_size(n)
    cap = limits.max_elements(max_elements, n)
    expected = wbf_size_formula(n)
    if expected > cap:
        raise ResourceError(f"expected {expected} elements exceeds the cap {cap}")
    if size > limits.DEFAULT_MAX_LETTERS:
        raise ResourceError(f"wstream({n}) needs {size} letters, cap is "
                            f"{limits.DEFAULT_MAX_LETTERS}")
    d = wstream_witness(n)
    sg = transition_semigroup(d, cap)
    report = Report("verify-syntactic", {"n": n})
    report.add("alphabet", d.symbol_count, size)
    report.add("syntactic", sg.size, expected)
    report.add("sub_wbf", int(is_sub_wbf(sg)), 1)
    return report


def atom_order(n: int, sets) -> list:
    """{0}, {n-2}, the empty set, then middle subsets by size and lexicographically."""
    def key(s):
        if s == {0}:
            return (0, 0, [])
        if s == {n - 2}:
            return (1, 0, [])
        return (2, len(s), sorted(s))
    return sorted(sets, key=key)


def _atom_name(s):
    return "A{" + ",".join(map(str, sorted(s))) + "}"


def verify_atoms(n: int) -> Report:
    d = atom_witness(n)
    report = Report("verify-atoms", {"n": n})
    found = atom_order(n, atoms(d))
    report.add("atoms", len(found), atom_count_bound(n))
    for s in found:
        report.add(_atom_name(s), atom_complexity(d, s), atom_bound(n, s))
    return report


def verify_revmagic(n: int, max_states=None) -> Report:
    lo, hi = reverse_range(n)
    report = Report("verify-revmagic", {"n": n, "range": f"[{lo},{hi}]"})
    for alpha in range(lo, hi + 1):
        d = revmagic(n, alpha)
        report.add(f"alpha={alpha}", reverse(d, max_states).state_count, alpha)
    return report


def verify_product(n: int, trials: int = 20, seed: int = 0, letters: int = 3,
                   max_states=None) -> Report:
    """Random pairs with left sizes cycling through 3..n and right size n."""
    if n < 3:
        raise InputError("product verification needs n >= 3")
    report = Report("verify-product", {"n": n, "trials": trials, "seed": seed})
    for t in range(trials):
        m = 3 + t % (n - 2)
        lhs = random_bifix_free(m, letters, seed + 2 * t)
        rhs = random_bifix_free(n, letters, seed + 2 * t + 1)
        lhs, rhs = common_alphabet(lhs, rhs)
        report.add(f"trial{t}:m={m}", concat(lhs, rhs, max_states).state_count, m + n - 2)
    return report


def verify_star(n: int, trials: int = 20, seed: int = 0, letters: int = 3,
                max_states=None) -> Report:
    if n < 3:
        raise InputError("star verification needs n >= 3")
    report = Report("verify-star", {"n": n, "trials": trials, "seed": seed})
    for t in range(trials):
        d = random_bifix_free(n, letters, seed + t)
        observed = star(d, max_states).state_count
        report.add(f"trial{t}", observed, star_complexity_predicted(d))
        report.add(f"trial{t}:range", observed, (n - 2, n - 1), "range")
    return report


EXPERIMENTS = {
    "table-ops": table_ops,
    "syntactic": verify_syntactic,
    "atoms": verify_atoms,
    "revmagic": verify_revmagic,
    "product": verify_product,
    "star": verify_star,
}


def run_experiment(name: str, **params) -> Report:
    try:
        fn = EXPERIMENTS[name]
    except KeyError:
        raise InputError(f"unknown experiment {name!r}") from None
    return fn(**{k: v for k, v in params.items() if v is not None})

