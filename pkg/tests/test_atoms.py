import itertools

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from bifixlab import (DomainError, InputError, atom_automaton, atom_bound, atom_complexity,
                      atom_count_bound, atom_witness, atoms, equivalent, minimize,
                      random_bifix_free, unary_free)
from bifixlab.atoms import BOTTOM, atom_automaton_states
from strategies import bifix_free


class TestAtomAutomaton:
    @pytest.mark.parametrize("n", [6, 7])
    def test_initial_atom_is_language(self, n):
        d = atom_witness(n)
        assert equivalent(atom_automaton(d, {0}), d)
        assert minimize(atom_automaton(d, {0})).state_count == n

    @pytest.mark.parametrize("n", [6, 7])
    def test_final_atom_is_epsilon(self, n):
        a = minimize(atom_automaton(atom_witness(n), {n - 2}))
        assert a.state_count == 2
        assert a.accepts([]) and not a.accepts([0])

    def test_empty_state_in_s(self):
        d = atom_witness(6)
        assert not minimize(atom_automaton(d, {5})).finals
        with pytest.raises(DomainError):
            atom_complexity(d, {1, 5})

    def test_out_of_range(self):
        with pytest.raises(InputError):
            atom_automaton(unary_free(4), {7})

    def test_labels(self):
        d = unary_free(4)
        dfa, labels = atom_automaton_states(d, {0})
        assert labels[0] == (frozenset({0}), frozenset({1, 2, 3}))
        assert all(lab is BOTTOM or not (lab[0] & lab[1]) for lab in labels)
        assert dfa.state_count == len(labels)

    @settings(max_examples=25)
    @given(bifix_free(max_states=6))
    def test_partition(self, d):
        n = d.state_count
        listed = atoms(d)
        automata = {s: atom_automaton(d, s) for s in listed}
        delta, _, finals = oracles.raw(d)
        rng = np.random.default_rng(n)
        for _ in range(500):
            w = rng.integers(d.symbol_count, size=int(rng.integers(0, 2 * n + 1))).tolist()
            s = frozenset(q for q in range(n) if oracles.run(delta, q, w) in finals)
            assert s in automata
            for other, a in automata.items():
                assert a.accepts(w) == (other == s)


class TestAtoms:
    def test_atom_witness_six(self):
        found = atoms(atom_witness(6))
        assert len(found) == 10
        expected = {frozenset({0}), frozenset({4})}
        expected |= {frozenset(c) for r in range(4) for c in itertools.combinations([1, 2, 3], r)}
        assert set(found) == expected

    def test_unary(self):
        d = unary_free(4)
        delta, _, finals = oracles.raw(d)
        brute = set()
        for length in range(7):
            for w in itertools.product([0], repeat=length):
                brute.add(frozenset(q for q in range(4) if oracles.run(delta, q, w) in finals))
        assert set(atoms(d)) == brute == {frozenset({0}), frozenset({1}), frozenset({2}),
                                          frozenset()}

    def test_sorted(self):
        found = atoms(atom_witness(7))
        assert found == sorted(found, key=lambda s: (len(s), sorted(s)))

    @settings(max_examples=40)
    @given(bifix_free(max_states=7))
    def test_count_bound(self, d):
        assert len(atoms(d)) <= atom_count_bound(d.state_count)

    @settings(max_examples=20)
    @given(bifix_free(max_states=5, letters=2))
    def test_matches_nonempty_atom_automata(self, d):
        n = d.state_count
        nonempty = {frozenset(s) for r in range(n + 1)
                    for s in itertools.combinations(range(n), r)
                    if minimize(atom_automaton(d, s)).finals}
        assert set(atoms(d)) == nonempty

    @pytest.mark.parametrize("n", [6, 7])
    def test_matches_monoid_oracle(self, n):
        d = atom_witness(n)
        delta, _, finals = oracles.raw(d)
        assert set(atoms(d)) == oracles.atom_sets(delta, finals)


class TestComplexity:
    @pytest.mark.parametrize("n", [6, 7])
    def test_matches_oracle(self, n):
        d = atom_witness(n)
        delta, _, finals = oracles.raw(d)
        for s in atoms(d):
            assert atom_complexity(d, s) == oracles.atom_complexity(delta, finals, s)

    # values from the independent monoid oracle; one below the printed bounds
    @pytest.mark.parametrize("s,value", [((), 16), ((1,), 14), ((1, 2), 17), ((1, 2, 3), 9),
                                         ((0,), 6), ((4,), 2)])
    def test_atom_witness_six_values(self, s, value):
        assert atom_complexity(atom_witness(6), s) == value

    def test_random_within_bounds(self):
        for seed in range(30):
            d = random_bifix_free(5 + seed % 3, 3, seed)
            n = d.state_count
            for s in atoms(d):
                assert atom_complexity(d, s) <= atom_bound(n, s)

    @settings(max_examples=15)
    @given(bifix_free(min_states=4, max_states=6))
    def test_random_matches_oracle(self, d):
        delta, _, finals = oracles.raw(d)
        for s in atoms(d):
            assert atom_complexity(d, s) == oracles.atom_complexity(delta, finals, s)


class TestBounds:
    def test_examples(self):
        assert atom_bound(6, {1, 2}) == 18
        assert atom_bound(7, set()) == 33
        assert atom_bound(6, {0}) == 6
        assert atom_bound(6, set()) == 17
        assert atom_bound(6, {1}) == 15
        assert atom_bound(6, {1, 2, 3}) == 10
        assert atom_bound(6, {4}) == 2

    def test_count(self):
        assert atom_count_bound(6) == 10 and atom_count_bound(7) == 18

    @pytest.mark.parametrize("s", [{5}, {0, 1}, {1, 4}])
    def test_invalid_sets(self, s):
        with pytest.raises(InputError):
            atom_bound(6, s)

    def test_depends_only_on_size(self):
        for a, b in itertools.combinations(
                [c for c in itertools.combinations(range(1, 5), 2)], 2):
            assert atom_bound(7, a) == atom_bound(7, b)
