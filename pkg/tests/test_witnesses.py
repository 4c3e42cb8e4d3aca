import pytest
from hypothesis import given
from hypothesis import strategies as st

from bifixlab import (Dfa, GenerationError, InputError, WitnessSpec, atom_witness, concat,
                      dialect, is_bifix_free, is_isomorphic, is_sub_wbf, minimize,
                      random_bifix_free, reverse, reverse_range, revmagic, state_complexity,
                      symmetric_difference, ternary_dialect, ternary_witness,
                      transition_semigroup, unary_free, wstream_witness)
from bifixlab.freeness import is_standard_form
from bifixlab.witnesses import (common_alphabet, pad_alphabet, revmagic_subsets,
                                wstream_alphabet_size)


def well_formed(d, sub_wbf=True):
    ok = is_standard_form(d) and is_bifix_free(d) and minimize(d).state_count == d.state_count
    return ok and (not sub_wbf or is_sub_wbf(transition_semigroup(d)))


class TestUnary:
    def test_three(self):
        d = unary_free(3)
        assert d.accepts([0]) and not d.accepts([]) and not d.accepts([0, 0])

    def test_five(self):
        d = unary_free(5)
        assert [d.accepts([0] * i) for i in range(6)] == [False, False, False, True, False, False]
        # the chain letter maps middle states into middle states, so it lies outside W_bf
        assert well_formed(d, sub_wbf=False)
        assert not is_sub_wbf(transition_semigroup(d))

    @pytest.mark.parametrize("m,n", [(3, 3), (3, 7), (5, 4), (8, 8)])
    def test_concat(self, m, n):
        assert concat(unary_free(m), unary_free(n)).state_count == m + n - 2

    def test_too_small(self):
        with pytest.raises(InputError):
            unary_free(2)


class TestTernary:
    def test_nine_c(self):
        d = ternary_witness(9)
        # (1 -> 4)(4 -> 7)(6, 5, 3, 2) and {0, 7, 8} -> 8
        assert list(d.transformation("c")) == [8, 4, 6, 2, 7, 3, 5, 8, 8]

    def test_nine_a_b(self):
        d = ternary_witness(9)
        assert list(d.transformation("a")) == [1, 7, 7, 7, 7, 7, 7, 8, 8]
        assert list(d.transformation("b")) == [8, 2, 3, 4, 5, 6, 1, 8, 8]

    def test_reverse(self):
        assert reverse(ternary_witness(9)).state_count == 66

    def test_symdiff(self):
        assert symmetric_difference(ternary_witness(9), ternary_dialect(9)).state_count == 63

    def test_dialect_swaps(self):
        d, e = ternary_witness(10), ternary_dialect(10)
        assert e.alphabet == d.alphabet
        assert e.transformation("b") == d.transformation("c")
        assert e.transformation("c") == d.transformation("b")

    @pytest.mark.parametrize("n", range(7, 13))
    def test_well_formed(self, n):
        # the closure outgrows the element cap beyond n = 10
        assert well_formed(ternary_witness(n), sub_wbf=n <= 10)
        assert well_formed(ternary_dialect(n), sub_wbf=n <= 10)

    def test_too_small(self):
        with pytest.raises(InputError):
            ternary_witness(6)


class TestWstream:
    @pytest.mark.parametrize("n,size", [(6, 87), (7, 688), (8, 7935)])
    def test_alphabet_size(self, n, size):
        assert wstream_alphabet_size(n) == size
        assert (n - 2) ** (n - 3) + (n - 3) * 2 ** (n - 3) - 1 == size

    @pytest.mark.parametrize("n", [6, 7])
    def test_built(self, n):
        d = wstream_witness(n)
        assert d.symbol_count == wstream_alphabet_size(n)
        assert well_formed(d)

    def test_names(self):
        d = wstream_witness(6)
        assert d.alphabet[:3] == ("b1", "b2", "b3")
        assert d.alphabet[3] == "c000001"
        assert d.alphabet[-1] == "d000021"
        cs = [d.transformation(x) for x in d.alphabet if x.startswith("c")]
        assert cs == sorted(cs)

    def test_cap(self):
        with pytest.raises(InputError):
            wstream_witness(7, max_letters=100)

    def test_too_small(self):
        with pytest.raises(InputError):
            wstream_witness(5)


class TestAtomWitness:
    def test_letters(self):
        assert atom_witness(6).alphabet == ("a", "b", "c", "d", "e1", "e2", "e3")

    @pytest.mark.parametrize("n", [6, 7, 8, 9])
    def test_well_formed(self, n):
        d = atom_witness(n)
        assert d.symbol_count == n + 1
        assert well_formed(d)


class TestRevmagic:
    def test_full(self):
        d = revmagic(6, 10)
        assert len(revmagic_subsets(6, 10)) == 8
        assert reverse(d).state_count == 10

    def test_six_six(self):
        subsets = revmagic_subsets(6, 6)
        assert subsets == [frozenset(), frozenset({1}), frozenset({2}), frozenset({3})]
        assert reverse(revmagic(6, 6)).state_count == 6

    def test_reduction(self):
        d = revmagic(6, 5)
        assert d.state_count == 6
        assert reverse(d).state_count == 5
        assert is_isomorphic(minimize(d), minimize(reverse(revmagic(5, 6))))

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_every_alpha(self, n):
        lo, hi = reverse_range(n)
        for alpha in range(lo, hi + 1):
            d = revmagic(n, alpha)
            assert well_formed(d)
            assert reverse(d).state_count == alpha

    def test_out_of_range(self):
        with pytest.raises(InputError):
            revmagic(6, 11)
        with pytest.raises(InputError):
            revmagic(6, 4)


class TestDialect:
    def test_identity(self):
        d = ternary_witness(9)
        assert dialect(d, {"a": "a", "b": "b", "c": "c"}) == d

    def test_permute_and_delete(self):
        # trie of {a, ab, abc}
        rows = [[1, 5, 5], [5, 2, 5], [5, 5, 3], [5, 5, 5], [5, 5, 5], [5, 5, 5]]
        d = Dfa(("a", "b", "c"), rows, 0, {1, 2, 3})
        e = dialect(d, {"b": "a", "a": "b", "c": None})
        assert e.alphabet == ("a", "b")
        words = {w for w in [("b",), ("b", "a"), ("a",), ("a", "b"), ("b", "a", "b")]
                 if e.accepts(e.encode(w))}
        assert words == {("b",), ("b", "a")}

    def test_not_injective(self):
        with pytest.raises(InputError):
            dialect(ternary_witness(9), {"a": "a", "b": "a"})

    def test_unknown_symbol(self):
        with pytest.raises(InputError):
            dialect(ternary_witness(9), {"z": "a"})


class TestRandom:
    @given(st.integers(3, 8), st.integers(1, 4), st.integers(0, 10**6))
    def test_contract(self, n, k, seed):
        try:
            d = random_bifix_free(n, k, seed)
        except GenerationError:
            # one letter cannot give a minimal DFA beyond the unary chain
            assert k == 1
            return
        assert d.symbol_count <= k
        assert state_complexity(d) == n
        assert well_formed(d)

    def test_deterministic(self):
        assert random_bifix_free(7, 3, 42) == random_bifix_free(7, 3, 42)

    def test_generation_error(self):
        with pytest.raises(GenerationError):
            random_bifix_free(6, 1, 0, attempts=5)

    def test_common_alphabet(self):
        a = random_bifix_free(5, 3, 1)
        b = pad_alphabet(unary_free(4), ("a", "b", "c"))
        x, y = common_alphabet(a, b)
        assert x.alphabet == y.alphabet
        assert state_complexity(y) == 4


class TestWitnessSpec:
    @pytest.mark.parametrize("spec", [WitnessSpec("unary", 5), WitnessSpec("ternary", 9),
                                      WitnessSpec("ternary-dialect", 9),
                                      WitnessSpec("atom_witness", 6),
                                      WitnessSpec("revmagic", 6, alpha=7),
                                      WitnessSpec("random", 6, seed=3, letters=3)])
    def test_build(self, spec):
        assert spec.build().state_count == spec.n

    def test_unknown(self):
        with pytest.raises(InputError):
            WitnessSpec("nope", 5).build()
