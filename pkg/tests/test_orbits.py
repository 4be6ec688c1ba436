"""Tests for the symmetry-orbit engine."""

import pytest

from freefusion import (
    BUILTIN_PERMUTATIONS,
    DUAL,
    DUAL_GAMMA,
    GAMMA,
    IDENTITY,
    CompactCheck,
    GeneratorOrbitInfiniteError,
    IncompatiblePermutationError,
    IrrPermutation,
    all_words,
    compact_action_check,
    custom_permutation,
    orbit,
    parse_word,
    verify_fusion_compatible,
    words_of_length,
)
from freefusion.words import EMPTY_WORD


class TestBuiltins:
    def test_registry(self):
        assert set(BUILTIN_PERMUTATIONS) == {
            "identity",
            "gamma",
            "dual",
            "dual-gamma",
        }
        assert BUILTIN_PERMUTATIONS["gamma"] is GAMMA

    def test_actions_on_a_word(self):
        w = parse_word("aab")
        assert str(IDENTITY(w)) == "aab"
        assert str(GAMMA(w)) == "bba"
        assert str(DUAL(w)) == "abb"
        assert str(DUAL_GAMMA(w)) == "baa"

    def test_anti_flags(self):
        assert not IDENTITY.anti
        assert not GAMMA.anti
        assert DUAL.anti
        assert DUAL_GAMMA.anti

    def test_group_relations(self):
        # each builtin squares to the identity and gamma commutes with dual
        for p in BUILTIN_PERMUTATIONS.values():
            for w in all_words(6):
                assert p(p(w)) == w
        for w in all_words(6):
            assert GAMMA(DUAL(w)) == DUAL(GAMMA(w)) == DUAL_GAMMA(w)

    def test_length_change_rejected(self):
        bad = IrrPermutation("chop", lambda w: w.prefix(max(0, w.length - 1)))
        with pytest.raises(ValueError):
            bad(parse_word("ab"))


class TestFusionCompatibility:
    @pytest.mark.parametrize("name", sorted(BUILTIN_PERMUTATIONS))
    def test_builtins_pass(self, name):
        assert verify_fusion_compatible(BUILTIN_PERMUTATIONS[name], 6)

    def test_dual_fails_as_straight_symmetry(self):
        # the dual only respects decompositions with the factors swapped
        straight = IrrPermutation("dual-straight", lambda w: w.dual())
        assert not verify_fusion_compatible(straight, 4)

    def test_transposition_of_letters_at_one_length_fails(self):
        # swapping ab with aa is a degree-preserving bijection but it
        # tears the decomposition of a*b apart from that of a*a
        swap = IrrPermutation(
            "swap-ab-aa",
            lambda w: {
                parse_word("ab"): parse_word("aa"),
                parse_word("aa"): parse_word("ab"),
            }.get(w, w),
        )
        assert not verify_fusion_compatible(swap, 4)

    def test_negative_bound_rejected(self):
        with pytest.raises(ValueError):
            verify_fusion_compatible(IDENTITY, -1)


class TestCustomPermutation:
    def test_empty_table_is_identity(self):
        p = custom_permutation("noop", {})
        for w in all_words(5):
            assert p(w) == w

    def test_gamma_as_table(self):
        table = {w: w.gamma() for w in all_words(6) if w.length}
        p = custom_permutation("swap-by-table", table, check_len=5)
        assert p(parse_word("ab")) == parse_word("ba")
        assert p(parse_word("aaa")) == parse_word("bbb")

    def test_length_change_rejected(self):
        with pytest.raises(IncompatiblePermutationError):
            custom_permutation("shrink", {parse_word("ab"): parse_word("a")})

    def test_non_bijective_rejected(self):
        table = {
            parse_word("ab"): parse_word("aa"),
            parse_word("ba"): parse_word("aa"),
        }
        with pytest.raises(IncompatiblePermutationError):
            custom_permutation("collapse", table)

    def test_support_not_closed_rejected(self):
        with pytest.raises(IncompatiblePermutationError):
            custom_permutation("shift", {parse_word("ab"): parse_word("ba")})

    def test_incompatible_bijection_rejected(self):
        table = {
            parse_word("ab"): parse_word("aa"),
            parse_word("aa"): parse_word("ab"),
        }
        with pytest.raises(IncompatiblePermutationError):
            custom_permutation("tear", table)


class TestOrbit:
    def test_singletons(self):
        rep = orbit(parse_word("ab"), [IDENTITY])
        assert rep.orbit == frozenset({parse_word("ab")})
        assert rep.size == 1
        assert not rep.truncated

    def test_gamma_pair(self):
        rep = orbit(parse_word("aab"), [GAMMA])
        assert rep.orbit == frozenset({parse_word("aab"), parse_word("bba")})
        assert rep.size == 2

    def test_full_builtin_orbit_of_size_four(self):
        rep = orbit(parse_word("aab"), [GAMMA, DUAL])
        assert rep.orbit == frozenset(
            {parse_word("aab"), parse_word("bba"), parse_word("abb"), parse_word("baa")}
        )
        assert rep.size == 4

    def test_palindromic_fixed_words_give_size_two(self):
        # gamma(aba) = bab and dual(aba) = aba, so the pair closes up
        rep = orbit(parse_word("aba"), [GAMMA, DUAL])
        assert rep.orbit == frozenset({parse_word("aba"), parse_word("bab")})
        assert rep.size == 2

    def test_empty_word_fixed(self):
        rep = orbit(EMPTY_WORD, [GAMMA, DUAL])
        assert rep.orbit == frozenset({EMPTY_WORD})
        assert rep.size == 1

    def test_orbit_closure(self):
        gens = [GAMMA, DUAL]
        for w in all_words(6):
            rep = orbit(w, gens)
            for x in rep.orbit:
                for p in gens:
                    assert p(x) in rep.orbit

    def test_builtin_orbit_sizes(self):
        for length in range(0, 8):
            for w in words_of_length(length):
                size = orbit(w, [GAMMA, DUAL]).size
                assert size in {1, 2, 4}
                assert (size == 1) == (length == 0)

    def test_gamma_only_sizes(self):
        for length in range(0, 8):
            for w in words_of_length(length):
                size = orbit(w, [GAMMA]).size
                assert size == (1 if length == 0 else 2)

    def test_truncation_at_cap(self):
        rep = orbit(parse_word("aab"), [GAMMA, DUAL], cap=3)
        assert rep.truncated
        assert rep.size <= 3

    def test_cap_one(self):
        rep = orbit(parse_word("ab"), [GAMMA], cap=1)
        assert rep.truncated
        assert rep.orbit == frozenset({parse_word("ab")})

    def test_cap_not_exceeded_even_when_exact(self):
        rep = orbit(parse_word("ab"), [GAMMA], cap=2)
        assert not rep.truncated
        assert rep.size == 2

    def test_bad_cap_rejected(self):
        with pytest.raises(ValueError):
            orbit(parse_word("a"), [GAMMA], cap=0)

    def test_json_shape(self):
        rep = orbit(parse_word("ba"), [GAMMA])
        assert rep.to_json_dict() == {
            "seed": "ba",
            "orbit": ["ab", "ba"],
            "size": 2,
            "truncated": False,
        }


class TestCompactActionCheck:
    def test_gamma_family(self):
        res = compact_action_check([GAMMA], parse_word("a"), max_len=6)
        assert res == CompactCheck(compact=True, max_orbit_size=2, words_checked=127)

    def test_full_builtin_family(self):
        res = compact_action_check([GAMMA, DUAL], parse_word("a"), max_len=6)
        assert res.compact
        assert res.max_orbit_size == 4

    def test_words_checked_counts_all_words(self):
        res = compact_action_check([IDENTITY], parse_word("a"), max_len=4)
        assert res.words_checked == 31

    def test_infinite_generator_orbit_raises(self):
        # a degree-preserving map with an unbounded forward orbit on long
        # words: rotate the letters of every word of length 5 one step
        def rotate(w):
            if w.length != 5:
                return w
            return w.suffix(4) + w.prefix(1)

        shifty = IrrPermutation("rotate5", rotate)
        seed = parse_word("aaaab")
        with pytest.raises(GeneratorOrbitInfiniteError):
            compact_action_check([shifty], seed, max_len=3, cap=2)

    def test_truncation_elsewhere_reports_noncompact(self):
        res = compact_action_check([GAMMA, DUAL], parse_word("a"), max_len=4, cap=3)
        assert not res.compact
        assert res.max_orbit_size <= 3
