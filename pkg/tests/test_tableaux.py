"""Insertion algorithms, shifted tableaux, and hook-word machinery.

Brute-force oracles (subsequence enumeration, independent hook predicate)
are defined here first and the library answers are checked against them.
"""

import itertools
import random

import pytest

from placto.rewrite import KNUTH, SHIFTED_KNUTH, equiv_class, equivalent
from placto.tableaux import (
    EMPTY_TABLEAU,
    ShiftedTableau,
    Tableau,
    enumerate_hook,
    enumerate_hook_by_filter,
    enumerate_shssyt,
    enumerate_ssyt,
    hook_factorization_check,
    is_hook_word,
    longest_hook_subword,
    longest_weakly_increasing_subword,
    mixed_insert,
    mixed_insert_word,
    p_tableau,
    partitions,
    reading_word,
    schensted_insert,
    strict_partitions,
)
from placto.words import Word, all_words


def W(text, n=None):
    return Word.parse(text, n)


# --- independent oracles -----------------------------------------------


def _hook_oracle(seq):
    """Hook predicate by trying every split point."""
    for k in range(len(seq) + 1):
        head_ok = all(seq[i] > seq[i + 1] for i in range(k - 1))
        tail_ok = all(seq[i] <= seq[i + 1] for i in range(k, len(seq) - 1))
        if head_ok and tail_ok:
            return True
    return False


def _longest_hook_oracle(seq):
    """Longest hook subword by enumerating all 2^len subsequences."""
    best = 0
    for mask in range(1 << len(seq)):
        sub = [seq[i] for i in range(len(seq)) if mask >> i & 1]
        if len(sub) > best and _hook_oracle(sub):
            best = len(sub)
    return best


# --- Schensted insertion ------------------------------------------------


class TestSchensted:
    def test_first_insertion(self):
        assert schensted_insert(EMPTY_TABLEAU, 3) == Tableau(((3,),))

    def test_bump(self):
        assert schensted_insert(Tableau(((3,),)), 1) == Tableau(((1,), (3,)))

    def test_append(self):
        assert schensted_insert(Tableau(((1,), (3,))), 2) == Tableau(((1, 2), (3,)))

    def test_p_tableau(self):
        assert p_tableau(W("312")) == Tableau(((1, 2), (3,)))
        assert p_tableau(W("", 1)) == EMPTY_TABLEAU

    def test_knuth_equivalent_words_share_tableau(self):
        assert p_tableau(W("132")) == p_tableau(W("312"))

    def test_reading_word(self):
        assert reading_word(Tableau(((1, 2), (3,)))) == W("312")
        assert reading_word(Tableau(((1, 1, 2),))) == W("112")

    def test_reading_word_three_rows(self):
        t = Tableau(((1, 1, 1, 2, 4, 6, 7), (2, 5, 5, 5, 5), (4, 9)))
        assert reading_word(t) == Word((4, 9, 2, 5, 5, 5, 5, 1, 1, 1, 2, 4, 6, 7), 9)

    def test_invalid_tableau_rejected(self):
        with pytest.raises(ValueError):
            Tableau(((1, 2), (1,)))  # column not strictly increasing
        with pytest.raises(ValueError):
            Tableau(((2, 1),))  # row decreasing
        with pytest.raises(ValueError):
            Tableau(((1,), (2, 3)))  # shape not a partition

    def test_reading_word_roundtrip(self):
        # p_tableau(reading_word(T)) == T for every SSYT up to size 5, n = 3
        for size in range(0, 6):
            for shape in partitions(size):
                for t in enumerate_ssyt(shape, 3):
                    assert p_tableau(reading_word(t, 3)) == t

    def test_reading_word_is_knuth_equivalent_to_source(self):
        for w in all_words(3, 5):
            assert equivalent(reading_word(p_tableau(w), 3), w, KNUTH)

    def test_column_count_equals_longest_weakly_increasing_subword(self):
        for w in all_words(4, 5):
            t = p_tableau(w)
            cols = t.shape[0] if t.rows else 0
            assert cols == longest_weakly_increasing_subword(w)


# --- mixed insertion ----------------------------------------------------


class TestMixedInsertion:
    def test_single_letter(self):
        assert mixed_insert_word(W("1")) == ShiftedTableau.from_strings([["1"]])

    def test_two_letters_descending(self):
        # 1 bumps the diagonal 2, which gets primed and lands in column 2
        assert mixed_insert_word(W("21")) == ShiftedTableau.from_strings([["1", "2'"]])

    def test_reference_insertion_trace(self):
        start = ShiftedTableau.from_strings([["1", "3", "6'"], ["4", "7"], ["8"]])
        result = mixed_insert(start, 2)
        assert result == ShiftedTableau.from_strings(
            [["1", "2", "4'", "6'"], ["3", "7"], ["8"]]
        )

    def test_rejects_bad_letter(self):
        with pytest.raises(ValueError):
            mixed_insert(ShiftedTableau(()), 0)

    def test_output_always_valid(self):
        # ShiftedTableau validates all four structural invariants on
        # construction, so building the insertion tableau is itself the check
        for degree in range(0, 8):
            for w in all_words(4, degree):
                t = mixed_insert_word(w)
                assert t.size == degree

    def test_fibers_match_shifted_classes(self):
        for degree in range(1, 6):
            fibers = {}
            for w in all_words(3, degree):
                fibers.setdefault(mixed_insert_word(w), set()).add(w)
            for members in fibers.values():
                w0 = next(iter(members))
                assert equiv_class(w0, SHIFTED_KNUTH) == frozenset(members)

    def test_both_fiber_partitions_at_n4_degree6(self):
        # insertion fibers == rewrite classes for all 4^6 words, both systems
        from placto.verify import _partition_degree

        for rels, insert in ((KNUTH, p_tableau), (SHIFTED_KNUTH, mixed_insert_word)):
            classes = {frozenset(c) for c in _partition_degree(rels, 4, 6)}
            fibers = {}
            for w in all_words(4, 6):
                fibers.setdefault(insert(w), set()).add(w.to_bytes())
            assert classes == {frozenset(v) for v in fibers.values()}

    def test_shifted_tableau_invariants_enforced(self):
        with pytest.raises(ValueError):
            ShiftedTableau.from_strings([["1'"]])  # primed diagonal
        with pytest.raises(ValueError):
            ShiftedTableau.from_strings([["1", "2'", "2'"]])  # primed repeat in row
        with pytest.raises(ValueError):
            ShiftedTableau.from_strings([["1", "2"], ["2"]])  # unprimed repeat in column
        with pytest.raises(ValueError):
            ShiftedTableau.from_strings([["1"], ["2"]])  # shape not strict

    def test_json_serialization(self):
        t = ShiftedTableau.from_strings([["1", "2'"], []][:1])
        assert t.to_json() == {"shape": [2], "rows": [["1", "2'"]]}


# --- hook words ---------------------------------------------------------


class TestHookWords:
    def test_examples(self):
        assert is_hook_word(W("4213"))
        assert is_hook_word(W("12"))
        assert not is_hook_word(W("121"))
        assert is_hook_word(W("321"))
        assert is_hook_word(W("", 1))

    def test_matches_oracle(self):
        for degree in range(0, 6):
            for w in all_words(3, degree):
                assert is_hook_word(w) == _hook_oracle(w.letters)

    def test_every_length_two_word_is_hook(self):
        assert all(is_hook_word(w) for w in all_words(4, 2))

    def test_longest_hook_subword_examples(self):
        assert longest_hook_subword(W("3142")) == 3
        assert longest_hook_subword(W("1234")) == 4  # weakly increasing word
        # 243 is not itself a hook word, so the longest hook subword has
        # length 2 (oracle-checked below)
        assert longest_hook_subword(W("243")) == _longest_hook_oracle((2, 4, 3)) == 2

    def test_longest_hook_subword_matches_oracle_exhaustive(self):
        for degree in range(0, 7):
            for w in all_words(3, degree):
                assert longest_hook_subword(w) == _longest_hook_oracle(w.letters)

    def test_longest_hook_subword_matches_oracle_random_longer(self):
        rng = random.Random(20240811)
        for _ in range(40):
            letters = tuple(rng.randint(1, 5) for _ in range(rng.randint(8, 12)))
            w = Word(letters, 5)
            assert longest_hook_subword(w) == _longest_hook_oracle(letters)


class TestHookFactorization:
    def test_patterns_from_distinct_letters(self):
        # on letters x < z, the (2,1) hooks are x z y-style words
        assert hook_factorization_check(W("132"), (2, 1))
        assert hook_factorization_check(W("121"), (2, 1))
        assert not hook_factorization_check(W("123"), (2, 1))

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            hook_factorization_check(W("12"), (2, 1))

    def test_non_strict_shape_rejected(self):
        with pytest.raises(ValueError):
            hook_factorization_check(W("1212"), (2, 2))

    def test_enumerate_hook_small(self):
        assert enumerate_hook((2, 1), 2) == {W("121"), W("221")}
        assert enumerate_hook((1,), 3) == {W("1", 3), W("2", 3), W("3", 3)}

    def test_enumerate_hook_distinct_content_count(self):
        # two hook words per 3-subset, one trailing letter each: 8 in all
        words = enumerate_hook((2, 1), 4)
        distinct = {w for w in words if sorted(w.letters) == [1, 2, 3]}
        assert {str(w) for w in distinct} == {"132", "231"}

    @pytest.mark.parametrize(
        "nu,n",
        [((1,), 3), ((2,), 3), ((2, 1), 3), ((3,), 3), ((3, 1), 3), ((2, 1), 4), ((3, 2), 2)],
    )
    def test_generative_matches_filter(self, nu, n):
        assert enumerate_hook(nu, n) == enumerate_hook_by_filter(nu, n)

    def test_unique_hook_word_per_shifted_class_degree_six(self):
        # extends the acceptance check one degree further at n = 4
        from placto.verify import _partition_degree

        shapes = list(strict_partitions(6))
        for cls in _partition_degree(SHIFTED_KNUTH, 4, 6):
            hits = sum(
                1
                for wb in cls
                for nu in shapes
                if hook_factorization_check(Word(tuple(wb), 4), nu)
            )
            assert hits == 1

    def test_hook_words_mixed_insert_to_their_shape(self):
        # the hook words of shape nu are exactly the words whose mixed
        # insertion tableau has shape nu, one per tableau
        for nu in [(2, 1), (3,), (3, 1), (4,)]:
            words = enumerate_hook(nu, 3)
            tableaux = {mixed_insert_word(w) for w in words}
            assert len(tableaux) == len(words)
            assert all(t.shape == nu for t in tableaux)
            assert tableaux == set(enumerate_shssyt(nu, 3))


# --- enumerations -------------------------------------------------------


class TestEnumerations:
    def test_ssyt_counts(self):
        assert len(enumerate_ssyt((1, 1), 2)) == 1
        assert {t.rows for t in enumerate_ssyt((2,), 2)} == {((1, 1),), ((1, 2),), ((2, 2),)}

    def test_shssyt_shape_2_1_n2(self):
        tableaux = enumerate_shssyt((2, 1), 2)
        assert {mixed_insert_word(W("121")), mixed_insert_word(W("221"))} == set(tableaux)

    def test_shssyt_all_valid_by_construction(self):
        # construction already validates; spot-check contents
        tabs = enumerate_shssyt((3, 1), 3)
        assert len(tabs) == len(set(tabs))
        assert all(t.shape == (3, 1) for t in tabs)

    def test_partitions_order(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(strict_partitions(5)) == [(5,), (4, 1), (3, 2)]
