"""Pattern relations, class closure, and the congruence invariants."""

import itertools

import pytest

from placto.rewrite import (
    KNUTH,
    SHIFTED_KNUTH,
    Relation,
    RelationSet,
    canonical_word,
    class_dump,
    equiv_class,
    equivalent,
    instantiate,
    neighbors,
    relation_instances,
    verify_factorization,
)
from placto.words import (
    Interval,
    Word,
    all_intervals,
    all_ordered_morphisms,
    all_words,
    apply_morphism,
    concat,
    content,
    restrict,
)

K1, K2 = KNUTH.relations
SP = {rel.name: rel for rel in SHIFTED_KNUTH.relations}


def W(text, n=None):
    return Word.parse(text, n)


class TestInstantiate:
    def test_k1_hit(self):
        assert instantiate(K1, W("132")) == W("312")

    def test_k1_miss_on_increasing_word(self):
        assert instantiate(K1, W("123")) is None

    def test_sp1_hit(self):
        assert instantiate(SP["SP.1"], W("1243")) == W("1423")

    def test_wrong_window_length(self):
        assert instantiate(K1, W("13")) is None

    def test_equalities_respected(self):
        # K.1 allows a = b but not b = c
        assert instantiate(K1, W("121")) == W("211")
        assert instantiate(K1, W("122")) is None


class TestNeighborsAndClasses:
    def test_neighbors_knuth(self):
        assert neighbors(W("312"), KNUTH) == frozenset({W("132")})
        assert neighbors(W("123"), KNUTH) == frozenset()

    def test_neighbors_shifted(self):
        assert W("1423") in neighbors(W("1243"), SHIFTED_KNUTH)

    def test_equiv_class_examples(self):
        assert equiv_class(W("312"), KNUTH) == frozenset({W("312"), W("132")})
        assert equiv_class(W("213"), KNUTH) == frozenset({W("213"), W("231")})
        assert equiv_class(W("12"), SHIFTED_KNUTH) == frozenset({W("12")})

    def test_equivalent(self):
        assert equivalent(W("1243"), W("1423"), SHIFTED_KNUTH)
        assert not equivalent(W("12"), W("21"), KNUTH)
        w = W("3142")
        assert equivalent(w, w, SHIFTED_KNUTH)

    def test_canonical_is_lex_least(self):
        assert canonical_word(W("312"), KNUTH) == W("132")

    def test_class_dump_shape(self):
        dump = class_dump(W("1243"), SHIFTED_KNUTH)
        assert dump == {
            "word": "1243",
            "relation_set": "shifted-knuth",
            "class": ["1243", "1423"],
            "size": 2,
        }


class TestFactorization:
    def test_shifted_refines_knuth_at_4_4(self):
        assert verify_factorization(4, 4)

    def test_single_letter_alphabet_vacuous(self):
        assert verify_factorization(1, 4)

    def test_explicit_sp1_instance_has_knuth_chain(self):
        # suffix 243 ~ 423 is a single K.1 move
        assert instantiate(K1, W("243")) == W("423")
        assert equivalent(W("1243"), W("1423"), KNUTH)

    def test_relation_instance_counts(self):
        # chain a<=b<c over {1..3}: (a,b,c) in {112, 113, 123, 223} -> 4
        assert sum(1 for _ in relation_instances(K1, 3)) == 4


def _classes(rels, n, max_degree):
    for degree in range(1, max_degree + 1):
        seen = set()
        for w in all_words(n, degree):
            if w in seen:
                continue
            cls = equiv_class(w, rels)
            seen |= cls
            yield cls


@pytest.mark.parametrize("rels", [KNUTH, SHIFTED_KNUTH], ids=lambda r: r.name)
def test_content_conserved_on_classes(rels):
    for cls in _classes(rels, 4, 6):
        assert len({content(w) for w in cls}) == 1


def test_congruence_under_concatenation():
    # if u1 ~ u2 and v1 ~ v2 then u1 v1 ~ u2 v2; all pairs of degree <= 3, n = 3
    words = [w for d in range(1, 4) for w in all_words(3, d)]
    for u1 in words:
        for u2 in equiv_class(u1, KNUTH):
            for v1 in words:
                for v2 in equiv_class(v1, KNUTH):
                    assert equivalent(concat(u1, v1), concat(u2, v2), KNUTH)


@pytest.mark.parametrize("rels", [KNUTH, SHIFTED_KNUTH], ids=lambda r: r.name)
def test_ordered_morphism_stability(rels):
    # w1 ~ w2 implies their images under any ordered morphism are equivalent
    morphisms = [m for m in all_ordered_morphisms(4, 4) if m.pairs]
    for cls in _classes(rels, 4, 5):
        members = sorted(cls, key=lambda w: w.letters)
        base = members[0]
        support = set(base.letters)
        for m in morphisms:
            if not support <= m.source:
                continue
            image_classes = {canonical_word(apply_morphism(w, m), rels) for w in members}
            assert len(image_classes) == 1


def test_restriction_stability_knuth():
    # w1 ~ w2 (Knuth) implies the interval restrictions are Knuth-equivalent
    intervals = list(all_intervals(4))
    for cls in _classes(KNUTH, 4, 5):
        members = sorted(cls, key=lambda w: w.letters)
        for iv in intervals:
            keys = {canonical_word(restrict(w, iv), KNUTH) for w in members}
            assert len(keys) == 1


def test_restriction_of_shifted_classes_lands_in_knuth():
    # shifted-equivalent words restrict to Knuth-equivalent words (not
    # necessarily shifted-equivalent ones)
    intervals = list(all_intervals(4))
    for cls in _classes(SHIFTED_KNUTH, 4, 5):
        members = sorted(cls, key=lambda w: w.letters)
        for iv in intervals:
            keys = {canonical_word(restrict(w, iv), KNUTH) for w in members}
            assert len(keys) == 1


def test_negative_control_restriction_not_shifted_stable():
    """There are shifted-equivalent words whose restrictions are not
    shifted-equivalent; the first witness appears already at degree 4."""
    u, v = W("1243"), W("1423")
    assert equivalent(u, v, SHIFTED_KNUTH)
    iv = Interval(2, 4)
    ru, rv = restrict(u, iv), restrict(v, iv)
    assert not equivalent(ru, rv, SHIFTED_KNUTH)
    assert equivalent(ru, rv, KNUTH)


class TestCustomRelations:
    def test_from_json(self):
        rels = RelationSet.from_json(
            '[{"left": "ab", "right": "ba", "constraints": "a<b"}]'
        )
        assert rels.name == "custom"
        assert equivalent(W("12"), W("21"), rels)
        assert sorted(str(w) for w in equiv_class(W("231"), rels)) == [
            "123",
            "132",
            "213",
            "231",
            "312",
            "321",
        ]

    def test_empty_relation_set_gives_singleton_classes(self):
        free = RelationSet.custom(())
        assert equiv_class(W("1243"), free) == frozenset({W("1243")})

    def test_homogeneity_enforced(self):
        with pytest.raises(ValueError):
            Relation("bad", "ab", "aab", "a<b")

    def test_chain_must_cover_pattern(self):
        with pytest.raises(ValueError):
            Relation("bad", "abc", "cba", "a<b")
