"""Degree-truncated integer polynomials over words and their projections.

NcPoly is a finitely supported integer combination of words over {1..n},
truncated at a degree bound: products silently drop terms above the bound,
so per-degree comparisons below the bound are exact.  Projections go two
ways: to a quotient algebra (words replaced by canonical class
representatives) and to the commutative image (words replaced by content
vectors).
"""

from __future__ import annotations

import itertools
from collections import Counter

from .rewrite import KNUTH, RelationSet, canonical_word
from .tableaux import (
    Tableau,
    enumerate_shssyt,
    enumerate_ssyt,
    enumerate_hook,
    is_partition,
    longest_weakly_increasing_subword,
    partitions,
    reading_word,
)
from .words import Word, concat, content


class NcPoly:
    """Integer polynomial over words, graded by word length."""

    __slots__ = ("n", "degree_bound", "terms")

    def __init__(self, n: int, degree_bound: int, terms=None):
        if n < 1 or degree_bound < 0:
            raise ValueError("bad context")
        self.n = n
        self.degree_bound = degree_bound
        clean: dict[Word, int] = {}
        for word, coeff in (terms or {}).items():
            if word.n != n:
                raise ValueError(f"word {word!r} outside context alphabet {n}")
            if len(word) > degree_bound:
                raise ValueError(f"word {word!r} above degree bound {degree_bound}")
            if coeff:
                clean[word] = clean.get(word, 0) + coeff
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def zero(cls, n: int, degree_bound: int) -> "NcPoly":
        return cls(n, degree_bound)

    @classmethod
    def unit(cls, n: int, degree_bound: int) -> "NcPoly":
        return cls(n, degree_bound, {Word((), n): 1})

    @classmethod
    def from_words(cls, words, n: int, degree_bound: int) -> "NcPoly":
        counts = Counter(words)
        return cls(n, degree_bound, dict(counts))

    def _require_context(self, other: "NcPoly") -> None:
        if (self.n, self.degree_bound) != (other.n, other.degree_bound):
            raise ValueError(
                f"context mismatch: (n={self.n}, D={self.degree_bound}) vs "
                f"(n={other.n}, D={other.degree_bound})"
            )

    def coefficient(self, word: Word) -> int:
        return self.terms.get(word, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.degree_bound == other.degree_bound
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.degree_bound, frozenset(self.terms.items())))

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._require_context(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NcPoly(self.n, self.degree_bound, out)

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.n, self.degree_bound, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "NcPoly":
        if not isinstance(scalar, int):
            return NotImplemented
        return NcPoly(self.n, self.degree_bound, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        return nc_mul(self, other)

    def support(self) -> list[Word]:
        return sorted(self.terms, key=lambda w: (len(w), w.letters))

    def monomials_of_content(self, vector: tuple[int, ...]) -> set[Word]:
        return {w for w in self.terms if content(w) == vector}

    def to_json(self) -> dict:
        return {
            "context": {"n": self.n, "D": self.degree_bound},
            "terms": [
                {"word": str(w), "coeff": self.terms[w]} for w in self.support()
            ],
        }

    def __repr__(self) -> str:
        if not self.terms:
            return "NcPoly(0)"
        bits = [f"{c}*{w}" for w, c in sorted(self.terms.items(), key=lambda t: t[0].letters)]
        return "NcPoly(" + " + ".join(bits) + ")"


def nc_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Concatenation product; terms above the degree bound are dropped."""
    p._require_context(q)
    bound = p.degree_bound
    out: dict[Word, int] = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            if len(u) + len(v) > bound:
                continue
            w = concat(u, v)
            out[w] = out.get(w, 0) + cu * cv
    return NcPoly(p.n, bound, out)


class CPoly:
    """Commutative image: integer combination of content vectors."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        for vec, coeff in (terms or {}).items():
            if len(vec) != n:
                raise ValueError(f"content vector {vec} has length != {n}")
            if coeff:
                clean[vec] = clean.get(vec, 0) + coeff
        self.terms = {v: c for v, c in clean.items() if c}

    def coefficient(self, vector: tuple[int, ...]) -> int:
        return self.terms.get(vector, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "CPoly(0)"
        bits = [f"{c}*x^{v}" for v, c in sorted(self.terms.items())]
        return "CPoly(" + " + ".join(bits) + ")"


class QuotientPoly:
    """Polynomial over a quotient monoid; keys are canonical class members."""

    __slots__ = ("n", "degree_bound", "relation_set", "terms")

    def __init__(self, n: int, degree_bound: int, relation_set: RelationSet, terms=None):
        self.n = n
        self.degree_bound = degree_bound
        self.relation_set = relation_set
        clean: dict[Word, int] = {}
        for word, coeff in (terms or {}).items():
            if coeff:
                clean[word] = clean.get(word, 0) + coeff
        self.terms = {w: c for w, c in clean.items() if c}

    def coefficient(self, word: Word) -> int:
        return self.terms.get(canonical_word(word, self.relation_set), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.degree_bound == other.degree_bound
            and self.relation_set == other.relation_set
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"QuotientPoly(0; {self.relation_set.name})"
        bits = [f"{c}*[{w}]" for w, c in sorted(self.terms.items(), key=lambda t: t[0].letters)]
        return f"QuotientPoly({' + '.join(bits)}; {self.relation_set.name})"


def project_quotient(p: NcPoly, rels: RelationSet) -> QuotientPoly:
    """Replace every word by its canonical class representative, merging terms."""
    out: dict[Word, int] = {}
    for w, c in p.terms.items():
        key = canonical_word(w, rels)
        out[key] = out.get(key, 0) + c
    return QuotientPoly(p.n, p.degree_bound, rels, out)


def abelianize(p: NcPoly) -> CPoly:
    """Forget letter order: map every word to its content vector."""
    out: dict[tuple[int, ...], int] = {}
    for w, c in p.terms.items():
        vec = content(w)
        out[vec] = out.get(vec, 0) + c
    return CPoly(p.n, out)


# ---------------------------------------------------------------------------
# Schur-type sums


def free_schur(nu: tuple[int, ...], n: int, degree_bound: int | None = None) -> NcPoly:
    """Sum of the reading words of all semistandard tableaux of shape nu."""
    if not (nu == () or is_partition(nu)):
        raise ValueError(f"{nu} is not a partition")
    size = sum(nu)
    bound = size if degree_bound is None else degree_bound
    if size > bound:
        raise ValueError(f"|{nu}| exceeds degree bound {bound}")
    words = [reading_word(t, n) for t in enumerate_ssyt(nu, n)]
    return NcPoly.from_words(words, n, bound)


def free_schur_by_filter(nu: tuple[int, ...], n: int, degree_bound: int | None = None) -> NcPoly:
    """Independent route to the same sum: filter every word of degree |nu| by
    the weakly-increasing factorization condition."""
    if not (nu == () or is_partition(nu)):
        raise ValueError(f"{nu} is not a partition")
    size = sum(nu)
    bound = size if degree_bound is None else degree_bound
    lengths = list(reversed(nu))
    words = []
    for letters in itertools.product(range(1, n + 1), repeat=size):
        w = Word(letters, n)
        segments = []
        pos = 0
        ok = True
        for length in lengths:
            seg = Word(letters[pos : pos + length], n)
            pos += length
            if any(seg.letters[i] > seg.letters[i + 1] for i in range(len(seg) - 1)):
                ok = False
                break
            if segments and longest_weakly_increasing_subword(segments[-1] + seg) != length:
                ok = False
                break
            segments.append(seg)
        if ok:
            words.append(w)
    return NcPoly.from_words(words, n, bound)


def shifted_free_schur(nu: tuple[int, ...], n: int, degree_bound: int | None = None) -> NcPoly:
    """Indicator sum over the hook-factorization words of the strict shape."""
    size = sum(nu)
    bound = size if degree_bound is None else degree_bound
    if size > bound:
        raise ValueError(f"|{nu}| exceeds degree bound {bound}")
    return NcPoly.from_words(sorted(enumerate_hook(nu, n), key=lambda w: w.letters), n, bound)


def schur_poly(nu: tuple[int, ...], n: int) -> CPoly:
    """Content generating function over semistandard tableaux of shape nu."""
    out: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(nu, n):
        vec = [0] * n
        for row in t.rows:
            for a in row:
                vec[a - 1] += 1
        key = tuple(vec)
        out[key] = out.get(key, 0) + 1
    return CPoly(n, out)


def p_schur_poly(nu: tuple[int, ...], n: int) -> CPoly:
    """Content generating function over shifted semistandard tableaux."""
    out: dict[tuple[int, ...], int] = {}
    for t in enumerate_shssyt(nu, n):
        key = t.content(n)
        out[key] = out.get(key, 0) + 1
    return CPoly(n, out)


def commutator_in_quotient(pa: NcPoly, pb: NcPoly, rels: RelationSet) -> QuotientPoly:
    """Projection of pa*pb - pb*pa; the zero polynomial certifies commutation."""
    return project_quotient(nc_mul(pa, pb) - nc_mul(pb, pa), rels)


def _yamanouchi(shape: tuple[int, ...], n: int) -> Tableau:
    return Tableau(tuple(tuple([i + 1] * length) for i, length in enumerate(shape)))


def lr_expand(nu: tuple[int, ...], mu: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Expand the quotient image of S_nu * S_mu in the plactic Schur basis.

    Greedy subtraction over shapes in decreasing lexicographic order; the
    coefficient of each shape is read off the class of its highest-weight
    tableau.  A nonzero remainder or a negative coefficient raises, since
    either signals an implementation bug.
    """
    size = sum(nu) + sum(mu)
    product = nc_mul(free_schur(nu, n, size), free_schur(mu, n, size))
    remaining = dict(project_quotient(product, KNUTH).terms)
    out: dict[tuple[int, ...], int] = {}
    for shape in partitions(size):
        if len(shape) > n:
            continue
        lead = canonical_word(reading_word(_yamanouchi(shape, n), n), KNUTH)
        coeff = remaining.get(lead, 0)
        if coeff == 0:
            continue
        if coeff < 0:
            raise ValueError(f"negative coefficient {coeff} for shape {shape}")
        basis = project_quotient(free_schur(shape, n, size), KNUTH)
        for key, c in basis.terms.items():
            newc = remaining.get(key, 0) - coeff * c
            if newc:
                remaining[key] = newc
            else:
                remaining.pop(key, None)
        out[shape] = coeff
    if remaining:
        raise ValueError(f"nonzero remainder after exhausting shapes: {remaining}")
    return out
