"""Pattern relations and equivalence-class machinery for monoid quotients.

A relation is a homogeneous rewrite rule given by two letter patterns over the
same variables plus a chain of <= / < constraints that totally orders the
variables (e.g. acb ~ cab for a <= b < c).  The Knuth relations and the eight
degree-4 shifted Knuth relations are shipped as ready-made relation sets;
arbitrary homogeneous relation sets can be loaded from JSON.

Equivalence classes are computed by breadth-first closure over one-step
rewrites (both directions, every window).  Canonical class representatives
are lexicographically least members, memoized per relation set.
"""

from __future__ import annotations

import functools
import json
import re
from dataclasses import dataclass

from . import _kernels
from .words import Word, content

_CHAIN_RE = re.compile(r"^\s*([a-z])\s*((?:(?:<=|<)\s*[a-z]\s*)+)$")
_STEP_RE = re.compile(r"(<=|<)\s*([a-z])\s*")


def _parse_chain(chain: str) -> tuple[tuple[str, ...], tuple[bool, ...]]:
    """Split a constraint chain like 'a<=b<c' into variables and strict flags."""
    m = _CHAIN_RE.match(chain)
    if not m:
        raise ValueError(f"cannot parse constraint chain {chain!r}")
    variables = [m.group(1)]
    strict = []
    for op, var in _STEP_RE.findall(m.group(2)):
        strict.append(op == "<")
        variables.append(var)
    if len(set(variables)) != len(variables):
        raise ValueError(f"repeated variable in chain {chain!r}")
    return tuple(variables), tuple(strict)


@dataclass(frozen=True)
class Relation:
    """Homogeneous pattern relation, e.g. Relation('K.1', 'acb', 'cab', 'a<=b<c')."""

    name: str
    left: str
    right: str
    constraints: str

    def __post_init__(self) -> None:
        variables, _ = _parse_chain(self.constraints)
        if sorted(self.left) != sorted(self.right):
            raise ValueError(f"{self.name}: sides must use the same variable multiset")
        if not set(self.left) <= set(variables):
            raise ValueError(f"{self.name}: pattern variable missing from chain")

    def compiled(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[bool, ...]]:
        """Patterns as variable-index tuples plus the strict flags of the chain."""
        variables, strict = _parse_chain(self.constraints)
        index = {v: i for i, v in enumerate(variables)}
        left = tuple(index[v] for v in self.left)
        right = tuple(index[v] for v in self.right)
        return left, right, strict

    def variables(self) -> tuple[str, ...]:
        return _parse_chain(self.constraints)[0]

    def strict_flags(self) -> tuple[bool, ...]:
        return _parse_chain(self.constraints)[1]

    def instantiate_pattern(self, assignment: dict[str, int], n: int) -> tuple[Word, Word]:
        """Both sides of the relation with concrete letters substituted."""
        left = Word(tuple(assignment[v] for v in self.left), n)
        right = Word(tuple(assignment[v] for v in self.right), n)
        return left, right


@dataclass(frozen=True)
class RelationSet:
    """Named collection of pattern relations defining a monoid congruence."""

    name: str
    relations: tuple[Relation, ...]

    @classmethod
    def custom(cls, relations, name: str = "custom") -> "RelationSet":
        return cls(name, tuple(relations))

    @classmethod
    def from_json(cls, text: str, name: str = "custom") -> "RelationSet":
        """Parse a JSON list of {left, right, constraints[, name]} objects."""
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("custom relation set must be a JSON list")
        relations = []
        for i, entry in enumerate(data):
            relations.append(
                Relation(
                    entry.get("name", f"custom.{i + 1}"),
                    entry["left"],
                    entry["right"],
                    entry["constraints"],
                )
            )
        return cls(name, tuple(relations))


KNUTH = RelationSet(
    "knuth",
    (
        Relation("K.1", "acb", "cab", "a<=b<c"),
        Relation("K.2", "bca", "bac", "a<b<=c"),
    ),
)

SHIFTED_KNUTH = RelationSet(
    "shifted-knuth",
    (
        Relation("SP.1", "abdc", "adbc", "a<=b<=c<d"),
        Relation("SP.2", "acdb", "acbd", "a<=b<c<=d"),
        Relation("SP.3", "dacb", "adcb", "a<=b<c<d"),
        Relation("SP.4", "badc", "bdac", "a<b<=c<d"),
        Relation("SP.5", "cbda", "cdba", "a<b<c<=d"),
        Relation("SP.6", "dbca", "bdca", "a<b<=c<d"),
        Relation("SP.7", "bcda", "bcad", "a<b<=c<=d"),
        Relation("SP.8", "cadb", "cdab", "a<=b<c<=d"),
    ),
)


def relation_set_by_name(name: str) -> RelationSet:
    if name == "knuth":
        return KNUTH
    if name == "shifted-knuth":
        return SHIFTED_KNUTH
    raise ValueError(f"unknown relation set {name!r}")


@functools.lru_cache(maxsize=None)
def expanded_rules(rels: RelationSet):
    """Direction-expanded (match, replace, strict) triples for the kernels."""
    out = []
    seen = set()
    for rel in rels.relations:
        left, right, strict = rel.compiled()
        for a, b in ((left, right), (right, left)):
            key = (a, b, strict)
            if a != b and key not in seen:
                seen.add(key)
                out.append(key)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _table(rels: RelationSet):
    return _kernels.RuleTable(expanded_rules(rels))


# canonical-form memo, per relation set: bytes word -> least class member
_canonical_memo: dict[RelationSet, dict[bytes, bytes]] = {}


def closure_bytes(rels: RelationSet, word: bytes) -> frozenset[bytes]:
    return frozenset(_kernels.closure(word, _table(rels)))


def canonical_bytes(rels: RelationSet, word: bytes) -> bytes:
    memo = _canonical_memo.setdefault(rels, {})
    got = memo.get(word)
    if got is None:
        members = _kernels.closure(word, _table(rels))
        got = min(members)
        for m in members:
            memo[m] = got
    return got


def instantiate(rel: Relation, window: Word) -> Word | None:
    """Rewrite of `window` by `rel` read left-to-right, or None when no match."""
    left, right, strict = rel.compiled()
    if len(window) != len(left):
        return None
    nvars = len(strict) + 1
    vals = [0] * nvars
    for k, v in enumerate(left):
        a = window.letters[k]
        if vals[v] == 0:
            vals[v] = a
        elif vals[v] != a:
            return None
    for i in range(nvars - 1):
        if strict[i]:
            if vals[i] >= vals[i + 1]:
                return None
        elif vals[i] > vals[i + 1]:
            return None
    return Word(tuple(vals[v] for v in right), window.n)


def neighbors(word: Word, rels: RelationSet) -> frozenset[Word]:
    """All words one relation application away (either direction, any window)."""
    out = _kernels.neighbors(word.to_bytes(), _table(rels))
    return frozenset(Word.from_bytes(b, word.n) for b in out)


def equiv_class(word: Word, rels: RelationSet) -> frozenset[Word]:
    """The full equivalence class of `word` under `rels`; always contains it."""
    return frozenset(Word.from_bytes(b, word.n) for b in closure_bytes(rels, word.to_bytes()))


def equivalent(w1: Word, w2: Word, rels: RelationSet) -> bool:
    """Quotient equality test; short-circuits on content mismatch."""
    if w1.n != w2.n:
        raise ValueError(f"mismatched alphabet bounds {w1.n} != {w2.n}")
    if content(w1) != content(w2):
        return False
    wb1, wb2 = w1.to_bytes(), w2.to_bytes()
    if wb1 == wb2:
        return True
    return canonical_bytes(rels, wb1) == canonical_bytes(rels, wb2)


def canonical_word(word: Word, rels: RelationSet) -> Word:
    """Lexicographically least member of the class (the canonical representative)."""
    return Word.from_bytes(canonical_bytes(rels, word.to_bytes()), word.n)


def relation_instances(rel: Relation, n: int):
    """All concrete (left, right) word pairs of a relation schema over {1..n}."""
    variables, strict = _parse_chain(rel.constraints)

    # first variable ranges freely; successors respect the chain
    def walk(i: int, floor: int, current: dict[str, int]):
        if i == len(variables):
            yield dict(current)
            return
        for a in range(floor, n + 1):
            current[variables[i]] = a
            if i < len(strict):
                yield from walk(i + 1, a + 1 if strict[i] else a, current)
            else:
                yield from walk(i + 1, a, current)

    for assignment in walk(0, 1, {}):
        yield rel.instantiate_pattern(assignment, n)


def verify_factorization(n: int, degree_bound: int) -> bool:
    """True iff every shifted Knuth relation instance over {1..n} with degree
    up to the bound is an ordinary Knuth equivalence (the quotient maps factor)."""
    for rel in SHIFTED_KNUTH.relations:
        if len(rel.left) > degree_bound:
            continue
        for left, right in relation_instances(rel, n):
            if not equivalent(left, right, KNUTH):
                return False
    return True


def class_dump(word: Word, rels: RelationSet) -> dict:
    """JSON-ready class listing: sorted members plus the class size."""
    members = sorted(equiv_class(word, rels), key=lambda w: w.letters)
    return {
        "word": str(word),
        "relation_set": rels.name,
        "class": [str(w) for w in members],
        "size": len(members),
    }
