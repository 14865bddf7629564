"""Words over finite alphabet truncations {1..n} and their structural maps.

A word is an immutable sequence of letters drawn from {1, ..., n}; the empty
word is the monoid identity.  The maps provided here (concatenation, content,
interval restriction, ordered-morphism relabelling) are the pieces the
rewrite engine and the verification harness quantify over.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, slots=True)
class Word:
    """Immutable word over {1..n}; structural equality, usable as a dict key."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"alphabet bound must be >= 1, got {self.n}")
        for a in self.letters:
            if not 1 <= a <= self.n:
                raise ValueError(f"letter {a} outside alphabet 1..{self.n}")

    @classmethod
    def of(cls, letters: Iterable[int], n: int) -> "Word":
        return cls(tuple(letters), n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Word":
        """Parse the word text format: digits for n <= 9, comma-separated otherwise.

        The empty string is the identity.  When `n` is omitted it defaults to
        the largest letter present (1 for the empty word).
        """
        text = text.strip()
        if not text:
            return cls((), n if n is not None else 1)
        if "," in text:
            letters = tuple(int(part) for part in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError(f"cannot parse word {text!r}")
            letters = tuple(int(ch) for ch in text)
        if n is None:
            n = max(letters)
        return cls(letters, n)

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(a) for a in self.letters)
        return ",".join(str(a) for a in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, n={self.n})"

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    def to_bytes(self) -> bytes:
        if self.n > 255:
            raise ValueError("byte encoding supports alphabets up to 255 letters")
        return bytes(self.letters)

    @classmethod
    def from_bytes(cls, data: bytes, n: int) -> "Word":
        return cls(tuple(data), n)


@dataclass(frozen=True, slots=True)
class Interval:
    """The alphabet interval {k : lo <= k <= hi}."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo},{self.hi}]")

    def __contains__(self, a: int) -> bool:
        return self.lo <= a <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True, slots=True)
class OrderedMorphism:
    """Strictly increasing partial map from source letters to target letters.

    `pairs` lists (source, image) with strictly increasing sources and images;
    applying the morphism to a word maps it letterwise.
    """

    pairs: tuple[tuple[int, int], ...]
    target_n: int

    def __post_init__(self) -> None:
        if self.target_n < 1:
            raise ValueError("target alphabet bound must be >= 1")
        prev = None
        for src, img in self.pairs:
            if src < 1 or not 1 <= img <= self.target_n:
                raise ValueError(f"morphism pair ({src},{img}) out of range")
            if prev is not None and (src <= prev[0] or img <= prev[1]):
                raise ValueError("ordered morphism must be strictly increasing")
            prev = (src, img)

    @classmethod
    def from_dict(cls, mapping: dict[int, int], target_n: int) -> "OrderedMorphism":
        return cls(tuple(sorted(mapping.items())), target_n)

    @classmethod
    def identity(cls, n: int) -> "OrderedMorphism":
        return cls(tuple((a, a) for a in range(1, n + 1)), n)

    @property
    def source(self) -> frozenset[int]:
        return frozenset(src for src, _ in self.pairs)

    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)


def concat(w1: Word, w2: Word) -> Word:
    """Monoid product: letters of w1 followed by letters of w2."""
    if w1.n != w2.n:
        raise ValueError(f"mismatched alphabet bounds {w1.n} != {w2.n}")
    return Word(w1.letters + w2.letters, w1.n)


def content(w: Word) -> tuple[int, ...]:
    """Content vector: entry i-1 counts the letter i.  Length is always w.n."""
    counts = [0] * w.n
    for a in w.letters:
        counts[a - 1] += 1
    return tuple(counts)


def restrict(w: Word, interval: Interval) -> Word:
    """Delete all letters outside the interval, preserving order."""
    return Word(tuple(a for a in w.letters if a in interval), w.n)


def apply_morphism(w: Word, morphism: OrderedMorphism) -> Word:
    """Letterwise image of w under an ordered morphism."""
    mapping = morphism.mapping()
    try:
        letters = tuple(mapping[a] for a in w.letters)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]} outside morphism source") from None
    return Word(letters, morphism.target_n)


def all_words(n: int, degree: int) -> Iterator[Word]:
    """All words of the given degree over {1..n}."""
    for letters in itertools.product(range(1, n + 1), repeat=degree):
        yield Word(letters, n)


def all_intervals(n: int) -> Iterator[Interval]:
    """All nonempty alphabet intervals inside {1..n}."""
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            yield Interval(lo, hi)


def all_ordered_morphisms(source_n: int, target_n: int) -> Iterator[OrderedMorphism]:
    """All strictly increasing partial maps between the two truncations.

    Includes the empty morphism (applicable only to the empty word).
    """
    source_letters = range(1, source_n + 1)
    target_letters = range(1, target_n + 1)
    for k in range(0, min(source_n, target_n) + 1):
        for src in itertools.combinations(source_letters, k):
            for img in itertools.combinations(target_letters, k):
                yield OrderedMorphism(tuple(zip(src, img)), target_n)
