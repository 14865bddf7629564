"""Semistandard and shifted semistandard tableaux, insertion, and hook words.

Ordinary tableaux hold plain letters; shifted tableaux hold letters from the
doubled alphabet a' < a < b' (for a < b), stored in an integer encoding where
the unprimed letter a is 2a and the primed letter a' is 2a - 1, so integer
order coincides with doubled-alphabet order.

Two insertion algorithms live here: classical Schensted row insertion (whose
fibers are the Knuth classes) and mixed insertion building a shifted tableau
(whose fibers are the shifted Knuth classes).  Hook words - strictly
decreasing prefix followed by weakly increasing suffix - provide canonical
representatives for the shifted classes.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator

from .words import Word

# ---------------------------------------------------------------------------
# partitions


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict_partition(parts: tuple[int, ...]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def partitions(size: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of `size` in decreasing lexicographic order."""
    if size == 0:
        yield ()
        return
    cap = size if max_part is None else min(max_part, size)
    for first in range(cap, 0, -1):
        for rest in partitions(size - first, first):
            yield (first,) + rest


def strict_partitions(size: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Strict partitions of `size` in decreasing lexicographic order."""
    if size == 0:
        yield ()
        return
    cap = size if max_part is None else min(max_part, size)
    for first in range(cap, 0, -1):
        for rest in strict_partitions(size - first, first - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# doubled alphabet encoding


def primed(a: int) -> int:
    """Encoded primed letter a'."""
    return 2 * a - 1


def unprimed(a: int) -> int:
    """Encoded unprimed letter a."""
    return 2 * a


def is_primed(x: int) -> bool:
    return x % 2 == 1


def base_letter(x: int) -> int:
    """The plain letter underlying an encoded doubled-alphabet entry."""
    return (x + 1) // 2


def format_entry(x: int) -> str:
    return f"{base_letter(x)}'" if is_primed(x) else str(base_letter(x))


def parse_entry(text: str) -> int:
    text = text.strip()
    if text.endswith("'"):
        return primed(int(text[:-1]))
    return unprimed(int(text))


# ---------------------------------------------------------------------------
# ordinary semistandard tableaux


@dataclass(frozen=True, slots=True)
class Tableau:
    """Semistandard Young tableau: rows weakly increase, columns strictly increase."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        shape = tuple(len(r) for r in self.rows)
        if not (shape == () or is_partition(shape)):
            raise ValueError(f"row lengths {shape} do not form a partition")
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if a < 1:
                    raise ValueError(f"bad entry {a}")
                if j > 0 and row[j - 1] > a:
                    raise ValueError(f"row {i + 1} not weakly increasing")
                if i > 0 and self.rows[i - 1][j] >= a:
                    raise ValueError(f"column {j + 1} not strictly increasing")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def reading_letters(self) -> tuple[int, ...]:
        """Rows bottom to top, each left to right."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [[str(a) for a in row] for row in self.rows],
        }

    def __str__(self) -> str:
        return "/".join("".join(str(a) for a in row) for row in self.rows) or "-"


EMPTY_TABLEAU = Tableau(())


def schensted_insert(tableau: Tableau, z: int) -> Tableau:
    """Row-insert z: bump the leftmost strictly greater entry, recurse below."""
    rows = [list(r) for r in tableau.rows]
    i = 0
    x = z
    while True:
        if i == len(rows):
            rows.append([x])
            break
        row = rows[i]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            break
        x, row[j] = row[j], x
        i += 1
    return Tableau(tuple(tuple(r) for r in rows))


def p_tableau(w: Word) -> Tableau:
    """Insertion tableau of a word: left fold of Schensted insertion."""
    t = EMPTY_TABLEAU
    for a in w.letters:
        t = schensted_insert(t, a)
    return t


def reading_word(tableau: Tableau, n: int | None = None) -> Word:
    """Reading word of a tableau as a Word over {1..n} (default: max entry)."""
    letters = tableau.reading_letters()
    if n is None:
        n = max(letters, default=1)
    return Word(letters, n)


def enumerate_ssyt(shape: tuple[int, ...], n: int) -> list[Tableau]:
    """All semistandard tableaux of the given shape with entries <= n."""
    if shape == ():
        return [EMPTY_TABLEAU]
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(Tableau(tuple(tuple(r) for r in grid)))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for a in range(lo, n + 1):
            grid[i][j] = a
            fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return out


# ---------------------------------------------------------------------------
# shifted semistandard tableaux


@dataclass(frozen=True, slots=True)
class ShiftedTableau:
    """Shifted semistandard tableau over the doubled alphabet.

    Row i (0-based) is indented i cells, so its leftmost entry sits on the
    main diagonal.  Entries are stored in the integer doubled encoding.
    Invariants: rows and columns weakly increase, a primed value appears at
    most once per row, an unprimed value at most once per column, and every
    diagonal entry is unprimed.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        shape = tuple(len(r) for r in self.rows)
        if not (shape == () or is_strict_partition(shape)):
            raise ValueError(f"row lengths {shape} do not form a strict partition")
        for i, row in enumerate(self.rows):
            if is_primed(row[0]):
                raise ValueError(f"diagonal entry of row {i + 1} is primed")
            for j, x in enumerate(row):
                if x < 1:
                    raise ValueError(f"bad entry {x}")
                if j > 0 and row[j - 1] > x:
                    raise ValueError(f"row {i + 1} not weakly increasing")
                if j > 0 and row[j - 1] == x and is_primed(x):
                    raise ValueError(f"primed {format_entry(x)} repeated in row {i + 1}")
            if i > 0:
                above = self.rows[i - 1]
                # cell (i, j) sits in absolute column i + j; above it is
                # (i - 1, i + j - (i - 1)) = (i - 1, j + 1)
                for j, x in enumerate(row):
                    y = above[j + 1]
                    if y > x:
                        raise ValueError(f"column of cell ({i + 1},{j + 1}) decreases")
                    if y == x and not is_primed(x):
                        raise ValueError(
                            f"unprimed {format_entry(x)} repeated in a column"
                        )

    @classmethod
    def from_strings(cls, rows) -> "ShiftedTableau":
        """Build from rows of entry strings like ["1", "3", "6'"]."""
        return cls(tuple(tuple(parse_entry(s) for s in row) for row in rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def content(self, n: int) -> tuple[int, ...]:
        """Content vector over {1..n}; primes are ignored."""
        counts = [0] * n
        for row in self.rows:
            for x in row:
                counts[base_letter(x) - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [[format_entry(x) for x in row] for row in self.rows],
        }

    def __str__(self) -> str:
        return "/".join(" ".join(format_entry(x) for x in row) for row in self.rows) or "-"


EMPTY_SHIFTED_TABLEAU = ShiftedTableau(())


def _mixed_insert_encoded(rows: list[list[int]], entry: int) -> None:
    """One mixed insertion into mutable shifted rows (doubled encoding).

    Row insertion bumps the leftmost entry strictly greater; a bumped entry
    that is unprimed and off the main diagonal row-inserts into the row below
    the bump, while a bumped entry that is primed (or unprimed on the
    diagonal, which gets primed) column-inserts into the column right of the
    bump.  Column insertion bumps the topmost strictly greater entry and
    appends at the bottom of the column otherwise.
    """
    by_rows = True
    idx = 0
    v = entry
    while True:
        if by_rows:
            r = idx
            if r == len(rows):
                rows.append([v])
                return
            row = rows[r]
            j = bisect_right(row, v)
            if j == len(row):
                row.append(v)
                return
            x, row[j] = row[j], v
            col = r + j
        else:
            c = idx
            target = None
            for r in range(min(c + 1, len(rows))):
                j = c - r
                if 0 <= j < len(rows[r]) and rows[r][j] > v:
                    target = (r, j)
                    break
            if target is None:
                last = -1
                for r in range(min(c + 1, len(rows))):
                    if 0 <= c - r < len(rows[r]):
                        last = r
                r_new = last + 1
                if r_new == len(rows):
                    if c != r_new:
                        raise ValueError("mixed insertion broke the shifted shape")
                    rows.append([v])
                else:
                    if r_new + len(rows[r_new]) != c:
                        raise ValueError("mixed insertion broke the shifted shape")
                    rows[r_new].append(v)
                return
            r, j = target
            x, rows[r][j] = rows[r][j], v
            col = c
        if not is_primed(x) and col != r:
            by_rows, idx, v = True, r + 1, x
        else:
            if not is_primed(x):
                x -= 1  # diagonal bump gets primed
            by_rows, idx, v = False, col + 1, x


def mixed_insert(tableau: ShiftedTableau, z: int) -> ShiftedTableau:
    """Mixed-insert the plain (unprimed) letter z into a shifted tableau."""
    if z < 1:
        raise ValueError(f"bad letter {z}")
    rows = [list(r) for r in tableau.rows]
    _mixed_insert_encoded(rows, unprimed(z))
    return ShiftedTableau(tuple(tuple(r) for r in rows))


def mixed_insert_word(w: Word) -> ShiftedTableau:
    """Mixed insertion tableau of a word without primed entries."""
    rows: list[list[int]] = []
    for a in w.letters:
        _mixed_insert_encoded(rows, unprimed(a))
    return ShiftedTableau(tuple(tuple(r) for r in rows))


def enumerate_shssyt(shape: tuple[int, ...], n: int) -> list[ShiftedTableau]:
    """All shifted semistandard tableaux of the given strict shape, letters <= n."""
    if shape == ():
        return [EMPTY_SHIFTED_TABLEAU]
    if not is_strict_partition(shape):
        raise ValueError(f"{shape} is not a strict partition")
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]
    out: list[ShiftedTableau] = []
    top = unprimed(n)

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(ShiftedTableau(tuple(tuple(r) for r in grid)))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            left = grid[i][j - 1]
            lo = max(lo, left + 1 if is_primed(left) else left)
        if i > 0:
            above = grid[i - 1][j + 1]
            lo = max(lo, above if is_primed(above) else above + 1)
        for x in range(lo, top + 1):
            if j == 0 and is_primed(x):
                continue
            grid[i][j] = x
            fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return out


# ---------------------------------------------------------------------------
# hook words


def is_hook_word(w: Word) -> bool:
    """True iff w is a strictly decreasing prefix followed by a weakly
    increasing suffix (either part may be empty)."""
    letters = w.letters
    k = 1
    while k < len(letters) and letters[k] < letters[k - 1]:
        k += 1
    return all(letters[i] <= letters[i + 1] for i in range(k, len(letters) - 1))


def longest_hook_subword(w: Word) -> int:
    """Length of the longest hook subword (as a subsequence) of w.

    Quadratic dynamic program: the best strictly decreasing subsequence
    ending at each position, the best weakly increasing subsequence starting
    at each position, and the best join of the two across a split point.
    """
    letters = w.letters
    length = len(letters)
    if length == 0:
        return 0
    dec = [1] * length
    for i in range(length):
        for j in range(i):
            if letters[j] > letters[i] and dec[j] + 1 > dec[i]:
                dec[i] = dec[j] + 1
    inc = [1] * length
    for i in range(length - 1, -1, -1):
        for j in range(i + 1, length):
            if letters[j] >= letters[i] and inc[j] + 1 > inc[i]:
                inc[i] = inc[j] + 1
    best_inc_from = [0] * (length + 1)
    for i in range(length - 1, -1, -1):
        best_inc_from[i] = max(best_inc_from[i + 1], inc[i])
    best = max(max(dec), max(inc))
    for i in range(length - 1):
        if dec[i] + best_inc_from[i + 1] > best:
            best = dec[i] + best_inc_from[i + 1]
    return best


def longest_weakly_increasing_subword(w: Word) -> int:
    letters = w.letters
    if not letters:
        return 0
    inc = [1] * len(letters)
    for i in range(len(letters)):
        for j in range(i):
            if letters[j] <= letters[i] and inc[j] + 1 > inc[i]:
                inc[i] = inc[j] + 1
    return max(inc)


def _segment_lengths(nu: tuple[int, ...]) -> list[int]:
    # segments are read off smallest part first
    return list(reversed(nu))


def hook_factorization_check(w: Word, nu: tuple[int, ...]) -> bool:
    """True iff w splits into consecutive hook segments of lengths
    nu_l, ..., nu_1 with each later segment a longest hook subword of its
    predecessor pair."""
    if not is_strict_partition(nu):
        raise ValueError(f"{nu} is not a strict partition")
    if len(w) != sum(nu):
        raise ValueError(f"word degree {len(w)} != |{nu}|")
    segments = []
    pos = 0
    for length in _segment_lengths(nu):
        segments.append(Word(w.letters[pos : pos + length], w.n))
        pos += length
    for i, seg in enumerate(segments):
        if not is_hook_word(seg):
            return False
        if i > 0:
            pair = segments[i - 1] + seg
            if longest_hook_subword(pair) != len(seg):
                return False
    return True


def _hook_words_of_length(length: int, n: int) -> list[tuple[int, ...]]:
    out = [
        letters
        for letters in itertools.product(range(1, n + 1), repeat=length)
        if is_hook_word(Word(letters, n))
    ]
    return out


def enumerate_hook(nu: tuple[int, ...], n: int) -> set[Word]:
    """All words over {1..n} in the hook-factorization set of the strict shape.

    Built generatively, segment by segment; enumerate_hook_by_filter is the
    independent brute-force oracle.
    """
    if not is_strict_partition(nu):
        raise ValueError(f"{nu} is not a strict partition")
    if nu == ():
        return {Word((), n)}
    lengths = _segment_lengths(nu)
    states: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for length in lengths:
        segments = _hook_words_of_length(length, n)
        nxt = []
        for prefix, last in states:
            for seg in segments:
                if last and longest_hook_subword(Word(last + seg, n)) != length:
                    continue
                nxt.append((prefix + seg, seg))
        states = nxt
    return {Word(prefix, n) for prefix, _ in states}


def enumerate_hook_by_filter(nu: tuple[int, ...], n: int) -> set[Word]:
    """Brute-force oracle: filter every word of degree |nu| over {1..n}."""
    degree = sum(nu)
    return {
        Word(letters, n)
        for letters in itertools.product(range(1, n + 1), repeat=degree)
        if hook_factorization_check(Word(letters, n), nu)
    }
