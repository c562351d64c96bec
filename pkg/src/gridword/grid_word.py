"""Two-dimensional binary words over {empty, filled} and their word algebra.

A word is an immutable h x w matrix of cells.  Public indexing is 1-based,
``W[i, j]`` with row i counted from the top and column j from the left.
Rows are stored as bitmasks (bit j-1 <-> column j), which keeps counting,
degree checks and concatenation cheap and plugs directly into the profile
DP modules.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from itertools import combinations
from typing import ClassVar, Iterable, Sequence

from .errors import DimensionError, ParseError

FILLED_CHAR = "#"
EMPTY_CHAR = "."

TRANSFORM_NAMES = (
    "identity",
    "transpose",
    "flip_h",
    "flip_v",
    "rot90",
    "rot180",
    "rot270",
    "anti_transpose",
)


class CellState(Enum):
    """The two cell values of a binary word."""

    EMPTY = EMPTY_CHAR
    FILLED = FILLED_CHAR

    def __invert__(self) -> "CellState":
        return CellState.FILLED if self is CellState.EMPTY else CellState.EMPTY


@total_ordering
@dataclass(frozen=True)
class Third:
    """Exact rational with fixed denominator 3 (value = numerator / 3).

    Excess values e(W) = |W|_filled - 2hw/3 always have this form, and all
    comparisons against branch boundaries like 4/3 must be exact, so no
    floating point is ever involved.
    """

    numerator: int
    DENOMINATOR: ClassVar[int] = 3

    @classmethod
    def from_int(cls, value: int) -> "Third":
        return cls(3 * value)

    @staticmethod
    def _coerce(other) -> "Third":
        if isinstance(other, Third):
            return other
        if isinstance(other, int):
            return Third.from_int(other)
        return NotImplemented

    def __add__(self, other) -> "Third":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Third(self.numerator + other.numerator)

    __radd__ = __add__

    def __sub__(self, other) -> "Third":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Third(self.numerator - other.numerator)

    def __rsub__(self, other) -> "Third":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Third(other.numerator - self.numerator)

    def __neg__(self) -> "Third":
        return Third(-self.numerator)

    def __mul__(self, other) -> "Third":
        if isinstance(other, int):
            return Third(self.numerator * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.numerator == other.numerator

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.numerator < other.numerator

    def __hash__(self) -> int:
        return hash(("Third", self.numerator))

    def is_integer(self) -> bool:
        return self.numerator % 3 == 0

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.numerator // 3

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.numerator // 3)
        return f"{self.numerator}/3"

    def __repr__(self) -> str:
        return f"Third({self.numerator})"


class Word2D:
    """Immutable h x w binary word; values are safe to share across threads."""

    __slots__ = ("_width", "_rows")

    def __init__(self, height: int, width: int, cells: Iterable):
        cells = list(cells)
        if height < 1 or width < 1:
            raise DimensionError(f"dimensions must be >= 1, got {height}x{width}")
        if len(cells) != height * width:
            raise DimensionError(
                f"expected {height * width} cells for {height}x{width}, got {len(cells)}"
            )
        rows = []
        for i in range(height):
            mask = 0
            for j in range(width):
                cell = cells[i * width + j]
                if isinstance(cell, CellState):
                    filled = cell is CellState.FILLED
                else:
                    filled = bool(cell)
                if filled:
                    mask |= 1 << j
            rows.append(mask)
        object.__setattr__(self, "_width", width)
        object.__setattr__(self, "_rows", tuple(rows))

    @classmethod
    def from_row_masks(cls, width: int, rows: Sequence[int]) -> "Word2D":
        """Fast constructor from per-row bitmasks (bit j-1 <-> column j)."""
        if width < 1 or len(rows) < 1:
            raise DimensionError("dimensions must be >= 1")
        full = (1 << width) - 1
        rows = tuple(int(r) for r in rows)
        for r in rows:
            if r < 0 or r & ~full:
                raise DimensionError(f"row mask {r} out of range for width {width}")
        word = object.__new__(cls)
        object.__setattr__(word, "_width", width)
        object.__setattr__(word, "_rows", rows)
        return word

    def __setattr__(self, name, value):
        raise AttributeError("Word2D is immutable")

    @property
    def height(self) -> int:
        return len(self._rows)

    @property
    def width(self) -> int:
        return self._width

    @property
    def row_masks(self) -> tuple[int, ...]:
        return self._rows

    @property
    def cells(self) -> tuple[CellState, ...]:
        """Row-major cell sequence of length height*width."""
        out = []
        for mask in self._rows:
            for j in range(self._width):
                out.append(CellState.FILLED if (mask >> j) & 1 else CellState.EMPTY)
        return tuple(out)

    def _check_index(self, i: int, j: int) -> None:
        if not (1 <= i <= self.height and 1 <= j <= self.width):
            raise IndexError(f"cell ({i},{j}) outside {self.height}x{self.width}")

    def __getitem__(self, index: tuple[int, int]) -> CellState:
        i, j = index
        self._check_index(i, j)
        return (
            CellState.FILLED
            if (self._rows[i - 1] >> (j - 1)) & 1
            else CellState.EMPTY
        )

    def is_filled(self, i: int, j: int) -> bool:
        self._check_index(i, j)
        return bool((self._rows[i - 1] >> (j - 1)) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word2D):
            return NotImplemented
        return self._width == other._width and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._width, self._rows))

    def __repr__(self) -> str:
        return f"Word2D({self.height}x{self.width}, {render_text(self)!r})"


@dataclass(frozen=True)
class DegreeWord:
    """h x w matrix over {0..4}: filled-neighbor counts of the filled cells."""

    height: int
    width: int
    values: tuple[int, ...]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (1 <= i <= self.height and 1 <= j <= self.width):
            raise IndexError(f"cell ({i},{j}) outside {self.height}x{self.width}")
        return self.values[(i - 1) * self.width + (j - 1)]

    def max(self) -> int:
        return max(self.values)


def neighbors(h: int, w: int, i: int, j: int) -> list[tuple[int, int]]:
    """Grid neighborhood of (i, j): orthogonal neighbors, no wraparound."""
    out = []
    for di, dj in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        ni, nj = i + di, j + dj
        if 1 <= ni <= h and 1 <= nj <= w:
            out.append((ni, nj))
    return out


def filled_count(word: Word2D) -> int:
    """Number of filled cells of the word."""
    return sum(mask.bit_count() for mask in word.row_masks)


def degree_word(word: Word2D) -> DegreeWord:
    """Per-cell filled-neighbor counts; empty cells have value 0."""
    h, w = word.height, word.width
    rows = word.row_masks
    values = []
    for i in range(h):
        mask = rows[i]
        up = rows[i - 1] if i > 0 else 0
        down = rows[i + 1] if i + 1 < h else 0
        for j in range(w):
            if not (mask >> j) & 1:
                values.append(0)
                continue
            deg = (up >> j) & 1
            deg += (down >> j) & 1
            if j > 0:
                deg += (mask >> (j - 1)) & 1
            if j + 1 < w:
                deg += (mask >> (j + 1)) & 1
            values.append(deg)
    return DegreeWord(h, w, tuple(values))


def _neighbor_masks(rows: Sequence[int], i: int, width: int) -> tuple[int, int, int, int]:
    full = (1 << width) - 1
    mask = rows[i]
    up = rows[i - 1] if i > 0 else 0
    down = rows[i + 1] if i + 1 < len(rows) else 0
    left = (mask << 1) & full  # bit j set <-> column j-1 filled
    right = mask >> 1
    return up, down, left, right


def _has_degree_at_least(word: Word2D, k: int) -> bool:
    """Bit-parallel test: does some filled cell have >= k filled neighbors?"""
    if k <= 0:
        return filled_count(word) > 0
    if k > 4:
        return False
    rows = word.row_masks
    w = word.width
    for i in range(len(rows)):
        mask = rows[i]
        if not mask:
            continue
        nbrs = _neighbor_masks(rows, i, w)
        for combo in combinations(nbrs, k):
            hit = mask
            for m in combo:
                hit &= m
            if hit:
                return True
    return False


def max_degree(word: Word2D) -> int:
    """Maximum entry of the degree word; 0 for the all-empty word."""
    for k in (4, 3, 2, 1):
        if _has_degree_at_least(word, k):
            return k
    return 0


def is_degree_bounded(word: Word2D, d: int) -> bool:
    """True iff every filled cell has at most d filled neighbors."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if d >= 4:
        return True
    return not _has_degree_at_least(word, d + 1)


def hconcat(left: Word2D, right: Word2D) -> Word2D:
    """Place ``right`` to the right of ``left`` (heights must match)."""
    if left.height != right.height:
        raise DimensionError(
            f"height mismatch: {left.height} vs {right.height}"
        )
    shift = left.width
    rows = [lm | (rm << shift) for lm, rm in zip(left.row_masks, right.row_masks)]
    return Word2D.from_row_masks(left.width + right.width, rows)


def vconcat(top: Word2D, bottom: Word2D) -> Word2D:
    """Stack ``top`` above ``bottom`` (widths must match)."""
    if top.width != bottom.width:
        raise DimensionError(f"width mismatch: {top.width} vs {bottom.width}")
    return Word2D.from_row_masks(top.width, top.row_masks + bottom.row_masks)


def power(word: Word2D, target_height: int, target_width: int) -> Word2D:
    """Periodic extension/truncation to the given target dimensions.

    Cell (i, j) of the result equals word[((i-1) mod h)+1, ((j-1) mod w)+1];
    targets smaller than (h, w) keep the top-left partial period.
    """
    if target_height < 1 or target_width < 1:
        raise DimensionError("power targets must be >= 1")
    h, w = word.height, word.width
    full = (1 << target_width) - 1
    reps = []
    for base in word.row_masks:
        mask = 0
        off = 0
        while off < target_width:
            mask |= base << off
            off += w
        reps.append(mask & full)
    rows = [reps[i % h] for i in range(target_height)]
    return Word2D.from_row_masks(target_width, rows)


def excess(word: Word2D) -> Third:
    """Exact excess (3*filled - 2hw)/3 of the word."""
    return Third(3 * filled_count(word) - 2 * word.height * word.width)


def rows_factor(word: Word2D, i: int, i2: int) -> Word2D:
    """The factor made of rows i..i2 inclusive (1-based)."""
    if not (1 <= i <= i2 <= word.height):
        raise IndexError(f"row range [{i},{i2}] outside 1..{word.height}")
    return Word2D.from_row_masks(word.width, word.row_masks[i - 1 : i2])


def with_cell(word: Word2D, i: int, j: int, state: CellState) -> Word2D:
    """Copy of the word with one cell replaced."""
    word._check_index(i, j)
    rows = list(word.row_masks)
    if state is CellState.FILLED:
        rows[i - 1] |= 1 << (j - 1)
    else:
        rows[i - 1] &= ~(1 << (j - 1))
    return Word2D.from_row_masks(word.width, rows)


def _to_grid(word: Word2D) -> list[list[bool]]:
    w = word.width
    return [[bool((m >> j) & 1) for j in range(w)] for m in word.row_masks]


def _from_grid(grid: list[list[bool]]) -> Word2D:
    rows = []
    for line in grid:
        mask = 0
        for j, filled in enumerate(line):
            if filled:
                mask |= 1 << j
        rows.append(mask)
    return Word2D.from_row_masks(len(grid[0]), rows)


def transform(word: Word2D, name: str) -> Word2D:
    """Apply one of the eight dihedral transforms of the rectangle.

    ``flip_v`` reverses the row order (top-bottom mirror), ``flip_h``
    reverses each row (left-right mirror); rotations are clockwise.
    """
    g = _to_grid(word)
    if name == "identity":
        pass
    elif name == "transpose":
        g = [list(col) for col in zip(*g)]
    elif name == "flip_h":
        g = [row[::-1] for row in g]
    elif name == "flip_v":
        g = g[::-1]
    elif name == "rot90":
        g = [list(col) for col in zip(*g[::-1])]
    elif name == "rot180":
        g = [row[::-1] for row in g[::-1]]
    elif name == "rot270":
        g = [list(col) for col in zip(*g)][::-1]
    elif name == "anti_transpose":
        g = [list(col) for col in zip(*g[::-1])][::-1]
    else:
        raise ValueError(f"unknown transform {name!r}; expected one of {TRANSFORM_NAMES}")
    return _from_grid(g)


def row_distribution(word: Word2D) -> tuple[int, ...]:
    """Per-row filled counts, top to bottom."""
    return tuple(mask.bit_count() for mask in word.row_masks)


def boundary_cells(word: Word2D) -> set[tuple[int, int]]:
    """All cells on the outer frame of the rectangle."""
    h, w = word.height, word.width
    out = set()
    for j in range(1, w + 1):
        out.add((1, j))
        out.add((h, j))
    for i in range(1, h + 1):
        out.add((i, 1))
        out.add((i, w))
    return out


@dataclass(frozen=True)
class Component:
    """A connected component of the induced grid subgraph."""

    cells: frozenset[tuple[int, int]]
    shape: str  # "path", "cycle" or "other"


def induced_components(word: Word2D) -> list[Component]:
    """Connected components of the subgraph induced by the filled cells.

    A component is a path iff it is acyclic with maximum degree <= 2
    (singletons count), a cycle iff connected with every degree exactly 2.
    """
    h, w = word.height, word.width
    filled = {
        (i, j)
        for i in range(1, h + 1)
        for j in range(1, w + 1)
        if word.is_filled(i, j)
    }
    seen: set[tuple[int, int]] = set()
    components = []
    for start in sorted(filled):
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            cell = stack.pop()
            for nb in neighbors(h, w, *cell):
                if nb in filled and nb not in comp:
                    comp.add(nb)
                    seen.add(nb)
                    stack.append(nb)
        degs = [sum(1 for nb in neighbors(h, w, *c) if nb in comp) for c in comp]
        n = len(comp)
        edges = sum(degs) // 2
        if edges == n - 1 and max(degs, default=0) <= 2:
            shape = "path"
        elif edges == n and all(dg == 2 for dg in degs):
            shape = "cycle"
        else:
            shape = "other"
        components.append(Component(frozenset(comp), shape))
    return components


def is_snake(word: Word2D) -> bool:
    """True iff the filled cells induce exactly one path component."""
    comps = induced_components(word)
    return len(comps) == 1 and comps[0].shape == "path"


def is_linear_forest(word: Word2D) -> bool:
    """True iff every component is a path (vacuously true when empty)."""
    return all(c.shape == "path" for c in induced_components(word))


def parse_text(text: str) -> Word2D:
    """Parse '#'/'.' rows separated by newlines; trailing newline optional."""
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise ParseError("empty input")
    lines = text.split("\n")
    width = len(lines[0])
    rows = []
    for lineno, line in enumerate(lines, start=1):
        if not line:
            raise ParseError("empty row", line=lineno)
        if len(line) != width:
            raise ParseError(
                f"ragged row: expected width {width}, got {len(line)}", line=lineno
            )
        mask = 0
        for col, ch in enumerate(line, start=1):
            if ch == FILLED_CHAR:
                mask |= 1 << (col - 1)
            elif ch != EMPTY_CHAR:
                raise ParseError(
                    f"illegal character {ch!r} (expected '{FILLED_CHAR}' or '{EMPTY_CHAR}')",
                    line=lineno,
                    col=col,
                )
        rows.append(mask)
    return Word2D.from_row_masks(width, rows)


def _row_text(mask: int, width: int) -> str:
    return "".join(
        FILLED_CHAR if (mask >> j) & 1 else EMPTY_CHAR for j in range(width)
    )


def render_text(word: Word2D) -> str:
    """Render to the grid text format, one row per line, trailing newline."""
    w = word.width
    return "".join(_row_text(mask, w) + "\n" for mask in word.row_masks)


def to_json(word: Word2D) -> str:
    """Fixed-field-order JSON rendering {"h":..,"w":..,"rows":[..]}."""
    payload = {
        "h": word.height,
        "w": word.width,
        "rows": [_row_text(mask, word.width) for mask in word.row_masks],
    }
    return json.dumps(payload)


def from_json(text: str) -> Word2D:
    data = json.loads(text)
    word = parse_text("\n".join(data["rows"]))
    if word.height != data["h"] or word.width != data["w"]:
        raise ParseError(
            f"JSON dims {data['h']}x{data['w']} do not match rows "
            f"{word.height}x{word.width}"
        )
    return word
