"""Deterministic generators of maximal degree-bounded words.

Every constructor re-verifies its output (degree bound and exact cell
count against the closed formula) before returning; a failure raises
ConstructionError and is a bug, never a caller error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import domination, formula, oracle
from .errors import ConstructionError
from .grid_word import (
    Word2D,
    filled_count,
    is_degree_bounded,
    parse_text,
    power,
    transform,
    vconcat,
)

# 4-wide building blocks; composition by h mod 6 below.
BLOCK_TEXT = {
    "A": "####\n#..#\n.###\n##..\n",
    "B": "####\n#..#\n#.##\n.##.\n",
    "C": "#..#\n####\n",
    "D": "##.#\n#..#\n####\n",
    "D_tilde": "#.##\n#..#\n####\n",
    "E": "####\n#..#\n",
    "U": "#.##\n#.#.\n#.##\n",
    "V": "##.#\n.#.#\n##.#\n",
    "X": "##.#\n#.##\n#.#.\n",
    "Y": "#.##\n##.#\n.#.#\n",
    "W4": "####\n#..#\n#..#\n####\n",
}

BLOCKS: dict[str, Word2D] = {name: parse_text(text) for name, text in BLOCK_TEXT.items()}


@dataclass(frozen=True)
class ConstructionRecipe:
    """Which strategy builds the witness for (d, h, w)."""

    d: int
    h: int
    w: int
    strategy: str
    params: dict = field(default_factory=dict, compare=False)


def _validate(d: int, h: int, w: int) -> None:
    if not isinstance(d, int) or not 0 <= d <= 4:
        raise ValueError(f"d must be an integer in [0, 4], got {d!r}")
    if h < 1 or w < 1:
        raise ValueError(f"dimensions must be >= 1, got {h}x{w}")


def recipe(d: int, h: int, w: int) -> ConstructionRecipe:
    """Strategy dispatch; (h, w) are kept in caller orientation."""
    _validate(d, h, w)
    a, b = (h, w) if h >= w else (w, h)
    if d == 0:
        return ConstructionRecipe(d, h, w, "checkerboard")
    if d == 1:
        return ConstructionRecipe(d, h, w, "tile2x6")
    if d == 4:
        return ConstructionRecipe(d, h, w, "full")
    if d == 3:
        if b <= 2:
            return ConstructionRecipe(d, h, w, "full")
        return ConstructionRecipe(d, h, w, "dominating_complement")
    # d == 2
    if b == 1:
        return ConstructionRecipe(d, h, w, "column")
    if b == 2:
        if a == 2:
            return ConstructionRecipe(d, h, w, "full")
        return ConstructionRecipe(d, h, w, "w2period4")
    if b == 3:
        return ConstructionRecipe(d, h, w, "w3cycle")
    if b == 4:
        return ConstructionRecipe(d, h, w, "w4blocks", {"h_mod_6": a % 6})
    if b in (5, 6):
        return ConstructionRecipe(d, h, w, "smallw_dp")
    return ConstructionRecipe(
        d, h, w, "diagonal_general", {"h_mod_3": a % 3, "w_mod_3": b % 3}
    )


def _checkerboard(h: int, w: int) -> Word2D:
    rows = []
    for i in range(1, h + 1):
        mask = 0
        for j in range(1, w + 1):
            if (i + j) % 2 == 0:
                mask |= 1 << (j - 1)
        rows.append(mask)
    return Word2D.from_row_masks(w, rows)


def _stripes_d1(h: int, w: int) -> Word2D:
    """Row stripes of the 2x6 tile: odd rows ##. repeating, even rows ..#."""
    rows = []
    for i in range(1, h + 1):
        mask = 0
        for j in range(1, w + 1):
            filled = (j % 3 != 0) if i % 2 == 1 else (j % 3 == 0)
            if filled:
                mask |= 1 << (j - 1)
        rows.append(mask)
    return Word2D.from_row_masks(w, rows)


def construct_d0(h: int, w: int) -> Word2D:
    return _build(0, h, w)


def construct_d1(h: int, w: int) -> Word2D:
    return _build(1, h, w)


def construct_d2(h: int, w: int) -> Word2D:
    return _build(2, h, w)


def construct_d3(h: int, w: int) -> Word2D:
    return _build(3, h, w)


def construct_d4(h: int, w: int) -> Word2D:
    return _build(4, h, w)


def _full(h: int, w: int) -> Word2D:
    full = (1 << w) - 1
    return Word2D.from_row_masks(w, [full] * h)


def _d1_card(h: int, w: int) -> Word2D:
    # lay the stripe tile along the even dimension; for odd x odd along the
    # larger one (which realizes the ceil(2h/3) branch)
    if w % 2 == 0:
        return _stripes_d1(h, w)
    return transform(_stripes_d1(w, h), "transpose")


def _w2_pattern(h: int) -> Word2D:
    period = (0b11, 0b10, 0b11, 0b01)
    return Word2D.from_row_masks(2, [period[(i - 1) % 4] for i in range(1, h + 1)])


def _w3_cycle(h: int) -> Word2D:
    return Word2D.from_row_masks(3, [0b111] + [0b101] * (h - 2) + [0b111])


def _w4_blocks(h: int) -> Word2D:
    if h == 4:
        return BLOCKS["W4"]
    A, B, C, D = BLOCKS["A"], BLOCKS["B"], BLOCKS["C"], BLOCKS["D"]
    Dt, E, U, V, X, Y = (
        BLOCKS["D_tilde"],
        BLOCKS["E"],
        BLOCKS["U"],
        BLOCKS["V"],
        BLOCKS["X"],
        BLOCKS["Y"],
    )

    def reps(base: Word2D, count: int) -> Word2D | None:
        if count == 0:
            return None
        return power(base, base.height * count, 4)

    UV = vconcat(U, V)
    XY = vconcat(X, Y)
    r = h % 6
    if r == 0:
        parts = [A, reps(UV, (h - 6) // 6), C]
    elif r == 1:
        parts = [B, reps(XY, (h - 7) // 6), D]
    elif r == 2:
        parts = [E, reps(UV, (h - 2) // 6)]
    elif r == 3:
        parts = [A, reps(UV, (h - 9) // 6), U, C]
    elif r == 4:
        parts = [B, reps(XY, (h - 10) // 6), X, Dt]
    else:
        parts = [E, reps(UV, (h - 5) // 6), U]
    word = None
    for part in parts:
        if part is None:
            continue
        word = part if word is None else vconcat(word, part)
    assert word is not None and word.height == h
    return word


def _smallw_dp(h: int, w: int) -> Word2D:
    _, witness = oracle.exact_max(2, h, w)
    return witness


def _d3_word(h: int, w: int) -> Word2D:
    if min(h, w) <= 2:
        return _full(h, w)
    witness = domination.min_dominating_set(h - 2, w - 2)
    rows = []
    holes = {(i + 1, j + 1) for (i, j) in witness.chosen}
    full = (1 << w) - 1
    for i in range(1, h + 1):
        mask = full
        for j in range(1, w + 1):
            if (i, j) in holes:
                mask &= ~(1 << (j - 1))
        rows.append(mask)
    return Word2D.from_row_masks(w, rows)


def _d2_general(h: int, w: int) -> Word2D:
    from . import _d2_general as impl

    return impl.build(h, w)


def _build_normalized(d: int, h: int, w: int) -> Word2D:
    """h >= w here."""
    plan = recipe(d, h, w)
    strategy = plan.strategy
    if strategy == "checkerboard":
        return _checkerboard(h, w)
    if strategy == "tile2x6":
        return _d1_card(h, w)
    if strategy == "full":
        return _full(h, w)
    if strategy == "dominating_complement":
        return _d3_word(h, w)
    if strategy == "column":
        return _full(h, 1)
    if strategy == "w2period4":
        return _w2_pattern(h)
    if strategy == "w3cycle":
        return _w3_cycle(h)
    if strategy == "w4blocks":
        return _w4_blocks(h)
    if strategy == "smallw_dp":
        return _smallw_dp(h, w)
    if strategy == "diagonal_general":
        return _d2_general(h, w)
    raise AssertionError(f"unhandled strategy {strategy}")


def _build(d: int, h: int, w: int) -> Word2D:
    _validate(d, h, w)
    if h >= w:
        word = _build_normalized(d, h, w)
    else:
        word = transform(_build_normalized(d, w, h), "transpose")
    _verify(word, d, h, w)
    return word


def _verify(word: Word2D, d: int, h: int, w: int) -> None:
    expected = formula.max_filled(d, h, w)
    if word.height != h or word.width != w:
        raise ConstructionError(
            f"construct({d},{h},{w}) produced {word.height}x{word.width}"
        )
    if not is_degree_bounded(word, d):
        raise ConstructionError(f"construct({d},{h},{w}) violates the degree bound")
    got = filled_count(word)
    if got != expected:
        raise ConstructionError(
            f"construct({d},{h},{w}) has {got} cells, formula says {expected}"
        )


def construct(d: int, h: int, w: int) -> Word2D:
    """A maximal degree-d-bounded h x w word, verified before return."""
    return _build(d, h, w)
