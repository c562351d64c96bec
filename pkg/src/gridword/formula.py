"""Closed-form maxima m_d(h, w) for d in {0..4} and the exact d=2 excess table.

All arithmetic is exact integer arithmetic; d=2 values are derived from the
excess table in thirds, so branch boundaries such as 4/3 versus 1 are never
subject to rounding.  Inputs are symmetric in (h, w) and normalized so the
larger dimension plays the role of the height.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid_word import Third


def _normalize(h: int, w: int) -> tuple[int, int]:
    if h < 1 or w < 1:
        raise ValueError(f"dimensions must be >= 1, got {h}x{w}")
    return (h, w) if h >= w else (w, h)


def excess_branch(h: int, w: int) -> int:
    """1-based index of the excess-table branch that fires for (h, w).

    The seven guards are mutually exclusive after normalization; tests
    assert that exactly one fires per input.
    """
    a, b = _normalize(h, w)
    guards = _branch_guards(a, b)
    hits = [i for i, (hit, _) in enumerate(guards, start=1) if hit]
    if len(hits) > 1:
        raise AssertionError(f"multiple excess branches fire for {a}x{b}: {hits}")
    return hits[0] if hits else 7


def _branch_guards(a: int, b: int) -> list[tuple[bool, Third]]:
    """Guard/value pairs for branches 1..6 (branch 7 is the fallthrough).

    Branch 6 uses the condition h*w = 0 (mod 3): with only w = 0 (mod 3)
    the value 2/3 would make m_2 non-integral whenever h = 0 (mod 3) and
    w is not, so the product form is the consistent reading (the oracle
    sweep confirms it, e.g. m_2(6,5) = 21).
    """
    return [
        (b == 1 or (a == 2 and b == 2), Third(a * b)),
        (b == 2 and a >= 4 and a % 2 == 0, Third(a // 2)),
        (b == 2 and a >= 3 and a % 2 == 1, Third((a + 3) // 2)),
        (b == 3 or (a % 3 == 0 and b % 3 == 0), Third(6)),
        (b >= 4 and a % 3 == b % 3 and b % 3 != 0, Third(4)),
        (b >= 4 and (a * b) % 3 == 0 and a % 3 != b % 3, Third(3)),
    ]


def excess_max(h: int, w: int) -> Third:
    """Exact maximum excess over degree-<=2 words of the given dimensions."""
    a, b = _normalize(h, w)
    for hit, value in _branch_guards(a, b):
        if hit:
            return value
    return Third(2)


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def _max_filled_d1(a: int, b: int) -> int:
    if a % 2 == 0 and b % 2 == 0:
        return a * b // 2
    if a % 2 == 1 and b % 2 == 0:
        return (a - 1) * b // 2 + _ceil_div(2 * b, 3)
    # b odd (a of either parity): stripes run along the larger dimension
    return a * (b - 1) // 2 + _ceil_div(2 * a, 3)


def max_filled(d: int, h: int, w: int) -> int:
    """Maximum filled cells of an h x w word whose filled cells all have at
    most d filled neighbors."""
    if not isinstance(d, int) or not 0 <= d <= 4:
        raise ValueError(f"d must be an integer in [0, 4], got {d!r}")
    a, b = _normalize(h, w)
    if d == 0:
        return _ceil_div(a * b, 2)
    if d == 1:
        return _max_filled_d1(a, b)
    if d == 2:
        thirds = 2 * a * b + excess_max(a, b).numerator
        if thirds % 3 != 0:
            raise AssertionError(f"non-integral m_2 at {a}x{b}")
        return thirds // 3
    if d == 3:
        if b <= 2:
            return a * b
        from . import domination

        return a * b - domination.gamma(a - 2, b - 2)
    return a * b


def formula_table(d: int, h_max: int, w_max: int) -> list[list[int]]:
    """m_d over the rectangle of parameter pairs; entry [h-1][w-1]."""
    if h_max < 1 or w_max < 1:
        raise ValueError("table bounds must be >= 1")
    return [
        [max_filled(d, h, w) for w in range(1, w_max + 1)]
        for h in range(1, h_max + 1)
    ]


@dataclass(frozen=True)
class MaxFormula:
    """A computed m_d value together with its (normalized) inputs."""

    d: int
    h: int
    w: int
    value: int

    @classmethod
    def compute(cls, d: int, h: int, w: int) -> "MaxFormula":
        a, b = _normalize(h, w)
        value = max_filled(d, a, b)
        if not 0 <= value <= a * b:
            raise AssertionError(f"m_{d}({a},{b}) = {value} outside [0, hw]")
        return cls(d, a, b, value)


@dataclass(frozen=True)
class ExcessMax:
    """A computed excess-table value together with its normalized inputs."""

    h: int
    w: int
    value: Third

    @classmethod
    def compute(cls, h: int, w: int) -> "ExcessMax":
        a, b = _normalize(h, w)
        value = excess_max(a, b)
        if (2 * a * b + value.numerator) % 3 != 0:
            raise AssertionError(f"excess at {a}x{b} breaks m_2 integrality")
        return cls(a, b, value)
