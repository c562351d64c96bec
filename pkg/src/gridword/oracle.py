"""Exact maximization over degree-bounded words by row-profile DP.

The DP state is the pair (previous row, current row) of occupancy masks; a
cell's degree is fully determined once the row below it is fixed, so each
transition finalizes exactly one row.  Transition tables are precomputed
per (d, width) and reused across heights.  The row relaxation itself is a
kernel with a compiled and a pure-numpy backend.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass

import numpy as np

from . import _kernels, formula
from ._kernels import NEG
from ._kernels.fallback import _zeta_max_axis1
from .errors import CapacityError, PartialResultError
from .grid_word import (
    Word2D,
    filled_count,
    is_degree_bounded,
    render_text,
    transform,
)

DEFAULT_WIDTH_LIMIT = 8
DEFAULT_ROW_BUDGET = 100_000
DEFAULT_ENUM_CAP = 100_000
DEFAULT_ENUM_ROW_LIMIT = 64

_NEG32 = -(1 << 30)
_TRACE_BUDGET_BYTES = 160 << 20


class OracleTables:
    """Per-(d, w) transition data for the pair-state profile DP."""

    def __init__(self, d: int, w: int):
        self.d = d
        self.w = w
        n = 1 << w
        self.n = n
        self.size = n * n
        s = np.arange(self.size, dtype=np.int64)
        a = s >> w
        b = s & (n - 1)
        dead = np.zeros(self.size, dtype=bool)
        forbid = np.zeros(self.size, dtype=np.int64)
        for j in range(w):
            own = (b >> j) & 1
            pre = (a >> j) & 1
            if j > 0:
                pre = pre + ((b >> (j - 1)) & 1)
            if j + 1 < w:
                pre = pre + ((b >> (j + 1)) & 1)
            dead |= (own == 1) & (pre > d)
            forbid |= ((own == 1) & (pre == d)).astype(np.int64) << j
        self.dead = dead
        self.dead_u8 = dead.astype(np.uint8)
        self.forbid = forbid
        self.forbid_compl = (~forbid) & (n - 1)
        self.b_of_state = b
        self.pc = np.array([int(v).bit_count() for v in range(n)], dtype=np.int64)
        self.compl = (~np.arange(n, dtype=np.int64)) & (n - 1)
        key = (b << w) | forbid
        order = np.argsort(key, kind="stable").astype(np.int64)
        sk = key[order]
        starts_mask = np.empty(self.size, dtype=bool)
        starts_mask[0] = True
        starts_mask[1:] = sk[1:] != sk[:-1]
        self.order = order
        self.starts = np.flatnonzero(starts_mask).astype(np.int64)
        self.keys = sk[self.starts]
        # column views used by witness backtracking
        self.dead2 = dead.reshape(n, n)
        self.forbid2 = forbid.reshape(n, n)

    def initial_dp(self) -> np.ndarray:
        dp = np.full(self.size, NEG, dtype=np.int64)
        dp[: self.n] = self.pc  # states (prev=empty virtual row, cur=b)
        return dp


_tables_cache: dict[tuple[int, int], OracleTables] = {}
_tables_lock = threading.Lock()


def _tables(d: int, w: int) -> OracleTables:
    key = (d, w)
    with _tables_lock:
        tab = _tables_cache.get(key)
        if tab is None:
            tab = OracleTables(d, w)
            _tables_cache[key] = tab
        return tab


def _validate_d(d: int) -> None:
    if not isinstance(d, int) or not 0 <= d <= 4:
        raise ValueError(f"d must be an integer in [0, 4], got {d!r}")


def _validate_dims(h: int, w: int) -> None:
    if h < 1 or w < 1:
        raise ValueError(f"dimensions must be >= 1, got {h}x{w}")


class _DpTrace:
    """Forward DP with spaced checkpoints; serves dp vectors to backtracking.

    Vectors are stored as int32 (values fit; the NEG sentinel is clipped,
    which keeps unreachable entries strictly negative).
    """

    def __init__(self, tab: OracleTables, h: int):
        self.tab = tab
        self.h = h
        per = tab.size * 4
        max_vecs = max(4, (_TRACE_BUDGET_BYTES // 2) // per)
        self.interval = max(1, math.ceil((h + 1) / max_vecs))
        if self.interval > max_vecs:
            raise CapacityError(
                f"height {h} at width {tab.w} exceeds the witness trace budget"
            )
        self.checkpoints: dict[int, np.ndarray] = {}
        self.window: dict[int, np.ndarray] = {}
        dp = tab.initial_dp()
        self._store_checkpoint(1, dp)
        for r in range(2, h + 1):
            dp = _kernels.oracle_row_step(dp, tab)
            if (r - 1) % self.interval == 0 or r == h:
                self._store_checkpoint(r, dp)
        self.final = dp

    @staticmethod
    def _compress(dp: np.ndarray) -> np.ndarray:
        return np.maximum(dp, _NEG32).astype(np.int32)

    def _store_checkpoint(self, r: int, dp: np.ndarray) -> None:
        self.checkpoints[r] = self._compress(dp)

    def get(self, r: int) -> np.ndarray:
        """dp vector after r rows, as int32 with clipped sentinel."""
        if r in self.checkpoints:
            return self.checkpoints[r]
        if r in self.window:
            return self.window[r]
        base = max(k for k in self.checkpoints if k <= r)
        dp = self.checkpoints[base].astype(np.int64)
        dp = np.where(dp <= _NEG32, NEG, dp)
        self.window = {}
        for rr in range(base + 1, r + 1):
            dp = _kernels.oracle_row_step(dp, self.tab)
            self.window[rr] = self._compress(dp)
        return self.window[r]


def _resolve(value, default):
    return default if value is None else value


def _backtrack_rows(tab: OracleTables, trace: _DpTrace, h: int) -> list[int]:
    """Deterministic witness rows: ties broken by the numerically smallest
    row mask, bottom row first."""
    n = tab.n
    final = np.where(tab.dead, NEG, trace.final)
    best = int(final.max())
    cand = np.flatnonzero(final == best)
    a_part = cand >> tab.w
    b_part = cand & (n - 1)
    order = np.lexsort((a_part, b_part))  # smallest b, then smallest a
    state = int(cand[order[0]])
    a, b = state >> tab.w, state & (n - 1)
    rows = [0] * (h + 1)
    rows[h] = b
    if h == 1:
        if a != 0:
            raise RuntimeError("oracle backtrack: bad initial state")
        return rows[1:]
    rows[h - 1] = a
    for r in range(h, 1, -1):
        target = int(trace.get(r)[(a << tab.w) | b])
        prev = trace.get(r - 1).reshape(n, n)
        vals = prev[:, a].astype(np.int64)
        ok = (
            (~tab.dead2[:, a])
            & ((tab.forbid2[:, a] & b) == 0)
            & (vals + tab.pc[b] == target)
        )
        if r == 2:
            # the state before row 1 has a virtual empty previous row
            z_cand = np.flatnonzero(ok[:1])
        else:
            z_cand = np.flatnonzero(ok)
        if len(z_cand) == 0:
            raise RuntimeError("oracle backtrack: no predecessor found")
        z = int(z_cand[0])
        a, b = z, a
        if r - 2 >= 1:
            rows[r - 2] = a
    if a != 0:
        raise RuntimeError("oracle backtrack: did not reach the virtual row")
    return rows[1:]


def exact_max(
    d: int,
    h: int,
    w: int,
    *,
    width_limit: int | None = None,
    row_budget: int | None = None,
) -> tuple[int, Word2D]:
    """True maximum filled count over degree-d-bounded h x w words, plus a
    verified witness.  The profile runs over the smaller dimension."""
    _validate_d(d)
    _validate_dims(h, w)
    width_limit = _resolve(width_limit, DEFAULT_WIDTH_LIMIT)
    row_budget = _resolve(row_budget, DEFAULT_ROW_BUDGET)
    transposed = w > h
    if transposed:
        h, w = w, h
    if w > width_limit:
        raise CapacityError(
            f"profile width {w} exceeds the limit {width_limit}"
        )
    if h > row_budget:
        raise CapacityError(f"height {h} exceeds the row budget {row_budget}")
    tab = _tables(d, w)
    trace = _DpTrace(tab, h)
    final = np.where(tab.dead, NEG, trace.final)
    value = int(final.max())
    rows = _backtrack_rows(tab, trace, h)
    word = Word2D.from_row_masks(w, rows)
    if transposed:
        word = transform(word, "transpose")
    if filled_count(word) != value or not is_degree_bounded(word, d):
        raise RuntimeError("oracle witness failed re-verification")
    return value, word


def _popcount_u64(arr: np.ndarray) -> np.ndarray:
    v = arr.astype(np.uint64)
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    h01 = np.uint64(0x0101010101010101)
    v = v - ((v >> np.uint64(1)) & m1)
    v = (v & m2) + ((v >> np.uint64(2)) & m2)
    v = (v + (v >> np.uint64(4))) & m4
    return ((v * h01) >> np.uint64(56)).astype(np.int64)


def exact_max_bruteforce(d: int, h: int, w: int) -> int:
    """Independent cross-check: exhaust all 2^(hw) words (hw <= 25)."""
    _validate_d(d)
    _validate_dims(h, w)
    cells = h * w
    if cells > 25:
        raise CapacityError(f"{h}x{w} has {cells} cells; brute force caps at 25")
    full = (1 << cells) - 1
    col0 = sum(1 << (i * w) for i in range(h))
    col_last = col0 << (w - 1)
    from itertools import combinations

    best = 0
    chunk = 1 << 22
    for start in range(0, full + 1, chunk):
        stop = min(start + chunk, full + 1)
        m = np.arange(start, stop, dtype=np.int64)
        up = m >> w
        down = (m << w) & full
        left = (m << 1) & full & ~col0
        right = (m >> 1) & ~col_last
        bad = np.zeros(m.shape, dtype=bool)
        if d < 4:
            for combo in combinations((up, down, left, right), d + 1):
                hit = m
                for nb in combo:
                    hit = hit & nb
                bad |= hit != 0
        counts = _popcount_u64(m)
        counts[bad] = -1
        best = max(best, int(counts.max()))
    return best


def _suffix_step(suffix: np.ndarray, tab: OracleTables) -> np.ndarray:
    """One backward step of the pair-state DP: best completion values."""
    n = tab.n
    g = suffix.reshape(n, n) + tab.pc[np.newaxis, :]
    g = np.ascontiguousarray(g)
    _zeta_max_axis1(g, tab.w)
    flat = g.reshape(-1)
    out = flat[(tab.b_of_state << tab.w) | tab.forbid_compl]
    return np.where(tab.dead, NEG, out)


def _suffix_tables(tab: OracleTables, h: int) -> list[np.ndarray]:
    """suffix[k][s] = best filled count over k more rows then finalization."""
    s0 = np.where(tab.dead, NEG, np.zeros(tab.size, dtype=np.int64))
    out = [s0]
    for _ in range(h - 1):
        out.append(_suffix_step(out[-1], tab))
    return out


def _symmetry_group(square: bool) -> tuple[str, ...]:
    if square:
        return (
            "identity",
            "rot90",
            "rot180",
            "rot270",
            "flip_h",
            "flip_v",
            "transpose",
            "anti_transpose",
        )
    return ("identity", "rot180", "flip_h", "flip_v")


def canonical_form(word: Word2D) -> str:
    """Orbit representative: lexicographically smallest text rendering over
    the dihedral group of the rectangle (order 8 when square, else 4)."""
    names = _symmetry_group(word.height == word.width)
    return min(render_text(transform(word, t)) for t in names)


def count_maximal(
    d: int,
    h: int,
    w: int,
    up_to_symmetry: bool = False,
    *,
    cap: int | None = None,
    width_limit: int | None = None,
    row_limit: int | None = None,
) -> int:
    """Number of maximal (d-full) h x w words, optionally up to symmetry.

    Raises PartialResultError carrying the lower bound found when the
    enumeration exceeds ``cap`` stored words.
    """
    _validate_d(d)
    _validate_dims(h, w)
    cap = _resolve(cap, DEFAULT_ENUM_CAP)
    width_limit = _resolve(width_limit, DEFAULT_WIDTH_LIMIT)
    row_limit = _resolve(row_limit, DEFAULT_ENUM_ROW_LIMIT)
    transposed = w > h
    if transposed:
        h, w = w, h
    if w > width_limit:
        raise CapacityError(f"profile width {w} exceeds the limit {width_limit}")
    if h > row_limit:
        raise CapacityError(
            f"height {h} exceeds the enumeration row limit {row_limit}"
        )
    tab = _tables(d, w)
    suffix = _suffix_tables(tab, h)
    n = tab.n
    top = tab.pc + suffix[h - 1][:n] if h > 1 else np.where(
        tab.dead[:n], NEG, tab.pc
    )
    best = int(top.max())
    canon: set[str] = set()
    raw = 0

    def record(rows: list[int]) -> None:
        nonlocal raw
        raw += 1
        word = Word2D.from_row_masks(w, rows)
        if up_to_symmetry:
            canon.add(canonical_form(word))
        current = len(canon) if up_to_symmetry else raw
        if raw > cap or len(canon) > cap:
            raise PartialResultError(
                f"enumeration cap {cap} exceeded", lower_bound=current
            )

    def extend(rows: list[int], acc: int, a: int, b: int) -> None:
        k = h - len(rows)
        if k == 0:
            if not tab.dead[(a << tab.w) | b]:
                record(rows)
            return
        state = (a << tab.w) | b
        if tab.dead[state]:
            return
        forb = int(tab.forbid[state])
        nxt = suffix[k - 1]
        for c in range(n):
            if c & forb:
                continue
            gain = acc + int(tab.pc[c])
            if gain + int(nxt[(b << tab.w) | c]) == best:
                extend(rows + [c], gain, b, c)

    for b in range(n):
        if h == 1:
            if not tab.dead[b] and int(tab.pc[b]) == best:
                record([b])
        else:
            if int(tab.pc[b]) + int(suffix[h - 1][b]) == best:
                extend([b], int(tab.pc[b]), 0, b)

    return len(canon) if up_to_symmetry else raw


@dataclass(frozen=True)
class MaxReport:
    """One (d, h, w) comparison of the closed formula against the oracle."""

    d: int
    h: int
    w: int
    formula_value: int | None
    oracle_value: int | None
    witness: Word2D | None
    agrees: bool | None
    skipped: bool = False
    reason: str = ""

    def to_json_line(self) -> str:
        if self.skipped:
            return json.dumps(
                {
                    "d": self.d,
                    "h": self.h,
                    "w": self.w,
                    "skipped": True,
                    "reason": self.reason,
                }
            )
        return json.dumps(
            {
                "d": self.d,
                "h": self.h,
                "w": self.w,
                "formula": self.formula_value,
                "oracle": self.oracle_value,
                "agrees": self.agrees,
                "witness": render_text(self.witness),
            }
        )


def verify_theorem(
    d_list,
    h_max: int,
    w_max: int | None = None,
    *,
    odd_only: bool = False,
    width_limit: int | None = None,
) -> list[MaxReport]:
    """One MaxReport per (d, h, w) with 1 <= w <= min(h, w_max), h <= h_max.

    Capacity misses are marked skipped rather than failing the sweep.
    """
    if w_max is None:
        w_max = h_max
    reports = []
    for d in d_list:
        _validate_d(d)
        for h in range(1, h_max + 1):
            for w in range(1, min(h, w_max) + 1):
                if odd_only and (h % 2 == 0 or w % 2 == 0):
                    continue
                fval = formula.max_filled(d, h, w)
                try:
                    oval, witness = exact_max(d, h, w, width_limit=width_limit)
                except CapacityError as exc:
                    reports.append(
                        MaxReport(d, h, w, fval, None, None, None, True, str(exc))
                    )
                    continue
                if filled_count(witness) != oval or not is_degree_bounded(witness, d):
                    raise RuntimeError("sweep witness failed verification")
                reports.append(
                    MaxReport(d, h, w, fval, oval, witness, fval == oval)
                )
    return reports
