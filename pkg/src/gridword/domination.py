"""Exact minimum dominating sets of grid graphs via profile DP.

States are one trit per profile column: 0 = chosen, 1 = dominated but not
chosen, 2 = not yet dominated (must receive a chosen neighbor below).  The
key object is the completion table C_k[s]: the minimum number of chosen
vertices needed to finish k more rows starting from frontier state s.  It
is independent of absolute row position, so one table per width serves
every height at once: gamma(h, w) is C_h at the all-dominated start state,
and witnesses follow by a row-by-row greedy against the same tables.

Finite values of C_k spread by at most the profile width, so levels are
retained as uint8 offsets from a per-level base; only level 0 contains
infinities (every state is completable once a row remains).
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels import DOM_INF
from .errors import CapacityError

DEFAULT_PROFILE_LIMIT = 14
_VALUE_HEADROOM = 29_000  # int16 working vectors: gamma + width must stay below
_RETAIN_BYTES = 256 << 20  # per-width budget for retained levels
_INF_MARK = 255


def _resolve_limit(profile_limit: int | None) -> int:
    if profile_limit is not None:
        return profile_limit
    env = os.environ.get("GRIDWORD_PROFILE_LIMIT")
    if env:
        return int(env)
    return DEFAULT_PROFILE_LIMIT


def _terminal_vector(w: int) -> np.ndarray:
    """C_0: zero cost if no column is still open, else infeasible."""
    size = 3**w
    states = np.arange(size, dtype=np.int64)
    bad = np.zeros(size, dtype=bool)
    for j in range(w):
        bad |= (states // 3**j) % 3 == 2
    out = np.zeros(size, dtype=np.int16)
    out[bad] = DOM_INF
    return out


def _start_state(w: int) -> int:
    """All columns 'dominated, not chosen': the state above the first row."""
    return (3**w - 1) // 2


def _compress(vec: np.ndarray) -> tuple[int, np.ndarray]:
    finite = vec[vec < DOM_INF]
    base = int(finite.min()) if finite.size else 0
    off = (vec.astype(np.int32) - base).astype(np.int64)
    off[vec >= DOM_INF] = _INF_MARK
    if off.max() > _INF_MARK or (off[vec < DOM_INF] >= _INF_MARK).any():
        raise RuntimeError("completion-table spread exceeds uint8 storage")
    return base, off.astype(np.uint8)


def _decompress(base: int, off: np.ndarray) -> np.ndarray:
    vec = base + off.astype(np.int16)
    vec[off == _INF_MARK] = DOM_INF
    return vec


class _WidthTables:
    """Completion tables for one profile width.

    Levels are retained compressed at a stride that doubles whenever the
    retention budget would be exceeded; missing levels are rebuilt from the
    nearest retained one (and the rebuilt window is cached).
    """

    def __init__(self, w: int):
        self.w = w
        self.size = 3**w
        self.start = _start_state(w)
        self.stride = 1
        self.max_levels = max(8, _RETAIN_BYTES // self.size)
        self.levels: dict[int, tuple[int, np.ndarray]] = {}
        self.window: dict[int, tuple[int, np.ndarray]] = {}
        self.gam: list[int] = []
        self.top_k = 0
        self.top_vec = _terminal_vector(w)
        self._retain(0, self.top_vec)
        self.gam.append(int(self.top_vec[self.start]))

    def _retain(self, k: int, vec: np.ndarray) -> None:
        if k % self.stride == 0:
            self.levels[k] = _compress(vec)
            if len(self.levels) > self.max_levels:
                self.stride *= 2
                self.levels = {
                    kk: v for kk, v in self.levels.items() if kk % self.stride == 0
                }

    def ensure(self, k: int) -> None:
        while self.top_k < k:
            self.top_vec = _kernels.dom_backward_row(self.top_vec, self.w)
            self.top_k += 1
            self.gam.append(int(self.top_vec[self.start]))
            self._retain(self.top_k, self.top_vec)

    def level(self, k: int) -> tuple[int, np.ndarray]:
        """(base, uint8 offsets) for C_k."""
        self.ensure(k)
        hit = self.levels.get(k)
        if hit is not None:
            return hit
        hit = self.window.get(k)
        if hit is not None:
            return hit
        base_k = max(kk for kk in self.levels if kk <= k)
        vec = _decompress(*self.levels[base_k])
        self.window = {}
        for kk in range(base_k + 1, k + 1):
            vec = _kernels.dom_backward_row(vec, self.w)
            self.window[kk] = _compress(vec)
        return self.window[k]

    def gamma_at(self, k: int) -> int:
        self.ensure(k)
        return self.gam[k]


_width_cache: dict[int, _WidthTables] = {}
_cache_lock = threading.Lock()


def _tables(w: int) -> _WidthTables:
    tab = _width_cache.get(w)
    if tab is None:
        tab = _WidthTables(w)
        _width_cache[w] = tab
    return tab


def _check_capacity(rows: int, cols: int, profile_limit: int | None) -> None:
    limit = _resolve_limit(profile_limit)
    if cols > limit:
        raise CapacityError(
            f"profile width {cols} exceeds the limit {limit} "
            f"(3^{cols} states); raise the limit explicitly to proceed"
        )
    # gamma <= (rows+2)(cols+2)/5; keep every finite table entry within the
    # int16 working range
    max_rows = 5 * _VALUE_HEADROOM // (cols + 2) - 2
    if rows > max_rows:
        raise CapacityError(
            f"height {rows} exceeds the limit {max_rows} for width {cols}"
        )


def gamma(h: int, w: int, *, profile_limit: int | None = None) -> int:
    """Exact domination number of the h x w grid graph."""
    if h < 1 or w < 1:
        raise ValueError(f"dimensions must be >= 1, got {h}x{w}")
    rows, cols = (h, w) if h >= w else (w, h)
    _check_capacity(rows, cols, profile_limit)
    with _cache_lock:
        return _tables(cols).gamma_at(rows)


def _mask_rank(w: int) -> np.ndarray:
    """Total order on row masks realizing the row-major set order.

    Masks compare by their ascending column tuples; when one tuple is a
    proper prefix of the other, the longer mask wins (its extra cell in
    this row precedes anything a later row could contribute).
    """
    pad = w + 1

    def key(mask: int) -> tuple[int, ...]:
        cols = tuple(j + 1 for j in range(w) if (mask >> j) & 1)
        return cols + (pad,) * (w - len(cols))

    order = sorted(range(1 << w), key=key)
    rank = np.empty(1 << w, dtype=np.int64)
    for r, mask in enumerate(order):
        rank[mask] = r
    return rank


_rank_cache: dict[int, np.ndarray] = {}


def _ranks(w: int) -> np.ndarray:
    rank = _rank_cache.get(w)
    if rank is None:
        rank = _mask_rank(w)
        _rank_cache[w] = rank
    return rank


def _digits(state: int, w: int) -> list[int]:
    out = []
    for _ in range(w):
        out.append(state % 3)
        state //= 3
    return out


def _row_transition_all(state: int, w: int) -> tuple[np.ndarray, np.ndarray]:
    """For every candidate row mask c: validity and the successor state."""
    n = 1 << w
    masks = np.arange(n, dtype=np.int64)
    spread = ((masks << 1) | (masks >> 1)) & (n - 1)
    digits = _digits(state, w)
    open_mask = sum(1 << j for j, dig in enumerate(digits) if dig == 2)
    valid = (masks & open_mask) == open_mask
    succ = np.zeros(n, dtype=np.int64)
    for j in range(w):
        cb = (masks >> j) & 1
        sp = (spread >> j) & 1
        above_chosen = digits[j] == 0
        dj = np.where(cb == 1, 0, np.where((sp == 1) | above_chosen, 1, 2))
        succ += dj * 3**j
    return valid, succ


@dataclass(frozen=True)
class DominationWitness:
    """A concrete minimum dominating set, certified before return."""

    h: int
    w: int
    gamma: int
    chosen: frozenset[tuple[int, int]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "h": self.h,
                "w": self.w,
                "gamma": self.gamma,
                "chosen": [list(cell) for cell in sorted(self.chosen)],
            }
        )


def is_dominating(h: int, w: int, chosen) -> bool:
    """Literal check: every vertex is chosen or adjacent to a chosen one."""
    chosen = set(chosen)
    for (i, j) in chosen:
        if not (1 <= i <= h and 1 <= j <= w):
            raise ValueError(f"vertex ({i},{j}) outside the {h}x{w} grid")
    for i in range(1, h + 1):
        for j in range(1, w + 1):
            if (i, j) in chosen:
                continue
            if (
                (i - 1, j) in chosen
                or (i + 1, j) in chosen
                or (i, j - 1) in chosen
                or (i, j + 1) in chosen
            ):
                continue
            return False
    return True


def min_dominating_set(
    h: int, w: int, *, profile_limit: int | None = None
) -> DominationWitness:
    """A minimum dominating set; deterministic (lexicographically smallest
    chosen set in row-major order among all optima)."""
    if h < 1 or w < 1:
        raise ValueError(f"dimensions must be >= 1, got {h}x{w}")
    transposed = w > h
    rows, cols = (h, w) if not transposed else (w, h)
    _check_capacity(rows, cols, profile_limit)
    rank = _ranks(cols)
    pc = np.array([int(v).bit_count() for v in range(1 << cols)], dtype=np.int64)
    cells: list[tuple[int, int]] = []
    with _cache_lock:
        tab = _tables(cols)
        total = tab.gamma_at(rows)
        target = total
        state = _start_state(cols)
        for r in range(1, rows + 1):
            base, off = tab.level(rows - r)
            valid, succ = _row_transition_all(state, cols)
            got = off[succ].astype(np.int64)
            vals = pc + base + got
            vals[got == _INF_MARK] = DOM_INF
            feasible = np.flatnonzero(valid & (vals == target))
            if len(feasible) == 0:
                raise RuntimeError("domination greedy found no feasible row")
            c = int(feasible[np.argmin(rank[feasible])])
            for j in range(cols):
                if (c >> j) & 1:
                    cells.append((r, j + 1))
            state = int(succ[c])
            target -= int(pc[c])
    if transposed:
        cells = [(j, i) for (i, j) in cells]
    witness = DominationWitness(h, w, total, frozenset(cells))
    if len(witness.chosen) != total or not is_dominating(h, w, witness.chosen):
        raise RuntimeError("domination witness failed re-verification")
    return witness
