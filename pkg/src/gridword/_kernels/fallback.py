"""Pure numpy implementations of the hot DP row kernels.

Both kernels are one-row relaxations; heights are handled by the callers.
The compiled extension (``_speedups``) implements the same contracts with
plain loops; outputs must be bit-identical between backends.
"""

from __future__ import annotations

import numpy as np

NEG = -(1 << 60)  # max-plus "minus infinity"; survives per-row +popcount drift
DOM_INF = 30_000  # min-plus infinity for the int16 domination tables


def _zeta_max_axis1(g: np.ndarray, w: int) -> np.ndarray:
    """In place, per row of g: g[b, S] = max over subsets F of S of g[b, F]."""
    n = 1 << w
    for bit in range(w):
        lo = 1 << bit
        view = g.reshape(n, n >> (bit + 1), 2, lo)
        np.maximum(view[:, :, 1, :], view[:, :, 0, :], out=view[:, :, 1, :])
    return g


def oracle_row_step(dp: np.ndarray, tab) -> np.ndarray:
    """One profile-DP row relaxation for bounded-degree maximization.

    dp is indexed by pair states s = (prev << w) | cur; the result is the
    same layout for states (cur << w) | next.  A transition finalizes the
    degrees of row ``cur``: it is admissible iff the state is not dead and
    ``next`` avoids the state's forbidden columns.
    """
    n = tab.n
    masked = np.where(tab.dead, NEG, dp)
    x = masked[tab.order]
    seg = np.maximum.reduceat(x, tab.starts)
    g = np.full(n * n, NEG, dtype=np.int64)
    g[tab.keys] = seg
    g = g.reshape(n, n)
    _zeta_max_axis1(g, tab.w)
    out = g[:, tab.compl] + tab.pc[np.newaxis, :]
    return out.reshape(-1)


def dom_backward_row(values: np.ndarray, w: int) -> np.ndarray:
    """One backward row step of the grid-domination profile DP.

    ``values[s]``: minimum number of extra chosen vertices needed to finish
    the grid when the frontier row has per-column status s (trits: 0 chosen,
    1 dominated, 2 still open).  Returns the same quantity with one more row
    to place.  Cells are processed right to left, undoing the forward
    per-cell order.
    """
    old = values
    for j in range(w - 1, 0, -1):
        hi = 3 ** (w - 1 - j)
        lo = 3 ** (j - 1)
        o = old.reshape(hi, 3, 3, lo)
        new = np.empty_like(o)
        for a in range(3):
            for l in range(3):
                l2 = 1 if l == 2 else l
                chosen = o[:, 0, l2, :] + np.int16(1)
                if a != 2:
                    skip_a = 1 if (a == 0 or l == 0) else 2
                    np.minimum(chosen, o[:, skip_a, l, :], out=new[:, a, l, :])
                else:
                    new[:, a, l, :] = chosen
        old = new.reshape(-1)
    # j = 0: leftmost cell, no left neighbor
    o = old.reshape(3 ** (w - 1), 3)
    new = np.empty_like(o)
    chosen = o[:, 0] + np.int16(1)
    np.minimum(chosen, o[:, 1], out=new[:, 0])
    np.minimum(chosen, o[:, 2], out=new[:, 1])
    new[:, 2] = chosen
    return new.reshape(-1)
