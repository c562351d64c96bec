"""General-width maximal degree-2 construction (normalized h >= w >= 7).

Interior: anti-diagonal stripes, empty exactly where (j - i) = 0 (mod 3).
Every filled cell then has exactly two filled neighbors inside the grid
(fewer at the boundary), and the empty diagonals run from top-left to
bottom-right.  Where an empty diagonal terminates in a corner, the two
flanking cells each lose a neighbor to the same diagonal, so filling the
corner cell itself is free: top-left always, bottom-right exactly when
h = w (mod 3).  The corner gains lift the stripe count to the closed
formula in every residue class.
"""

from .grid_word import Word2D


def build(h: int, w: int) -> Word2D:
    rows = []
    for i in range(1, h + 1):
        mask = 0
        for j in range(1, w + 1):
            if (j - i) % 3 != 0:
                mask |= 1 << (j - 1)
        rows.append(mask)
    rows[0] |= 1  # top-left corner: its empty diagonal runs inward
    if (h - w) % 3 == 0:
        rows[h - 1] |= 1 << (w - 1)  # bottom-right corner likewise
    return Word2D.from_row_masks(w, rows)
