import random

import hypothesis.strategies as st
import pytest

from gridword import Word2D

# A 7x4 example word with row distribution (2,2,3,3,2,2,2):
# cell (2,3) is empty (degree 0 by definition) and cell (3,3) is filled
# with exactly two filled neighbors.
SAMPLE_7X4_TEXT = ".##.\n.#.#\n.###\n##.#\n#..#\n#..#\n.##.\n"


@st.composite
def words(draw, max_h: int = 7, max_w: int = 7):
    h = draw(st.integers(1, max_h))
    w = draw(st.integers(1, max_w))
    rows = draw(st.lists(st.integers(0, (1 << w) - 1), min_size=h, max_size=h))
    return Word2D.from_row_masks(w, rows)


def random_word(rng: random.Random, max_h: int = 9, max_w: int = 9) -> Word2D:
    h = rng.randint(1, max_h)
    w = rng.randint(1, max_w)
    rows = [rng.randrange(1 << w) for _ in range(h)]
    return Word2D.from_row_masks(w, rows)


@pytest.fixture
def sample_7x4() -> Word2D:
    from gridword import parse_text

    return parse_text(SAMPLE_7X4_TEXT)
