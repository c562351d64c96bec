import random

import pytest
from hypothesis import given

from gridword import (
    CellState,
    DimensionError,
    ParseError,
    Third,
    Word2D,
    boundary_cells,
    degree_word,
    excess,
    filled_count,
    from_json,
    hconcat,
    induced_components,
    is_degree_bounded,
    is_linear_forest,
    is_snake,
    max_degree,
    parse_text,
    power,
    render_text,
    row_distribution,
    rows_factor,
    to_json,
    transform,
    vconcat,
    with_cell,
)
from gridword.grid_word import TRANSFORM_NAMES, neighbors

from conftest import words


def empty_word(h, w):
    return Word2D.from_row_masks(w, [0] * h)


def full_word(h, w):
    return Word2D.from_row_masks(w, [(1 << w) - 1] * h)


class TestWordBasics:
    def test_indexing_is_one_based(self):
        w = parse_text("#.\n.#\n")
        assert w[1, 1] is CellState.FILLED
        assert w[1, 2] is CellState.EMPTY
        assert w[2, 2] is CellState.FILLED
        with pytest.raises(IndexError):
            w[0, 1]
        with pytest.raises(IndexError):
            w[1, 3]

    def test_cells_sequence(self):
        w = parse_text("#.\n.#\n")
        assert w.cells == (
            CellState.FILLED,
            CellState.EMPTY,
            CellState.EMPTY,
            CellState.FILLED,
        )
        assert Word2D(2, 2, w.cells) == w

    def test_zero_dimensions_rejected(self):
        with pytest.raises(DimensionError):
            Word2D(0, 1, [])
        with pytest.raises(DimensionError):
            Word2D.from_row_masks(0, [0])
        with pytest.raises(DimensionError):
            Word2D(1, 2, [CellState.EMPTY])

    def test_immutable_and_hashable(self):
        w = parse_text("#.\n")
        with pytest.raises(AttributeError):
            w.height = 3
        assert len({w, parse_text("#.\n")}) == 1


class TestFilledCount:
    def test_all_empty(self):
        assert filled_count(empty_word(3, 3)) == 0

    def test_all_filled(self):
        assert filled_count(full_word(2, 5)) == 10

    def test_unique_2full_8x5_has_28_cells(self):
        from gridword import exact_max

        value, witness = exact_max(2, 8, 5)
        assert value == 28
        assert filled_count(witness) == 28


class TestDegrees:
    def test_sample_word_degrees(self, sample_7x4):
        deg = degree_word(sample_7x4)
        assert deg[2, 3] == 0
        assert deg[3, 3] == 2

    def test_all_empty_degrees(self):
        assert degree_word(empty_word(4, 3)).values == (0,) * 12

    def test_full_2x2_degrees(self):
        assert degree_word(full_word(2, 2)).values == (2, 2, 2, 2)

    def test_max_degree(self):
        assert max_degree(empty_word(2, 2)) == 0
        assert max_degree(full_word(2, 2)) == 2
        assert max_degree(full_word(3, 3)) == 4

    def test_is_degree_bounded(self):
        assert is_degree_bounded(empty_word(3, 3), 0)
        assert not is_degree_bounded(full_word(3, 3), 3)
        assert is_degree_bounded(full_word(3, 3), 4)
        assert is_degree_bounded(full_word(6, 1), 2)

    @given(words())
    def test_degree_word_matches_neighbor_count(self, w):
        deg = degree_word(w)
        for i in range(1, w.height + 1):
            for j in range(1, w.width + 1):
                if not w.is_filled(i, j):
                    assert deg[i, j] == 0
                else:
                    expected = sum(
                        1
                        for (ni, nj) in neighbors(w.height, w.width, i, j)
                        if w.is_filled(ni, nj)
                    )
                    assert deg[i, j] == expected

    @given(words())
    def test_degree_respects_neighbor_caps(self, w):
        deg = degree_word(w)
        for i in range(1, w.height + 1):
            for j in range(1, w.width + 1):
                assert deg[i, j] <= len(neighbors(w.height, w.width, i, j))

    @given(words())
    def test_max_degree_is_degree_word_max(self, w):
        assert max_degree(w) == max(degree_word(w).values)

    @given(words(max_h=5, max_w=5))
    def test_degree_locality_under_single_cell_edits(self, w):
        rng = random.Random(filled_count(w))
        i = rng.randint(1, w.height)
        j = rng.randint(1, w.width)
        flipped = with_cell(
            w,
            i,
            j,
            CellState.EMPTY if w.is_filled(i, j) else CellState.FILLED,
        )
        before, after = degree_word(w), degree_word(flipped)
        touchable = set(neighbors(w.height, w.width, i, j)) | {(i, j)}
        for a in range(1, w.height + 1):
            for b in range(1, w.width + 1):
                if (a, b) not in touchable:
                    assert before[a, b] == after[a, b]


class TestConcatenationAndFactors:
    def test_hconcat_definition(self):
        left = parse_text("#\n#\n")
        right = parse_text(".\n.\n")
        assert render_text(hconcat(left, right)) == "#.\n#.\n"

    def test_hconcat_height_mismatch(self):
        with pytest.raises(DimensionError):
            hconcat(parse_text("#\n"), parse_text("#\n#\n"))

    def test_vconcat_definition(self):
        top = parse_text("##\n")
        bottom = parse_text("..\n")
        assert render_text(vconcat(top, bottom)) == "##\n..\n"

    def test_vconcat_width_mismatch(self):
        with pytest.raises(DimensionError):
            vconcat(parse_text("#\n"), parse_text("##\n"))

    @given(words(max_h=5, max_w=4), words(max_h=5, max_w=4))
    def test_concat_counts_add(self, u, v):
        if u.height == v.height:
            assert filled_count(hconcat(u, v)) == filled_count(u) + filled_count(v)
        if u.width == v.width:
            assert filled_count(vconcat(u, v)) == filled_count(u) + filled_count(v)

    @given(words())
    def test_rows_factor_split_rejoin(self, w):
        assert rows_factor(w, 1, w.height) == w
        for k in range(1, w.height):
            top = rows_factor(w, 1, k)
            bottom = rows_factor(w, k + 1, w.height)
            assert vconcat(top, bottom) == w
            assert excess(top) + excess(bottom) == excess(w)

    def test_rows_factor_bad_range(self):
        w = full_word(3, 2)
        with pytest.raises(IndexError):
            rows_factor(w, 2, 1)
        with pytest.raises(IndexError):
            rows_factor(w, 1, 4)


class TestPower:
    def test_identity_power(self):
        w = parse_text("#.\n.#\n")
        assert power(w, 2, 2) == w

    def test_single_cell_power(self):
        assert power(parse_text("#\n"), 3, 3) == full_word(3, 3)

    def test_checkerboard_5x5_has_13_cells(self):
        board = parse_text("#.\n.#\n")
        big = power(board, 5, 5)
        assert filled_count(big) == 13

    def test_truncating_power(self):
        w = parse_text("##.\n...\n")
        assert render_text(power(w, 1, 2)) == "##\n"


class TestExcess:
    def test_all_empty_3x3(self):
        assert excess(empty_word(3, 3)) == Third.from_int(-6)

    def test_ring_w4(self):
        from gridword.construct import BLOCKS

        assert filled_count(BLOCKS["W4"]) == 12
        assert excess(BLOCKS["W4"]) == Third(4)

    def test_unique_2full_5x5(self):
        from gridword import exact_max

        _, witness = exact_max(2, 5, 5)
        assert filled_count(witness) == 18
        assert excess(witness) == Third(4)

    @given(words())
    def test_excess_identity(self, w):
        area = w.height * w.width
        assert excess(w).numerator + 2 * area == 3 * filled_count(w)


class TestThird:
    def test_str(self):
        assert str(Third(4)) == "4/3"
        assert str(Third(-18)) == "-6"
        assert str(Third(6)) == "2"

    def test_arithmetic(self):
        assert Third(1) + Third(2) == Third.from_int(1)
        assert Third(5) - 1 == Third(2)
        assert -Third(2) == Third(-2)
        assert Third(2) * 3 == Third(6)
        assert 2 + Third(1) == Third(7)

    def test_ordering_exact(self):
        assert Third(4) > Third(3) > Third(2)
        assert Third(3) == 1
        assert not Third(4) == 1
        assert Third(4) < 2

    def test_int_conversion(self):
        assert int(Third(6)) == 2
        with pytest.raises(ValueError):
            int(Third(4))


class TestTransforms:
    def test_transpose_involution(self):
        w = parse_text("##.\n..#\n")
        assert transform(transform(w, "transpose"), "transpose") == w

    def test_flip_v_reverses_row_distribution(self):
        w = parse_text("##.\n#..\n###\n")
        assert row_distribution(transform(w, "flip_v")) == tuple(
            reversed(row_distribution(w))
        )

    def test_rotations_compose(self):
        w = parse_text("##.\n..#\n")
        r90 = transform(w, "rot90")
        assert transform(r90, "rot90") == transform(w, "rot180")
        assert transform(transform(r90, "rot90"), "rot90") == transform(w, "rot270")
        assert transform(transform(w, "rot180"), "rot180") == w

    def test_unknown_transform(self):
        with pytest.raises(ValueError):
            transform(full_word(1, 1), "spin")

    @given(words())
    def test_dihedral_invariants(self, w):
        for name in TRANSFORM_NAMES:
            image = transform(w, name)
            assert filled_count(image) == filled_count(w)
            assert max_degree(image) == max_degree(w)
            assert excess(image) == excess(w)
            assert is_snake(image) == is_snake(w)
            assert is_linear_forest(image) == is_linear_forest(w)


class TestRowDistributionAndBoundary:
    def test_sample_row_distribution(self, sample_7x4):
        assert row_distribution(sample_7x4) == (2, 2, 3, 3, 2, 2, 2)

    def test_full_3x2(self):
        assert row_distribution(full_word(3, 2)) == (2, 2, 2)

    @given(words())
    def test_row_distribution_sums(self, w):
        dist = row_distribution(w)
        assert len(dist) == w.height
        assert all(0 <= x <= w.width for x in dist)
        assert sum(dist) == filled_count(w)

    def test_boundary_cells(self):
        assert boundary_cells(full_word(1, 1)) == {(1, 1)}
        assert len(boundary_cells(full_word(3, 3))) == 8
        assert len(boundary_cells(full_word(7, 4))) == 2 * 7 + 2 * 4 - 4


class TestComponents:
    def test_maximal_7x4_is_snake(self):
        from gridword import construct

        comps = induced_components(construct(2, 7, 4))
        assert len(comps) == 1
        assert comps[0].shape == "path"

    def test_3x3_ring_is_cycle(self):
        ring = parse_text("###\n#.#\n###\n")
        comps = induced_components(ring)
        assert len(comps) == 1
        assert comps[0].shape == "cycle"
        assert not is_snake(ring)
        assert not is_linear_forest(ring)

    def test_empty_word_has_no_components(self):
        assert induced_components(empty_word(2, 3)) == []
        assert not is_snake(empty_word(2, 3))
        assert is_linear_forest(empty_word(2, 3))

    def test_singleton_cell(self):
        w = parse_text("#\n")
        assert is_snake(w)
        assert is_linear_forest(w)

    def test_w5_block_snake(self):
        from gridword import construct

        assert is_snake(construct(2, 5, 4))

    def test_other_shape(self):
        t_shape = parse_text("###\n.#.\n.#.\n")
        comps = induced_components(t_shape)
        assert len(comps) == 1
        assert comps[0].shape == "other"

    def test_two_paths(self):
        w = parse_text("#.#\n#.#\n")
        comps = induced_components(w)
        assert [c.shape for c in comps] == ["path", "path"]
        assert not is_snake(w)
        assert is_linear_forest(w)


class TestTextAndJson:
    def test_parse_checkerboard(self):
        w = parse_text("#.\n.#")
        assert filled_count(w) == 2
        assert w.height == 2 and w.width == 2

    @given(words())
    def test_round_trip(self, w):
        assert parse_text(render_text(w)) == w

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            parse_text("")
        with pytest.raises(ParseError) as err:
            parse_text("##\n#\n")
        assert err.value.line == 2
        with pytest.raises(ParseError) as err:
            parse_text("##\n#x\n")
        assert err.value.line == 2 and err.value.col == 2

    def test_json_field_order(self):
        w = parse_text("#.\n..\n")
        assert to_json(w) == '{"h": 2, "w": 2, "rows": ["#.", ".."]}'

    @given(words())
    def test_json_round_trip(self, w):
        assert from_json(to_json(w)) == w
