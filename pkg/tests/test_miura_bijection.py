import pytest

from origami_mv.coloring_count import count_colorings_brute, count_colorings_transfer, iter_proper_colorings
from origami_mv.crease_model import MVAssignment
from origami_mv.enumeration import count_mv, enumerate_mv, valid_at_every_vertex
from origami_mv.example_data import sample_miura_coloring
from origami_mv.generators import gen_miura
from origami_mv.miura_bijection import (
    GridColoring,
    coloring_to_mv,
    count_miura_mv,
    crease_sign,
    format_digit_grid,
    is_proper,
    mv_to_coloring,
    parse_digit_grid,
    zigzag_order,
)
from origami_mv.utils import ColoringError, PatternError


def test_zigzag_order():
    order = zigzag_order(3, 2)
    assert order.path == [(0, 0), (0, 1), (1, 1), (1, 0), (2, 0), (2, 1)]
    assert order.off_path == [((0, 0), (1, 0)), ((1, 1), (2, 1))]
    assert len(order.path_edges) == 5
    with pytest.raises(ColoringError):
        zigzag_order(0, 3)


def test_crease_signs():
    assert crease_sign(((0, 0), (0, 1))) == 1
    assert crease_sign(((1, 0), (1, 1))) == -1
    assert crease_sign(((2, 3), (2, 4))) == 1
    assert crease_sign(((1, 2), (2, 2))) == 1


def test_known_pair(miura_2x2):
    mv = MVAssignment.from_values([0, 1, 2, 3], (-1, -1, -1, 1))
    coloring = mv_to_coloring(miura_2x2, mv)
    assert format_digit_grid(coloring) == "02\n21\n"
    assert coloring_to_mv(2, 2, coloring, miura_2x2) == mv


def test_sample_coloring(miura_2x2):
    mv = coloring_to_mv(2, 2, parse_digit_grid(sample_miura_coloring))
    assert mv.values_for([0, 1, 2, 3]) == (1, 1, 1, -1)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 5))
def test_bijection_on_small_grids(m, n):
    mp = gen_miura(m, n)
    assignments = list(enumerate_mv(mp.base))
    colorings = list(iter_proper_colorings(m, n))

    assert len(assignments) == len(colorings)
    assert count_mv(mp.base) == count_colorings_brute(m, n) == count_colorings_transfer(m, n)

    images = set()
    for mv in assignments:
        coloring = mv_to_coloring(mp, mv)
        assert is_proper(coloring)
        assert coloring_to_mv(m, n, coloring, mp) == mv
        images.add(coloring.colors)
    assert len(images) == len(colorings)

    for coloring in colorings:
        mv = coloring_to_mv(m, n, coloring, mp)
        assert valid_at_every_vertex(mp.base, mv)
        assert mv_to_coloring(mp, mv) == coloring


def test_invalid_assignment_is_rejected(miura_2x2):
    with pytest.raises(PatternError):
        mv_to_coloring(miura_2x2, MVAssignment.from_values([0, 1, 2, 3], (1, -1, 1, 1)))


def test_improper_coloring_is_rejected():
    improper = GridColoring(m=2, n=2, colors=((0, 0), (1, 2)))
    with pytest.raises(ColoringError, match="not proper"):
        coloring_to_mv(2, 2, improper)
    shifted = GridColoring(m=2, n=2, colors=((1, 2), (2, 0)))
    with pytest.raises(ColoringError):
        coloring_to_mv(2, 2, shifted)
    with pytest.raises(ColoringError, match="expected 3x2"):
        coloring_to_mv(3, 2, parse_digit_grid(sample_miura_coloring))


def test_shifted_coloring():
    coloring = parse_digit_grid("01\n12\n")
    assert format_digit_grid(coloring.shifted(1)) == "12\n20\n"


@pytest.mark.parametrize("text, fragment", [
    ("", "empty"),
    ("01\n1a\n", "line 2"),
    ("012\n10\n", "line 2: expected 3 digits"),
])
def test_parse_digit_grid_errors(text, fragment):
    with pytest.raises(ColoringError, match=fragment):
        parse_digit_grid(text)


def test_parse_digit_grid_skips_blank_lines():
    coloring = parse_digit_grid("\n010\n\n101\n")
    assert (coloring.m, coloring.n) == (2, 3)
    assert coloring[(1, 2)] == 1


@pytest.mark.parametrize("method", ["transfer", "brute", "enumerate"])
def test_count_miura_mv(method):
    assert count_miura_mv(2, 2, method) == 6
    assert count_miura_mv(3, 3, method) == 82


def test_count_miura_mv_unknown_method():
    with pytest.raises(ValueError):
        count_miura_mv(2, 2, "guess")
