import itertools

import pytest

from origami_mv.crease_model import VertexStar
from origami_mv.example_data import sample_vertex_angles
from origami_mv.local_rules import (
    Degree4Variant,
    blb_pairs,
    classify_degree4,
    degree4_forced_same,
    format_mv_tuple,
    layer_oracle,
    maekawa_ok,
    maekawa_tuples,
    oracle_valid_assignments,
    sole_minority,
    vertex_valid_assignments,
)
from origami_mv.utils import UnsupportedVertexError, VertexClassificationError


def star(*angles):
    return VertexStar.from_angles(angles)


def flat_degree4_grid():
    """Every (a, b, 180 - a, 180 - b) on a 5 degree grid."""
    return [(a, b, 180 - a, 180 - b) for a in range(5, 180, 5) for b in range(5, 180, 5)]


def test_maekawa():
    assert maekawa_ok((1, 1, 1, -1))
    assert maekawa_ok((-1, -1, -1, 1))
    assert not maekawa_ok((1, 1, -1, -1))
    assert not maekawa_ok((1, 1, 1, 1))
    assert len(maekawa_tuples(4)) == 8


def test_sole_minority():
    assert sole_minority((1, 1, -1, 1)) == 2
    assert sole_minority((-1, 1, -1, -1)) == 1
    assert sole_minority((1, -1, 1, -1)) is None


def test_square_twist_vertex():
    s = star(*sample_vertex_angles["square twist vertex"])
    assert str(classify_degree4(s)) == "UniqueMin(0)"
    assert blb_pairs(s) == frozenset({(0, 1)})
    assert degree4_forced_same(s) == frozenset({(2, 3)})
    assert sorted(format_mv_tuple(t) for t in vertex_valid_assignments(s)) == [
        "MVMM", "MVVV", "VMMM", "VMVV"]


def test_miura_vertex_excludes_e4_as_sole_minority():
    s = star(*sample_vertex_angles["Miura vertex"])
    vertex_class = classify_degree4(s)
    assert vertex_class.variant == Degree4Variant.DOUBLE_MIN
    # Crease 3 sits between the two obtuse angles
    assert vertex_class.index == 3
    valid = vertex_valid_assignments(s)
    assert len(valid) == 6
    excluded = set(maekawa_tuples(4)) - valid
    assert excluded == {(-1, -1, -1, 1), (1, 1, 1, -1)}
    assert blb_pairs(s) == frozenset()
    assert degree4_forced_same(s) == frozenset()


@pytest.mark.parametrize("angles, index", [
    ((60, 60, 120, 120), 3),
    ((120, 60, 60, 120), 0),
    ((120, 120, 60, 60), 1),
    ((60, 120, 120, 60), 2),
])
def test_double_min_e4_position(angles, index):
    assert classify_degree4(star(*angles)).index == index


def test_all_equal_vertex():
    s = star(*sample_vertex_angles["grid vertex"])
    assert str(classify_degree4(s)) == "AllEqual"
    assert vertex_valid_assignments(s) == frozenset(maekawa_tuples(4))


def test_classification_rejects_non_flat_angles():
    with pytest.raises(VertexClassificationError, match="alternating"):
        classify_degree4(star(120, 60, 90, 90))


def test_degree_other_than_four_is_unsupported():
    with pytest.raises(UnsupportedVertexError):
        classify_degree4(star(60, 60, 60, 60, 60, 60))
    with pytest.raises(UnsupportedVertexError):
        layer_oracle(star(120, 120, 120), (1, 1, -1))


def test_blb_on_higher_degree():
    s = star(50, 20, 90, 60, 30, 110)
    assert blb_pairs(s) == frozenset({(1, 2), (4, 5)})


def test_layer_oracle_rejects_non_maekawa():
    s = star(90, 90, 90, 90)
    for values in itertools.product((-1, 1), repeat=4):
        if not maekawa_ok(values):
            assert not layer_oracle(s, values)


def test_layer_oracle_rejects_bad_input():
    with pytest.raises(ValueError):
        layer_oracle(star(90, 90, 90, 90), (1, 1, 0, 1))


@pytest.mark.parametrize("angles", flat_degree4_grid())
def test_oracle_agrees_with_classification(angles):
    s = star(*angles)
    vertex_class = classify_degree4(s)
    valid = vertex_valid_assignments(s)
    expected = {
        Degree4Variant.UNIQUE_MIN: 4,
        Degree4Variant.DOUBLE_MIN: 6,
        Degree4Variant.ALL_EQUAL: 8,
    }[vertex_class.variant]
    assert len(valid) == expected
    assert oracle_valid_assignments(s) == valid


def test_rotation_moves_the_class_index():
    base = (45, 90, 135, 90)
    for shift in range(4):
        rotated = base[shift:] + base[:shift]
        assert classify_degree4(star(*rotated)).index == (0 - shift) % 4


@pytest.mark.parametrize("angles", flat_degree4_grid())
def test_valid_sets_are_closed_under_negation(angles):
    s = star(*angles)
    for valid in (vertex_valid_assignments(s), oracle_valid_assignments(s)):
        assert {tuple(-v for v in t) for t in valid} == valid


@pytest.mark.parametrize("angles", flat_degree4_grid())
def test_forced_pairs_do_not_overlap(angles):
    s = star(*angles)
    assert not blb_pairs(s) & degree4_forced_same(s)
