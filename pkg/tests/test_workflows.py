import pytest

from origami_mv.enumeration import count_mv, enumerate_mv
from origami_mv.example_data import single_vertex_pattern
from origami_mv.generators import gen_miura, gen_square_twist
from origami_mv.workflows import CrossValidation, ParallelEnumeration


@pytest.fixture(scope="module")
def parallel():
    return ParallelEnumeration()


@pytest.fixture(scope="module")
def cross_validation():
    return CrossValidation()


@pytest.mark.parametrize("split_bits", [0, 1, 3, 5])
def test_split_count_is_stable(parallel, split_bits):
    pattern = gen_miura(3, 3).base
    result = parallel.run(pattern, split_bits=split_bits)
    assert result.count == count_mv(pattern) == 82
    assert result.assignments is None
    assert result.crease_order == pattern.crease_ids


@pytest.mark.parametrize("split_bits", [0, 2, 4])
def test_split_stream_is_stable(parallel, split_bits):
    pattern = gen_square_twist(1, 1).base
    result = parallel.run(pattern, split_bits=split_bits, materialize=True)
    assert result.assignments == list(enumerate_mv(pattern))
    assert result.count == 16


def test_split_bits_beyond_crease_count(parallel, miura_2x2):
    result = parallel.run(miura_2x2.base, split_bits=10, materialize=True)
    assert result.count == 6
    assert [mv.sort_key() for mv in result.assignments] == sorted(
        mv.sort_key() for mv in result.assignments)


def test_negative_split_bits(parallel, miura_2x2):
    with pytest.raises(ValueError):
        parallel.run(miura_2x2.base, split_bits=-1)


def test_orchestrator_prefixes(parallel, miura_2x2):
    state = {"pattern": miura_2x2.base, "split_bits": 2}
    assert parallel.orchestrator(state)["prefixes"] == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_cross_validation_square_twist(cross_validation):
    report = cross_validation.run(gen_square_twist(1, 1).base)
    assert report.validation_passed
    assert report.two_colorable
    assert report.components == 4
    assert report.line_graph_count == report.enumeration_count == 16
    assert report.determined is True
    assert report.notes == []


def test_cross_validation_miura(cross_validation, miura_2x2):
    report = cross_validation.run(miura_2x2.base)
    assert report.line_graph_count == 16
    assert report.enumeration_count == 6
    assert report.determined is False
    assert report.notes == ["vertices without a Big-Little-Big pair: [2]"]
    assert report.to_text() == (
        "creases=4\n"
        "interior_vertices=1\n"
        "validation_passed=true\n"
        "two_colorable=true\n"
        "components=4\n"
        "line_graph_count=16\n"
        "enumeration_count=6\n"
        "determined=false\n"
        "note=vertices without a Big-Little-Big pair: [2]\n"
    )


def test_cross_validation_skips_large_enumeration(cross_validation):
    report = cross_validation.run(gen_square_twist(2, 2).base)
    assert report.line_graph_count == 2 ** 12
    assert report.enumeration_count is None
    assert report.determined is None
    assert report.notes == ["enumeration skipped: 40 creases exceed 30"]


def test_cross_validation_unsupported_degree(cross_validation):
    report = cross_validation.run(single_vertex_pattern([120, 120, 120]))
    assert not report.validation_passed
    assert report.line_graph_count is None
    assert report.enumeration_count is None
    assert len(report.notes) == 3
    assert "n/a" in report.to_text()
