import logging

import pytest

from origami_mv.coloring_count import (
    build_transfer_matrix,
    column_states,
    count_colorings_brute,
    count_colorings_matrix,
    count_colorings_transfer,
    iter_proper_colorings,
    lieb_frame,
    lieb_table,
    lieb_tsv,
    per_vertex_estimate,
    plot_lieb,
)
from origami_mv.utils import LIEB_CONSTANT, SizeLimitError


@pytest.mark.parametrize("m, n, count", [
    (1, 1, 1),
    (1, 4, 8),
    (2, 2, 6),
    (2, 3, 18),
    (3, 3, 82),
])
def test_known_counts(m, n, count):
    assert count_colorings_brute(m, n) == count
    assert count_colorings_transfer(m, n) == count
    assert count_colorings_matrix(m, n) == count


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 6))
def test_transfer_matches_brute_force(m, n):
    assert count_colorings_transfer(m, n) == count_colorings_brute(m, n)


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_transfer_is_symmetric(m, n):
    assert count_colorings_transfer(m, n) == count_colorings_transfer(n, m)


def test_ladder_closed_form():
    # Two rows: each new column has three choices once the first is fixed
    for n in range(1, 10):
        assert count_colorings_transfer(2, n) == 2 * 3 ** (n - 1)


def test_iterated_colorings_are_proper_and_ordered():
    colorings = list(iter_proper_colorings(2, 3))
    assert len(colorings) == 18
    assert all(c[(0, 0)] == 0 for c in colorings)
    keys = [c.colors for c in colorings]
    assert keys == sorted(keys)


def test_column_states():
    assert column_states(1) == [(0,), (1,), (2,)]
    assert len(column_states(5)) == 3 * 2 ** 4


def test_transfer_matrix():
    transfer = build_transfer_matrix(2)
    assert transfer.states == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    assert all(sum(row) == 3 for row in transfer.matrix)
    assert all(transfer.matrix[i][j] == transfer.matrix[j][i]
               for i in range(6) for j in range(6))


def test_size_limits():
    with pytest.raises(SizeLimitError):
        count_colorings_brute(5, 5)
    with pytest.raises(SizeLimitError):
        build_transfer_matrix(9)
    with pytest.raises(SizeLimitError):
        count_colorings_transfer(21, 2)
    with pytest.raises(SizeLimitError):
        lieb_table(21)
    with pytest.raises(ValueError):
        count_colorings_transfer(0, 3)


def test_large_counts_stay_exact():
    count = count_colorings_transfer(12, 12)
    assert count > 2 ** 64
    assert count % 2 == 0


def test_lieb_trend():
    rows = lieb_table(12)
    assert [row.n for row in rows] == list(range(1, 13))
    assert rows[1].f == pytest.approx(6 ** 0.25)
    gaps = [abs(rows[i + 1].f - rows[i].f) for i in range(2, 11)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
    assert abs(rows[11].f - LIEB_CONSTANT) < abs(rows[2].f - LIEB_CONSTANT)


def test_per_vertex_estimate_handles_huge_counts():
    assert per_vertex_estimate(3 ** 400, 20) == pytest.approx(3 ** (400 / 400))


def test_lieb_tsv():
    assert lieb_tsv(lieb_table(2)) == (
        "n\tcount\tf\tW\n"
        "1\t1\t1.000000\t1.539601\n"
        "2\t6\t1.565085\t1.539601\n"
    )
    frame = lieb_frame(lieb_table(3))
    assert list(frame.columns) == ["n", "count", "f", "W"]
    assert frame["count"].tolist() == [1, 6, 82]


def test_plot_lieb(tmp_path):
    target = tmp_path / "lieb.png"
    plot_lieb(lieb_table(4), str(target))
    assert target.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


@pytest.mark.parametrize("m", range(1, 7))
def test_transfer_ends_on_every_proper_column(m, caplog):
    with caplog.at_level(logging.DEBUG, logger="origami_mv"):
        count_colorings_transfer(m, 3)
    assert f"transfer count {m}x3: {3 * 2 ** (m - 1)} final states" in caplog.text
