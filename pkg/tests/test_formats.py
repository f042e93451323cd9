import pytest

from fibcomb.compositions import triangle
from fibcomb.convolved import convolved_table
from fibcomb.formats import (
    parse_bfile,
    parse_grid_csv,
    parse_triangle_csv,
    render_grid,
    render_triangle,
)


def test_triangle_plain():
    text = render_triangle(triangle(4), "plain")
    assert text == "1\n0 1\n1 0 1\n1 2 0 1\n2 2 3 0 1\n"


def test_triangle_csv_exact():
    text = render_triangle(triangle(2), "csv")
    assert text == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,1\n2,1,0\n2,2,1\n"


def test_triangle_csv_round_trip():
    rows = triangle(7)
    parsed = parse_triangle_csv(render_triangle(rows, "csv"))
    assert parsed == [list(row.values) for row in rows]


def test_triangle_bfile_shape():
    text = render_triangle(triangle(4), "bfile")
    lines = text.splitlines()
    assert len(lines) == 15
    assert lines[0] == "0 1"
    assert lines[-1] == "14 1"
    assert text.endswith("\n")


def test_triangle_bfile_round_trip_with_offset():
    rows = triangle(5)
    pairs = parse_bfile(render_triangle(rows, "bfile", offset=10))
    assert pairs[0][0] == 10
    flat = [v for row in rows for v in row.values]
    assert [v for _, v in pairs] == flat


def test_grid_csv_has_one_line_per_row():
    grid = convolved_table(4, 10)
    text = render_grid(grid, "csv")
    assert len(text.splitlines()) == 4
    assert parse_grid_csv(text) == grid


def test_grid_plain_and_bfile():
    grid = [[1, 2], [3, 4]]
    assert render_grid(grid, "plain") == "1 2\n3 4\n"
    assert render_grid(grid, "bfile") == "0 1\n1 2\n2 3\n3 4\n"


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        render_triangle(triangle(2), "xml")
    with pytest.raises(ValueError):
        render_grid([[1]], "xml")


def test_triangle_csv_parser_validates():
    with pytest.raises(ValueError):
        parse_triangle_csv("0,0,1\n")  # missing header
    with pytest.raises(ValueError):
        parse_triangle_csv("n,k,value\n1,1,0\n")  # row must start at k = 0


def test_bfile_parser_requires_consecutive_indices():
    assert parse_bfile("0 5\n1 7\n") == [(0, 5), (1, 7)]
    with pytest.raises(ValueError):
        parse_bfile("0 5\n2 7\n")
