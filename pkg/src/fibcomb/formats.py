"""Table rendering and parsing: plain text, CSV, and OEIS-style b-files.

Output is deterministic and byte-stable: rows are emitted in row-major order
with k ascending, and every rendered file ends with a newline.  The parsers
invert the renderers exactly, so emitted files round-trip.
"""

from __future__ import annotations

from collections.abc import Sequence

from .compositions import TriangleRow

FORMATS = ("plain", "csv", "bfile")

TRIANGLE_CSV_HEADER = "n,k,value"


def render_triangle(rows: Sequence[TriangleRow], fmt: str = "plain", offset: int = 0) -> str:
    """Render triangle rows in the requested format."""
    if fmt == "plain":
        return "".join(" ".join(str(v) for v in row.values) + "\n" for row in rows)
    if fmt == "csv":
        lines = [TRIANGLE_CSV_HEADER]
        for row in rows:
            lines.extend(f"{row.n},{k},{v}" for k, v in enumerate(row.values))
        return "\n".join(lines) + "\n"
    if fmt == "bfile":
        flat = (v for row in rows for v in row.values)
        return "".join(f"{idx} {v}\n" for idx, v in enumerate(flat, start=offset))
    raise ValueError(f"unknown format {fmt!r}; choose one of {FORMATS}")


def render_grid(grid: Sequence[Sequence[int]], fmt: str = "plain", offset: int = 0) -> str:
    """Render a rectangular table of ints; CSV here is bare rows, no header."""
    if fmt == "plain":
        return "".join(" ".join(str(v) for v in row) + "\n" for row in grid)
    if fmt == "csv":
        return "".join(",".join(str(v) for v in row) + "\n" for row in grid)
    if fmt == "bfile":
        flat = (v for row in grid for v in row)
        return "".join(f"{idx} {v}\n" for idx, v in enumerate(flat, start=offset))
    raise ValueError(f"unknown format {fmt!r}; choose one of {FORMATS}")


def parse_triangle_csv(text: str) -> list[list[int]]:
    """Invert the triangle CSV renderer; returns each row's values in k order."""
    lines = [line for line in text.splitlines() if line]
    if not lines or lines[0] != TRIANGLE_CSV_HEADER:
        raise ValueError(f"expected header {TRIANGLE_CSV_HEADER!r}")
    rows: list[list[int]] = []
    for line in lines[1:]:
        n, k, v = (int(field) for field in line.split(","))
        if k == 0:
            if n != len(rows):
                raise ValueError(f"row {n} out of order at line {line!r}")
            rows.append([])
        if n != len(rows) - 1 or k != len(rows[-1]):
            raise ValueError(f"entry ({n}, {k}) out of order at line {line!r}")
        rows[-1].append(v)
    return rows


def parse_grid_csv(text: str) -> list[list[int]]:
    """Invert the headerless grid CSV renderer."""
    return [
        [int(field) for field in line.split(",")]
        for line in text.splitlines()
        if line
    ]


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse 'index value' lines; indices must be consecutive."""
    pairs: list[tuple[int, int]] = []
    for line in text.splitlines():
        if not line:
            continue
        idx_str, value_str = line.split()
        pairs.append((int(idx_str), int(value_str)))
    for pos, (idx, _) in enumerate(pairs):
        if idx != pairs[0][0] + pos:
            raise ValueError(f"non-consecutive index {idx} at position {pos}")
    return pairs
