"""(0,1) matrices used throughout the package.

All public indices are 1-based.  A :class:`BinaryMatrix` is immutable and
hashable, so it can be used as a memo key.  The 0x0 matrix is a valid value
(its permanent is 1 and its rook polynomial is the constant 1).

Text format::

    R C
    0101...   (R lines of exactly C characters from {0,1})
"""

from __future__ import annotations

from dataclasses import dataclass
from os import PathLike
from typing import Iterable, Sequence

import numpy as np


class MatrixParseError(ValueError):
    """Raised when matrix text cannot be parsed; carries a 1-based position."""

    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if (self.rows == 0) != (self.cols == 0):
            raise ValueError("only the 0x0 matrix may have a zero dimension")
        if len(self.cells) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} cells, got {len(self.cells)}"
            )
        if any(c not in (0, 1) for c in self.cells):
            raise ValueError("cells must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "BinaryMatrix":
        """Build from nested rows; accepts lists, tuples or a 2-d numpy array."""
        rows = [tuple(int(v) for v in row) for row in rows]
        if not rows:
            return EMPTY
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, tuple(v for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_ones(cls, rows: int, cols: int, ones: Iterable[tuple[int, int]]) -> "BinaryMatrix":
        """Matrix with 1 at each listed (i, j), 1-based."""
        cells = [0] * (rows * cols)
        for i, j in ones:
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise IndexError(f"cell ({i}, {j}) outside {rows}x{cols}")
            cells[(i - 1) * cols + (j - 1)] = 1
        return cls(rows, cols, tuple(cells))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        self._check_index(i, j)
        return self.cells[(i - 1) * self.cols + (j - 1)]

    def _check_index(self, i: int, j: int) -> None:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"index ({i}, {j}) outside {self.rows}x{self.cols}")

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} outside 1..{self.rows}")
        start = (i - 1) * self.cols
        return self.cells[start:start + self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    def to_array(self) -> np.ndarray:
        return np.array(self.cells, dtype=np.uint8).reshape(self.rows, self.cols)

    def ones(self) -> list[tuple[int, int]]:
        """1-cells as (i, j) pairs in row-major order."""
        c = self.cols
        return [(k // c + 1, k % c + 1) for k, v in enumerate(self.cells) if v]

    @property
    def ones_count(self) -> int:
        return sum(self.cells)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix.from_rows(zip(*self.to_rows())) if self.rows else self

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> "BinaryMatrix":
        """Reorder rows and columns; orders are 1-based index sequences."""
        return BinaryMatrix.from_rows(
            [[self[i, j] for j in col_order] for i in row_order]
        ) if self.rows else self

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.to_rows())


EMPTY = BinaryMatrix(0, 0, ())


def identity(n: int) -> BinaryMatrix:
    return BinaryMatrix.from_ones(n, n, ((i, i) for i in range(1, n + 1)))


def all_ones(rows: int, cols: int | None = None) -> BinaryMatrix:
    cols = rows if cols is None else cols
    return BinaryMatrix(rows, cols, (1,) * (rows * cols))


def _cycle_cells(n: int) -> list[tuple[int, int]]:
    return [(i, i) for i in range(1, n + 1)] + [(i, i % n + 1) for i in range(1, n + 1)]


def menage_matrix(n: int) -> BinaryMatrix:
    """J_n - I - P: man i may not take chair i or chair i+1 (mod n)."""
    if n < 2:
        raise ValueError(f"menage_matrix needs n >= 2, got {n}")
    return complement_in_J(cycle_plus_identity(n))


def cycle_plus_identity(n: int) -> BinaryMatrix:
    """I_n + P, the forbidden positions of the menage board."""
    if n < 2:
        raise ValueError(f"cycle_plus_identity needs n >= 2, got {n}")
    return BinaryMatrix.from_ones(n, n, _cycle_cells(n))


def minor(m: BinaryMatrix, i: int, j: int) -> BinaryMatrix:
    """Delete row i and column j.

    A single row or column leaves no cells, which collapses to the 0x0 matrix.
    """
    m._check_index(i, j)
    if m.rows == 1 or m.cols == 1:
        return EMPTY
    cells = tuple(
        v
        for k, v in enumerate(m.cells)
        if k // m.cols != i - 1 and k % m.cols != j - 1
    )
    return BinaryMatrix(m.rows - 1, m.cols - 1, cells)


def zero_entry(m: BinaryMatrix, i: int, j: int) -> BinaryMatrix:
    """Replace the 1 at (i, j) by 0."""
    if m[i, j] != 1:
        raise ValueError(f"cell ({i}, {j}) is already 0")
    k = (i - 1) * m.cols + (j - 1)
    return BinaryMatrix(m.rows, m.cols, m.cells[:k] + (0,) + m.cells[k + 1:])


def complement_in_J(m: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix(m.rows, m.cols, tuple(1 - v for v in m.cells))


def canonical_staircase(k: int) -> BinaryMatrix:
    """Zig-zag (1,1), (1,2), (2,2), (2,3), ... truncated to k cells."""
    if k < 1:
        raise ValueError(f"staircase needs k >= 1, got {k}")
    cells = [(t // 2 + 1, (t + 1) // 2 + 1) for t in range(k)]
    return BinaryMatrix.from_ones((k + 1) // 2, k // 2 + 1, cells)


def block_diagonal(*blocks: BinaryMatrix) -> BinaryMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    if rows == 0 and cols == 0:
        return EMPTY
    ones = []
    r0 = c0 = 0
    for b in blocks:
        ones.extend((r0 + i, c0 + j) for i, j in b.ones())
        r0 += b.rows
        c0 += b.cols
    return BinaryMatrix.from_ones(rows, cols, ones)


def submatrix(m: BinaryMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> BinaryMatrix:
    if not row_idx or not col_idx:
        return EMPTY
    return BinaryMatrix.from_rows([[m[i, j] for j in col_idx] for i in row_idx])


def disjunct_components(m: BinaryMatrix) -> list[BinaryMatrix]:
    """Split the 1-cells into classes linked by a shared row or column.

    Each class is returned as the submatrix on its occupied rows and
    columns (original order kept); classes are ordered by their first
    1-cell in row-major order.
    """
    ones = m.ones()
    if not ones:
        return []
    # union-find over row nodes 0..R-1 and column nodes R..R+C-1
    parent = list(range(m.rows + m.cols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in ones:
        a, b = find(i - 1), find(m.rows + j - 1)
        if a != b:
            parent[b] = a

    groups: dict[int, tuple[set[int], set[int]]] = {}
    for i, j in ones:
        rows, cols = groups.setdefault(find(i - 1), (set(), set()))
        rows.add(i)
        cols.add(j)
    return [submatrix(m, sorted(r), sorted(c)) for r, c in groups.values()]


def parse_matrix_text(text: str) -> BinaryMatrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MatrixParseError("missing header 'R C'", 1)
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixParseError(f"header must be 'R C', got {lines[0]!r}", 1)
    rows, cols = int(header[0]), int(header[1])
    if (rows == 0) != (cols == 0):
        raise MatrixParseError("only 0 0 may have a zero dimension", 1)
    body = lines[1:]
    if len(body) != rows:
        # point at the first missing line, or the first surplus one
        line = len(lines) + 1 if len(body) < rows else rows + 2
        raise MatrixParseError(f"expected {rows} matrix rows, found {len(body)}", line)
    data = []
    for lineno, line in enumerate(body, start=2):
        for col, ch in enumerate(line, start=1):
            if ch not in "01":
                raise MatrixParseError(f"unexpected character {ch!r}", lineno, col)
        if len(line) != cols:
            raise MatrixParseError(
                f"expected {cols} characters, found {len(line)}", lineno,
                min(len(line), cols) + 1,
            )
        data.append([int(ch) for ch in line])
    return BinaryMatrix.from_rows(data) if rows else EMPTY


def format_matrix_text(m: BinaryMatrix) -> str:
    body = "".join(line + "\n" for line in str(m).split("\n")) if m.rows else ""
    return f"{m.rows} {m.cols}\n{body}"


def read_matrix(path: str | PathLike) -> BinaryMatrix:
    with open(path, encoding="ascii") as fh:
        return parse_matrix_text(fh.read())


def write_matrix(m: BinaryMatrix, path: str | PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_matrix_text(m))
