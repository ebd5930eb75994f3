"""Linear extensions of the descending product order on a rectangular grid.

Cell (i, j) of the d_mu x d_lam grid carries the product mu_i * lam_j of
descending tuples, so products weakly decrease along rows and columns and
the sorted positions form a standard Young tableau of rectangular shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class TableauPair:
    """Rank labelings (1-based) of the input and output grids."""

    t_in: tuple[tuple[int, ...], ...]
    t_out: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for t in (self.t_in, self.t_out):
            if not _is_linear_extension(t):
                raise ValueError(f"not a linear extension: {t}")

    def to_json(self) -> dict:
        return {"t_in": [list(r) for r in self.t_in], "t_out": [list(r) for r in self.t_out]}


def _is_linear_extension(t) -> bool:
    rows = len(t)
    cols = len(t[0]) if rows else 0
    seen = sorted(v for row in t for v in row)
    if seen != list(range(1, rows * cols + 1)):
        return False
    for i in range(rows):
        for j in range(cols):
            if i + 1 < rows and t[i + 1][j] < t[i][j]:
                return False
            if j + 1 < cols and t[i][j + 1] < t[i][j]:
                return False
    return True


def hook_content_count(rows: int, cols: int) -> int:
    """Number of standard Young tableaux of the rows x cols rectangle.

    (rows*cols)! / prod_{i,j} (i + j - 1), the hook length formula for a
    rectangle.
    """
    denom = 1
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            denom *= i + j - 1
    return factorial(rows * cols) // denom


def linear_extensions(rows: int, cols: int):
    """Yield every rank labeling as a sequence of cells, rank r at index r-1."""
    fill = [0] * rows
    seq: list[tuple[int, int]] = []
    total = rows * cols

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for i in range(rows):
            c = fill[i]
            if c < cols and (i == 0 or fill[i - 1] > c):
                fill[i] += 1
                seq.append((i, c))
                yield from rec()
                seq.pop()
                fill[i] -= 1

    yield from rec()


def cells_to_matrix(cells, rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    mat = [[0] * cols for _ in range(rows)]
    for rank, (i, j) in enumerate(cells, start=1):
        mat[i][j] = rank
    return tuple(tuple(r) for r in mat)
