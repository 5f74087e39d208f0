import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import multiplicity

from app.errors import InfiniteAbelianizationError

from .types import AbelianType

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"matrix entries do not form a {self.rows}x{self.cols} rectangle")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


@dataclass
class DiagonalForm:
    """U*A*V = diag(d_1..d_r, 0...). Only V is kept: cokernel coordinates of a
    row vector v are (v*V)_i mod d_i."""

    diagonal: List[int]
    transform: List[List[int]]
    cols: int

    @property
    def is_finite(self) -> bool:
        return len(self.diagonal) == self.cols and all(d != 0 for d in self.diagonal)

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if not self.is_finite:
            raise InfiniteAbelianizationError()
        image = [sum(vector[k] * self.transform[k][i] for k in range(self.cols)) for i in range(self.cols)]
        return tuple(image[i] % self.diagonal[i] for i in range(self.cols) if self.diagonal[i] != 1)


def smith_form(m: IntMatrix) -> DiagonalForm:
    """Diagonalize by unimodular row and column operations.

    Pivots are the smallest nonzero entry left; rows and columns are cleared by
    floor-division remainders until the pivot row and column vanish. The
    divisibility chain of a true Smith form is not enforced since only the
    cokernel is needed.
    """
    a = m.to_lists()
    rows, cols = m.rows, m.cols
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    diagonal: List[int] = []

    def swap_cols(i: int, j: int):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(target: int, source: int, factor: int):
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    t = 0
    while t < min(rows, cols):
        candidates = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j] != 0]
        if not candidates:
            break
        _, i, j = min(candidates)
        a[t], a[i] = a[i], a[t]
        swap_cols(t, j)
        while True:
            pivot = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                q = a[t][j] // pivot
                if q:
                    add_col(j, t, -q)
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t] != 0]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j] != 0]
            if not rest:
                break
            _, i, j = min(rest)
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        diagonal.append(a[t][t])
        t += 1
    return DiagonalForm(diagonal=diagonal, transform=v, cols=cols)


def smith_invariants(m: IntMatrix, p: int = 3) -> AbelianType:
    """p-part of the cokernel Z^cols / rowspace(m)."""
    form = smith_form(m)
    if not form.is_finite:
        raise InfiniteAbelianizationError(
            f"infinite abelianization: free rank {m.cols - sum(1 for d in form.diagonal if d)}")
    exps = [multiplicity(p, d) for d in form.diagonal if d > 1]
    return AbelianType(tuple(e for e in exps if e), p)
