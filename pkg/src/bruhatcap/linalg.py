"""Small exact linear-algebra kernel over fractions.Fraction.

Everything here is dense, rational and tiny (dimensions <= 9); no floating
point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConsistencyError

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values: Iterable) -> Vector:
    """Coerce an iterable of rational-like values to an exact vector."""
    return tuple(Fraction(v) for v in values)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), ZERO)


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def is_zero(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


def solve_columns(columns: Sequence[Vector], target: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Solve sum_j c_j * columns[j] == target exactly.

    The columns must be linearly independent; the system may be
    overdetermined but must be consistent, otherwise ConsistencyError.
    """
    m = len(target)
    n = len(columns)
    rows = [[col[i] for col in columns] + [Fraction(target[i])] for i in range(m)]
    piv_rows: list[int] = []
    piv_cols: list[int] = []
    piv = 0
    for col in range(n):
        pivot = next((i for i in range(piv, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[piv], rows[pivot] = rows[pivot], rows[piv]
        prow = rows[piv]
        inv = ONE / prow[col]
        rows[piv] = prow = [a * inv for a in prow]
        for i in range(m):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        piv_rows.append(piv)
        piv_cols.append(col)
        piv += 1
    if len(piv_cols) != n:
        raise ConsistencyError("solve_columns: columns are linearly dependent")
    for i in range(piv, m):
        if rows[i][n] != 0:
            raise ConsistencyError("solve_columns: inconsistent system")
    sol = [ZERO] * n
    for r, c in zip(piv_rows, piv_cols):
        sol[c] = rows[r][n]
    return tuple(sol)


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by row echelon reduction."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        prow = rows[rk]
        for i in range(rk + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / prow[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return [[sum((a[i][t] * b[t][j] for t in range(k)), ZERO) for j in range(m)] for i in range(n)]


def mat_vec(a: Matrix, x: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, x) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def reflection_matrix(alpha: Vector) -> Matrix:
    """Matrix of the orthogonal reflection fixing the hyperplane normal to alpha."""
    nn = dot(alpha, alpha)
    if nn == 0:
        raise ValueError("cannot reflect in the zero vector")
    n = len(alpha)
    return [
        [(ONE if i == j else ZERO) - 2 * alpha[i] * alpha[j] / nn for j in range(n)]
        for i in range(n)
    ]
