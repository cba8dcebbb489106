"""Dense exact rational linear algebra.

Every rank, kernel and solve that feeds a cohomology dimension must be
decided exactly, so all entries are arbitrary-precision rationals
(gmpy2.mpq when available, fractions.Fraction otherwise) and no floating
point appears anywhere.  Elimination always picks the leftmost nonzero
pivot, so echelon forms, kernel bases and subspace representatives are
reproducible across runs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - pure-Python fallback
    from fractions import Fraction as _rational

RZERO = _rational(0)
RONE = _rational(1)


def ratio(value=0, den=1):
    """Coerce value (int, str like '2/3', Fraction, mpq) to the scalar type."""
    if den == 1:
        return _rational(value)
    return _rational(value) / _rational(den)


def rational_str(x) -> str:
    """'3', '-1/2', ... (period-free, exact)."""
    return str(x)


class Matrix:
    """Dense matrix over exact rationals; immutable by convention."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        self.data = [[ratio(x) for x in row] for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(row) != self.cols for row in self.data):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[RZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[RONE if i == j else RZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            raise ValueError("need explicit row count for a matrix with no columns")
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(rows)],
                   cols=len(columns))

    def column(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      cols=self.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Matrix([self.data[i] + other.data[i] for i in range(self.rows)],
                      cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self.data + other.data, cols=self.cols)

    def matvec(self, vec: Sequence) -> list:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.data:
            acc = RZERO
            for a, x in zip(row, vec):
                if a and x:
                    acc += a * x
            out.append(acc)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        bt = other.transpose().data
        out = [[sum((a * b for a, b in zip(row, col) if a and b), RZERO) for col in bt]
               for row in self.data]
        return Matrix(out, cols=other.cols)

    def scaled(self, c) -> "Matrix":
        c = ratio(c)
        return Matrix([[c * x for x in row] for row in self.data], cols=self.cols)

    def __neg__(self) -> "Matrix":
        return self.scaled(-1)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def _rref_data(data: list[list], cols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form in place; returns (data, pivot column list)."""
    rows = len(data)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if data[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            data[r], data[pr] = data[pr], data[r]
        inv = RONE / data[r][c]
        data[r] = [x * inv for x in data[r]]
        rowr = data[r]
        for i in range(rows):
            if i != r and data[i][c] != 0:
                f = data[i][c]
                data[i] = [x - f * y for x, y in zip(data[i], rowr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return data, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    data = [row[:] for row in m.data]
    data, pivots = _rref_data(data, m.cols)
    return Matrix(data, cols=m.cols), pivots


def rank(m: Matrix) -> int:
    data = [row[:] for row in m.data]
    return len(_rref_data(data, m.cols)[1])


def det(m: Matrix):
    """Exact determinant by Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return RONE
    data = [row[:] for row in m.data]
    result = RONE
    for c in range(n):
        pr = None
        for i in range(c, n):
            if data[i][c] != 0:
                pr = i
                break
        if pr is None:
            return RZERO
        if pr != c:
            data[c], data[pr] = data[pr], data[c]
            result = -result
        result *= data[c][c]
        inv = RONE / data[c][c]
        for i in range(c + 1, n):
            if data[i][c] != 0:
                f = data[i][c] * inv
                data[i] = [x - f * y for x, y in zip(data[i], data[c])]
    return result


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises ValueError if singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    red, pivots = rref(m.hstack(Matrix.identity(m.rows)))
    if len(pivots) != m.rows or pivots != list(range(m.rows)):
        raise ValueError("singular matrix")
    return Matrix([row[m.cols:] for row in red.data], cols=m.cols)


class Solver:
    """Factorized repeated solves of m x = v for a fixed matrix m.

    Stores the reduced echelon form of m together with the row operations,
    so each solve is a matrix-vector product plus a consistency check.
    Free variables are set to zero, which keeps solutions deterministic.
    """

    def __init__(self, m: Matrix):
        self.m_rows = m.rows
        self.m_cols = m.cols
        aug = [m.data[i][:] + [RONE if j == i else RZERO for j in range(m.rows)]
               for i in range(m.rows)]
        aug, pivots = self._reduce(aug, m.cols)
        self.red = [row[:m.cols] for row in aug]
        self.ops = [row[m.cols:] for row in aug]
        self.pivots = pivots

    @staticmethod
    def _reduce(aug: list[list], cols: int) -> tuple[list[list], list[int]]:
        # Same elimination as _rref_data but pivots restricted to the m-block.
        rows = len(aug)
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if aug[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                aug[r], aug[pr] = aug[pr], aug[r]
            inv = RONE / aug[r][c]
            aug[r] = [x * inv for x in aug[r]]
            rowr = aug[r]
            for i in range(rows):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], rowr)]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return aug, pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, vec: Sequence) -> list | None:
        if len(vec) != self.m_rows:
            raise ValueError("dimension mismatch")
        w = []
        for ops_row in self.ops:
            acc = RZERO
            for a, x in zip(ops_row, vec):
                if a and x:
                    acc += a * x
            w.append(acc)
        x = [RZERO] * self.m_cols
        npiv = len(self.pivots)
        for r, c in enumerate(self.pivots):
            x[c] = w[r]
        for r in range(npiv, self.m_rows):
            if w[r] != 0:
                return None
        return x


def solve(m: Matrix, vec: Sequence) -> list | None:
    """Any exact solution of m x = vec, or None if vec is not in the image."""
    return Solver(m).solve(vec)


def kernel_basis(m: Matrix) -> "Subspace":
    """Canonical kernel basis from the reduced echelon form."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [RZERO] * m.cols
        v[fc] = RONE
        for r, pc in enumerate(pivots):
            v[pc] = -red.data[r][fc]
        basis.append(v)
    return Subspace.from_columns(m.cols, basis)


def image_basis(m: Matrix) -> "Subspace":
    """Canonical basis of the column space (row-reduce the transpose)."""
    return Subspace.from_columns(m.rows, m.columns())


def extend_to_standard_basis(m: Matrix) -> list[int]:
    """Indices of standard basis vectors completing col(m) to the full space.

    Greedy left-to-right pivots of [m | I]; deterministic.
    """
    aug = m.hstack(Matrix.identity(m.rows))
    _, pivots = rref(aug)
    return [c - m.cols for c in pivots if c >= m.cols]


class Subspace:
    """A subspace of Q^n stored as a canonical (reduced-echelon) column basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix, _canonical: bool = False):
        if basis.rows != ambient_dim:
            raise ValueError("basis rows must equal the ambient dimension")
        if not _canonical:
            basis = _canonical_basis(ambient_dim, basis.columns())
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_columns(cls, ambient_dim: int, columns: Iterable[Sequence]) -> "Subspace":
        return cls(ambient_dim, _canonical_basis(ambient_dim, list(columns)), _canonical=True)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls.from_columns(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_columns(ambient_dim, Matrix.identity(ambient_dim).columns())

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, vec: Sequence) -> bool:
        if all(x == 0 for x in vec):
            return True
        if self.dim == 0:
            return False
        return solve(self.basis, [ratio(x) for x in vec]) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(c) for c in other.basis.columns())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_columns(self.ambient_dim,
                                     self.basis.columns() + other.basis.columns())

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        joint = self.basis.hstack(-other.basis)
        ker = kernel_basis(joint)
        cols = []
        for z in ker.basis.columns():
            cols.append(self.basis.matvec(z[: self.dim]))
        return Subspace.from_columns(self.ambient_dim, cols)

    def quotient_dim(self, sub: "Subspace") -> int:
        self._check(sub)
        if not self.contains_subspace(sub):
            raise ValueError("quotient by a non-subspace")
        return self.dim - sub.dim

    def image_under(self, m: Matrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return Subspace.from_columns(m.rows, [m.matvec(c) for c in self.basis.columns()])

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _canonical_basis(ambient_dim: int, columns: list[Sequence]) -> Matrix:
    if not columns:
        return Matrix.zeros(ambient_dim, 0)
    data = [[ratio(x) for x in col] for col in columns]
    data, pivots = _rref_data(data, ambient_dim)
    rows = [data[r] for r in range(len(pivots))]
    return Matrix.from_columns(rows, rows=ambient_dim)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    return a.intersection(b)


def quotient_dim(a: Subspace, b: Subspace) -> int:
    return a.quotient_dim(b)


def contains(a: Subspace, vec: Sequence) -> bool:
    return a.contains(vec)
