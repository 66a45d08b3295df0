"""Exact scalar arithmetic and small dense linear algebra.

Two scalar fields are supported: arbitrary-precision rationals
(``fractions.Fraction``) and prime fields F_p (``FpScalar``).  One generic
Gaussian-elimination kernel, parameterized by the field, provides rank,
null-space bases, and linear solving for both.  Floating point is never
used anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class DimensionMismatch(ValueError):
    """A vector or matrix operand has incompatible dimensions."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FpScalar:
    """An element of the prime field F_p, stored as an integer in [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        if self.p < 3:
            raise ValueError(f"prime-field modulus must be >= 3, got {self.p}")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: FpScalar | int) -> FpScalar:
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpScalar(other, self.p)
        return NotImplemented

    def __add__(self, other: FpScalar | int) -> FpScalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other: FpScalar | int) -> FpScalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.value - other.value, self.p)

    def __rsub__(self, other: FpScalar | int) -> FpScalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(other.value - self.value, self.p)

    def __mul__(self, other: FpScalar | int) -> FpScalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: FpScalar | int) -> FpScalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: FpScalar | int) -> FpScalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> FpScalar:
        return FpScalar(-self.value, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def inverse(self) -> FpScalar:
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return FpScalar(pow(self.value, self.p - 2, self.p), self.p)

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


@dataclass(frozen=True)
class RationalField:
    """The field of rationals, as a scalar-field descriptor."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, x: int | Fraction) -> Fraction:
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError(f"not an exact rational: {x!r}")
        return Fraction(x)

    def __repr__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p, as a scalar-field descriptor (p prime, >= 3)."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or not _is_prime(self.p):
            raise ValueError(f"modulus must be a prime >= 3, got {self.p}")

    @property
    def zero(self) -> FpScalar:
        return FpScalar(0, self.p)

    @property
    def one(self) -> FpScalar:
        return FpScalar(1, self.p)

    def of(self, x: int | Fraction | FpScalar) -> FpScalar:
        if isinstance(x, FpScalar):
            if x.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {x.p}")
            return x
        if isinstance(x, bool):
            raise TypeError(f"not an exact scalar: {x!r}")
        if isinstance(x, int):
            return FpScalar(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"denominator {x.denominator} not invertible mod {self.p}"
                )
            inv_den = pow(x.denominator, -1, self.p)
            return FpScalar(x.numerator * inv_den, self.p)
        raise TypeError(f"not an exact scalar: {x!r}")

    def __repr__(self) -> str:
        return f"F_{self.p}"


QQ = RationalField()

Scalar = Union[Fraction, FpScalar]
Field = Union[RationalField, PrimeField]
Vector = tuple  # tuple[Scalar, ...]


@dataclass(frozen=True)
class DenseMatrix:
    """An immutable dense matrix with exact entries over a fixed field."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples
    field: Field

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionMismatch("matrix dimensions must be positive")
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise DimensionMismatch("entry grid does not match declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ) -> DenseMatrix:
        coerced = tuple(tuple(field.of(x) for x in row) for row in rows)
        return cls(len(coerced), len(coerced[0]), coerced, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> DenseMatrix:
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], field
        )

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> DenseMatrix:
        return cls.from_rows([[0] * cols for _ in range(rows)], field)

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(
            self.cols,
            self.rows,
            tuple(self.column(j) for j in range(self.cols)),
            self.field,
        )

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return DenseMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            self.field,
        )

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        return self + (-other)

    def __neg__(self) -> DenseMatrix:
        return self.scale(-self.field.one)

    def scale(self, s) -> DenseMatrix:
        s = self.field.of(s)
        return DenseMatrix(
            self.rows,
            self.cols,
            tuple(tuple(s * x for x in row) for row in self.entries),
            self.field,
        )

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            row_i = self.entries[i]
            out_row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = row_i[k]
                    if a:
                        acc = acc + a * other.entries[k][j]
                out_row.append(acc)
            out.append(tuple(out_row))
        return DenseMatrix(self.rows, other.cols, tuple(out), self.field)

    def mul_vec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch("matrix-vector shape mismatch")
        vv = [self.field.of(x) for x in v]
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            acc = zero
            row_i = self.entries[i]
            for k, x in enumerate(vv):
                if x:
                    acc = acc + row_i[k] * x
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> DenseMatrix:
        if self.rows != self.cols:
            raise DimensionMismatch("matrix power requires a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = DenseMatrix.identity(self.rows, self.field)
        for _ in range(k):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)


def _echelon(rows: list, ncols: int) -> tuple[list, list[int]]:
    """Reduce `rows` (a list of scalar lists) to reduced row-echelon form.

    Returns the reduced rows and the list of pivot columns.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: DenseMatrix) -> int:
    """Rank of `m` over its scalar field, by exact Gaussian elimination."""
    work = [list(row) for row in m.entries]
    _, pivots = _echelon(work, m.cols)
    return len(pivots)


def kernel_basis(m: DenseMatrix) -> tuple[Vector, ...]:
    """An exact basis of the right null space of `m`.

    Returns ``cols - rank(m)`` vectors v with ``m.mul_vec(v) = 0``.
    """
    work = [list(row) for row in m.entries]
    reduced, pivots = _echelon(work, m.cols)
    free_cols = [c for c in range(m.cols) if c not in pivots]
    zero, one = m.field.zero, m.field.one
    basis = []
    for fc in free_cols:
        v = [zero] * m.cols
        v[fc] = one
        for r_i, pc in enumerate(pivots):
            v[pc] = -reduced[r_i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def solve_linear(m: DenseMatrix, b: Sequence) -> Vector | None:
    """One exact solution of ``m x = b``, or None if the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch(
            f"right-hand side has length {len(b)}, expected {m.rows}"
        )
    bb = [m.field.of(x) for x in b]
    work = [list(row) + [bb[i]] for i, row in enumerate(m.entries)]
    reduced, pivots = _echelon(work, m.cols + 1)
    if m.cols in pivots:
        return None
    zero = m.field.zero
    x = [zero] * m.cols
    for r_i, pc in enumerate(pivots):
        x[pc] = reduced[r_i][m.cols]
    return tuple(x)


def _rank_of_vectors(vectors: Sequence[Sequence], ambient_dim: int, field: Field) -> int:
    if not vectors:
        return 0
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in ambient dimension {ambient_dim}"
            )
    return rank(DenseMatrix.from_rows(vectors, field))


def direct_sum_check(
    a: Sequence[Sequence],
    b: Sequence[Sequence],
    ambient_dim: int,
    field: Field = QQ,
) -> bool:
    """True iff span(a) and span(b) intersect trivially.

    Decided exactly: rank(a + b) must equal rank(a) + rank(b).
    """
    rank_a = _rank_of_vectors(a, ambient_dim, field)
    rank_b = _rank_of_vectors(b, ambient_dim, field)
    rank_ab = _rank_of_vectors(list(a) + list(b), ambient_dim, field)
    return rank_ab == rank_a + rank_b


def span_contains(
    basis: Sequence[Sequence], v: Sequence, field: Field = QQ
) -> bool:
    """True iff `v` lies in the span of `basis` (exact membership test)."""
    if not basis:
        return not any(field.of(x) for x in v)
    matrix = DenseMatrix.from_rows(basis, field).transpose()
    return solve_linear(matrix, v) is not None
