"""The 14-dimensional exceptional Lie algebra g2 = V + sl3 + V^t.

V is the space of column 3-vectors, V^t the space of row 3-vectors, and
sl3 the traceless 3x3 matrices.  The bracket is defined case by case:

* [x, y]   = xy - yx                      for x, y in sl3,
* [x, v]   = xv                           for x in sl3, v in V,
* [x, w^t] = -w^t x                       for x in sl3, w^t in V^t,
* [v, w]   = 2 (v x w)^t                  for v, w in V (cross product),
* [v^t, w^t] = 2 v x w                    for v^t, w^t in V^t,
* [v, w^t] = -3 v w^t + (w^t v) Id        for v in V, w^t in V^t.

The fixed ordered basis is e1, e2, e3 (columns), f1, f2, f3 (rows),
E12, E13, E21, E23, E31, E32 (off-diagonal matrix units), and the Cartan
pair h_a = E11 - E22, h_b = E22 - E33.  Every basis element is a weight
vector; weights are recorded in simple-root coordinates (m1, m2) for the
simple roots alpha = a1 and beta = a2 - a1, where a_i is the weight of
e_i (so a2 = alpha + beta and a3 = -2*alpha - beta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .exact_linalg import QQ, DenseMatrix, solve_linear

#: Names of the 14 basis elements, in the fixed order used everywhere.
BASIS_NAMES: tuple[str, ...] = (
    "e1", "e2", "e3",
    "f1", "f2", "f3",
    "E12", "E13", "E21", "E23", "E31", "E32",
    "h_a", "h_b",
)

DIM = 14

#: Weight of each basis element in simple-root coordinates (alpha, beta).
#: e_i carries weight a_i, f_i carries -a_i, E_ij carries a_i - a_j, and
#: the Cartan pair carries weight zero.  The dictionary alpha = a1,
#: beta = a2 - a1 translates a-labels to (m1, m2) pairs.
BASIS_WEIGHTS: tuple[tuple[int, int], ...] = (
    (1, 0),    # e1 : a1
    (1, 1),    # e2 : a2
    (-2, -1),  # e3 : a3
    (-1, 0),   # f1 : -a1
    (-1, -1),  # f2 : -a2
    (2, 1),    # f3 : -a3
    (0, -1),   # E12: a1 - a2
    (3, 1),    # E13: a1 - a3
    (0, 1),    # E21: a2 - a1
    (3, 2),    # E23: a2 - a3
    (-3, -1),  # E31: a3 - a1
    (-3, -2),  # E32: a3 - a2
    (0, 0),    # h_a
    (0, 0),    # h_b
)


class NonNilpotentError(ValueError):
    """Raised when a nilpotent adjoint exponential is requested for a
    non-nilpotent element."""


@dataclass(frozen=True)
class G2Element:
    """An element of g2: 14 exact coefficients in the fixed basis order."""

    coords: tuple

    def __post_init__(self) -> None:
        if len(self.coords) != DIM:
            raise ValueError(f"g2 elements have {DIM} coordinates")

    @classmethod
    def zero(cls) -> G2Element:
        return cls((0,) * DIM)

    @classmethod
    def basis(cls, index: int) -> G2Element:
        return cls(tuple(1 if i == index else 0 for i in range(DIM)))

    @classmethod
    def from_coords(cls, coords: Sequence) -> G2Element:
        return cls(tuple(coords))

    def __add__(self, other: G2Element) -> G2Element:
        return G2Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: G2Element) -> G2Element:
        return G2Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> G2Element:
        return G2Element(tuple(-a for a in self.coords))

    def scale(self, s) -> G2Element:
        return G2Element(tuple(s * a for a in self.coords))

    def __rmul__(self, s) -> G2Element:
        return self.scale(s)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        terms = []
        for c, name in zip(self.coords, BASIS_NAMES):
            if c:
                terms.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(terms) if terms else "0"


# Named basis elements.
e1 = G2Element.basis(0)
e2 = G2Element.basis(1)
e3 = G2Element.basis(2)
f1 = G2Element.basis(3)
f2 = G2Element.basis(4)
f3 = G2Element.basis(5)
E12 = G2Element.basis(6)
E13 = G2Element.basis(7)
E21 = G2Element.basis(8)
E23 = G2Element.basis(9)
E31 = G2Element.basis(10)
E32 = G2Element.basis(11)
h_a = G2Element.basis(12)
h_b = G2Element.basis(13)

BASIS: tuple[G2Element, ...] = tuple(G2Element.basis(i) for i in range(DIM))


def _decompose(x: G2Element):
    """Split an element into its (V, sl3, V^t) parts.

    Returns (v, m, phi): a column 3-vector, a 3x3 traceless matrix (as a
    tuple of row tuples), and a row 3-vector.
    """
    c = x.coords
    v = (c[0], c[1], c[2])
    phi = (c[3], c[4], c[5])
    m = (
        (c[12], c[6], c[7]),
        (c[8], c[13] - c[12], c[9]),
        (c[10], c[11], -c[13]),
    )
    return v, m, phi


def _recompose(v, m, phi) -> G2Element:
    """Inverse of _decompose; `m` must be traceless."""
    return G2Element(
        (
            v[0], v[1], v[2],
            phi[0], phi[1], phi[2],
            m[0][1], m[0][2], m[1][0], m[1][2], m[2][0], m[2][1],
            m[0][0], m[0][0] + m[1][1],
        )
    )


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _mat_vec(m, v):
    return tuple(sum(m[i][k] * v[k] for k in range(3)) for i in range(3))


def _vec_mat(phi, m):
    return tuple(sum(phi[k] * m[k][j] for k in range(3)) for j in range(3))


def _mat_mat(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def bracket(x: G2Element, y: G2Element) -> G2Element:
    """The Lie bracket of g2, assembled from the six case formulas."""
    v1, m1, p1 = _decompose(x)
    v2, m2, p2 = _decompose(y)

    # V component: [m1, v2] + [v1, m2] + [p1, p2].
    v_out = tuple(
        _mat_vec(m1, v2)[i] - _mat_vec(m2, v1)[i] + 2 * _cross(p1, p2)[i]
        for i in range(3)
    )

    # V^t component: [m1, p2] + [p1, m2] + [v1, v2].
    vm1 = _vec_mat(p2, m1)
    vm2 = _vec_mat(p1, m2)
    cr = _cross(v1, v2)
    p_out = tuple(-vm1[j] + vm2[j] + 2 * cr[j] for j in range(3))

    # sl3 component: [m1, m2] + [v1, p2] + [p1, v2].
    comm = _mat_mat(m1, m2)
    comm2 = _mat_mat(m2, m1)
    dot12 = sum(p2[k] * v1[k] for k in range(3))
    dot21 = sum(p1[k] * v2[k] for k in range(3))
    m_out = tuple(
        tuple(
            comm[i][j]
            - comm2[i][j]
            - 3 * v1[i] * p2[j]
            + 3 * v2[i] * p1[j]
            + ((dot12 - dot21) if i == j else 0)
            for j in range(3)
        )
        for i in range(3)
    )
    return _recompose(v_out, m_out, p_out)


@cache
def _bracket_table() -> tuple:
    """Coordinates of [b_i, b_j] for all basis pairs, cached."""
    return tuple(
        tuple(bracket(BASIS[i], BASIS[j]).coords for j in range(DIM))
        for i in range(DIM)
    )


def ad_matrix(x: G2Element) -> DenseMatrix:
    """The 14x14 matrix of y -> [x, y] in the fixed basis."""
    table = _bracket_table()
    columns = []
    for j in range(DIM):
        col = [Fraction(0)] * DIM
        for i, c in enumerate(x.coords):
            if c:
                for k in range(DIM):
                    t = table[i][j][k]
                    if t:
                        col[k] += c * t
        columns.append(col)
    rows = tuple(
        tuple(Fraction(columns[j][k]) for j in range(DIM)) for k in range(DIM)
    )
    return DenseMatrix(DIM, DIM, rows, QQ)


@cache
def killing_gram() -> tuple:
    """Gram matrix K[i][j] = trace(ad b_i . ad b_j) over the fixed basis."""
    ads = [ad_matrix(b) for b in BASIS]
    gram = []
    for i in range(DIM):
        row = []
        for j in range(DIM):
            prod = ads[i] @ ads[j]
            row.append(sum(prod.entry(k, k) for k in range(DIM)))
        gram.append(tuple(row))
    return tuple(gram)


def killing(x: G2Element, y: G2Element) -> Fraction:
    """The Killing form trace(ad x . ad y), via the cached basis Gram matrix."""
    gram = killing_gram()
    total = Fraction(0)
    for i, a in enumerate(x.coords):
        if a:
            row = gram[i]
            for j, b in enumerate(y.coords):
                if b:
                    total += a * row[j] * b
    return total


@dataclass(frozen=True)
class LinearFunctional:
    """The functional x -> killing(rep, x) for a fixed representing element."""

    rep: G2Element

    def __call__(self, x: G2Element) -> Fraction:
        return killing(self.rep, x)


def exp_ad_nilpotent(x: G2Element, t) -> DenseMatrix:
    """The exact exponential sum_k t^k/k! ad(x)^k for nilpotent ad(x).

    Raises NonNilpotentError if the powers of ad(x) do not vanish within
    the dimension bound 14.
    """
    t = Fraction(t)
    a = ad_matrix(x)
    result = DenseMatrix.identity(DIM, QQ)
    term = DenseMatrix.identity(DIM, QQ)
    factorial = 1
    for k in range(1, DIM + 1):
        term = term @ a
        if term.is_zero():
            return result
        factorial *= k
        result = result + term.scale(Fraction(t**k, factorial))
    raise NonNilpotentError(f"ad({x!r}) is not nilpotent within power {DIM}")


def apply_matrix(m: DenseMatrix, x: G2Element) -> G2Element:
    """Apply a 14x14 matrix (in the fixed basis) to an algebra element."""
    return G2Element(m.mul_vec(x.coords))


def weight_component(x: G2Element, w: Sequence[int]) -> G2Element:
    """Projection of `x` onto the coordinate subspace of weight `w`."""
    target = (w[0], w[1])
    return G2Element(
        tuple(
            c if BASIS_WEIGHTS[i] == target else 0
            for i, c in enumerate(x.coords)
        )
    )


def all_weights() -> tuple[tuple[int, int], ...]:
    """The distinct weights occurring in the basis (12 roots and zero)."""
    seen: list[tuple[int, int]] = []
    for w in BASIS_WEIGHTS:
        if w not in seen:
            seen.append(w)
    return tuple(seen)


def root_vector_index(w: Sequence[int]) -> int:
    """Index of the unique basis element of nonzero weight `w`."""
    target = (w[0], w[1])
    if target == (0, 0):
        raise ValueError("weight zero is not a root")
    for i, bw in enumerate(BASIS_WEIGHTS):
        if bw == target:
            return i
    raise ValueError(f"{target} is not a root of g2")


def root_vector(w: Sequence[int]) -> G2Element:
    """The basis root vector of nonzero weight `w`."""
    return BASIS[root_vector_index(w)]


def adjoint_tables_text() -> str:
    """Plain-text dump of all 14 adjoint matrices, for documentation."""
    lines = []
    for i, name in enumerate(BASIS_NAMES):
        lines.append(f"ad({name}) =")
        m = ad_matrix(BASIS[i])
        width = max(len(str(m.entry(r, c))) for r in range(DIM) for c in range(DIM))
        for r in range(DIM):
            row = "  ".join(str(m.entry(r, c)).rjust(width) for c in range(DIM))
            lines.append(f"  [{row}]")
        lines.append("")
    return "\n".join(lines)

def verify_antisymmetry() -> int:
    """Number of ordered basis pairs with [x, y] + [y, x] = 0 (196 = all)."""
    good = 0
    for x in BASIS:
        for y in BASIS:
            if (bracket(x, y) + bracket(y, x)).is_zero():
                good += 1
    return good


def verify_jacobi() -> int:
    """Number of ordered basis triples satisfying the Jacobi identity
    [x, [y, z]] + [y, [z, x]] + [z, [x, y]] = 0 (2744 = all)."""
    good = 0
    for x in BASIS:
        for y in BASIS:
            for z in BASIS:
                total = (
                    bracket(x, bracket(y, z))
                    + bracket(y, bracket(z, x))
                    + bracket(z, bracket(x, y))
                )
                if total.is_zero():
                    good += 1
    return good


def verify_killing_invariance() -> int:
    """Number of ordered basis triples satisfying the invariance identity
    kappa([x, y], z) + kappa(y, [x, z]) = 0 (2744 = all)."""
    good = 0
    for x in BASIS:
        for y in BASIS:
            for z in BASIS:
                if killing(bracket(x, y), z) + killing(y, bracket(x, z)) == 0:
                    good += 1
    return good


def killing_dual_norm(value_on_h_a, value_on_h_b) -> Fraction:
    """kappa-norm squared of the Cartan functional with the given values.

    The functional's Killing dual t solves the 2x2 Gram system; the norm
    squared kappa(t, t) equals the functional evaluated at t.
    """
    gram = killing_gram()
    g = DenseMatrix.from_rows(
        [[gram[12][12], gram[12][13]], [gram[13][12], gram[13][13]]], QQ
    )
    sol = solve_linear(g, [value_on_h_a, value_on_h_b])
    if sol is None:
        raise ValueError("Killing form is degenerate on the Cartan")
    return Fraction(value_on_h_a) * sol[0] + Fraction(value_on_h_b) * sol[1]
