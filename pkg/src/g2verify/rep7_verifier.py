"""The 7-dimensional representation of g2, its invariant quadric, the
14-dimensional symplectic doubling, conormal/moment-map conditions, and
two independent linear-side orbit counts.

The representation space has ordered basis (v, w, t~, v~, w~, t, u) with
weights (in a-coordinates) -a3, a2, -a1, a3, -a2, a1, 0.  The actions of
f1 and f3 are fixed explicitly; the four unknown coefficients of f2 are
determined by linear constraint solving against the sl2-commutation
identities, and the other eleven matrices are generated by brackets.

Two invariant quadratic objects appear and are kept distinct.  The
element q = u^2 - 4 v v~ - 4 w w~ - 4 t t~ of the symmetric square of
the representation is invariant (coefficient matrix C, invariance
rho(x) C + C rho(x)^T = 0).  The invariant bilinear FORM <.,.> on the
representation space (invariance rho(x)^T B + B rho(x) = 0) is solved
from its own linear system and normalized by <v, v~> = -2; it pairs the
three opposite-weight line pairs with -2 and the zero-weight line with
4, and is proportional to the inverse of C.  The quadric cone Q is the
isotropic locus of the form, which is what the Borel action preserves.

The linear side counts Borel orbits on the quadric cone two ways: over
characteristic zero via T-fixed isotropic lines with pairwise-distinct
orbit dimensions (6 lines + the origin = 7), and over F_p by brute-force
point enumeration plus union-find under Borel generators (expected 7 for
each configured prime).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Sequence

import numpy as np

from . import g2_algebra as g2
from .exact_linalg import QQ, DenseMatrix, kernel_basis, rank, solve_linear
from .g2_algebra import BASIS, BASIS_NAMES, BASIS_WEIGHTS, DIM, G2Element, bracket
from .sampling import SmallRationalSampler

REP_DIM = 7

#: Ordered labels of the representation basis.
REP_LABELS: tuple[str, ...] = ("v", "w", "t~", "v~", "w~", "t", "u")

#: Weight of each representation line in simple-root coordinates; in
#: a-coordinates these are -a3, a2, -a1, a3, -a2, a1, 0.
REP_WEIGHTS: tuple[tuple[int, int], ...] = (
    (2, 1),    # v : -a3
    (1, 1),    # w : a2
    (-1, 0),   # t~: -a1
    (-2, -1),  # v~: a3
    (-1, -1),  # w~: -a2
    (1, 0),    # t : a1
    (0, 0),    # u
)

#: Coefficients (on a1, a2, a3) of each line's weight, for Cartan action.
_REP_A_COEFFS: tuple[tuple[int, int, int], ...] = (
    (0, 0, -1),
    (0, 1, 0),
    (-1, 0, 0),
    (0, 0, 1),
    (0, -1, 0),
    (1, 0, 0),
    (0, 0, 0),
)

_V, _W, _TT, _VT, _WT, _T, _U = range(REP_DIM)


class NoSolutionError(ValueError):
    """The representation constraint system is inconsistent."""


class AmbiguousSolutionError(ValueError):
    """The representation constraint system has more than one solution."""


class BadPrimeError(ValueError):
    """The requested prime cannot be used for the finite-field oracle."""


@dataclass(frozen=True)
class Rep7:
    """Fourteen 7x7 exact matrices indexed by the g2 basis order."""

    matrices: tuple  # tuple of 14 DenseMatrix
    f2_coefficients: tuple  # the four solved scalars

    def matrix(self, name: str) -> DenseMatrix:
        return self.matrices[BASIS_NAMES.index(name)]

    def act(self, x: G2Element) -> DenseMatrix:
        """The matrix of x = sum c_i b_i acting on the representation."""
        out = DenseMatrix.zeros(REP_DIM, REP_DIM, QQ)
        for c, m in zip(x.coords, self.matrices):
            if c:
                out = out + m.scale(c)
        return out


@dataclass(frozen=True)
class InvariantForm:
    """The invariant symmetric bilinear form <.,.> on the representation."""

    matrix: DenseMatrix

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        img = self.matrix.mul_vec(y)
        return sum((Fraction(a) * v for a, v in zip(x, img) if a), Fraction(0))


@dataclass(frozen=True)
class Symplectic14:
    """The symplectic doubling (C^7 tensor C^2, omega = B tensor omega2)
    together with the ten Borel generators acting on it.

    Basis order: x_i tensor e_1 for i < 7, then x_i tensor e_2.
    """

    omega: DenseMatrix
    borel_g2_names: tuple[str, ...]
    borel_g2: tuple  # 7x7 DenseMatrix per name
    borel_sl2_names: tuple[str, ...]
    borel_sl2: tuple  # 2x2 DenseMatrix per name
    actions14: tuple  # the ten 14x14 matrices, g2 part first


@dataclass(frozen=True)
class OrbitCountResult:
    """Result of the brute-force Borel-orbit count over F_p."""

    p: int
    point_count: int
    orbit_count: int
    orbit_sizes: tuple[int, ...]
    origin_orbit_size: int


def q_element_value(x: Sequence) -> Fraction:
    """The invariant symmetric-square element q = u^2 - 4vv~ - 4ww~ - 4tt~,
    evaluated as a polynomial in the seven formal coordinates."""
    x = [Fraction(c) for c in x]
    return (
        x[_U] * x[_U]
        - 4 * x[_V] * x[_VT]
        - 4 * x[_W] * x[_WT]
        - 4 * x[_T] * x[_TT]
    )


@cache
def quadric_element() -> DenseMatrix:
    """Coefficient matrix C of the element q, obtained by polarization:
    C[i][j] = (q(e_i + e_j) - q(e_i) - q(e_j)) / 2."""
    basis = [
        tuple(1 if i == k else 0 for i in range(REP_DIM)) for k in range(REP_DIM)
    ]
    rows = []
    for a in basis:
        row = []
        for b in basis:
            s = tuple(x + y for x, y in zip(a, b))
            row.append((q_element_value(s) - q_element_value(a) - q_element_value(b)) / 2)
        rows.append(row)
    return DenseMatrix.from_rows(rows, QQ)


def _sym_index(i: int, j: int) -> int:
    """Position of the (i <= j) entry in the packed symmetric unknown vector."""
    if i > j:
        i, j = j, i
    return i * REP_DIM - i * (i - 1) // 2 + (j - i)


@cache
def invariant_form() -> InvariantForm:
    """The invariant symmetric bilinear form <.,.>, solved exactly.

    The unknown symmetric matrix B must satisfy rho(x)^T B + B rho(x) = 0
    for all 14 basis elements x; the solution space is required to be a
    single line, and B is normalized by <v, v~> = -2.  The result pairs
    opposite weight lines (<v,v~> = <w,w~> = <t,t~> = -2, <u,u> = 4, all
    other basis pairings zero) and is proportional to the inverse of the
    q coefficient matrix.
    """
    rep = build_rep7()
    nunk = REP_DIM * (REP_DIM + 1) // 2
    rows = []
    for m in rep.matrices:
        # (m^T B + B m)[r][c] = sum_k m[k][r] B[k][c] + B[r][k] m[k][c].
        for r in range(REP_DIM):
            for c in range(r, REP_DIM):
                coeffs = [Fraction(0)] * nunk
                for k in range(REP_DIM):
                    if m.entry(k, r):
                        coeffs[_sym_index(k, c)] += Fraction(m.entry(k, r))
                    if m.entry(k, c):
                        coeffs[_sym_index(r, k)] += Fraction(m.entry(k, c))
                if any(coeffs):
                    rows.append(coeffs)
    kern = kernel_basis(DenseMatrix.from_rows(rows, QQ))
    if len(kern) != 1:
        raise AmbiguousSolutionError(
            f"invariant-form solution space has dimension {len(kern)}"
        )
    packed = kern[0]
    pivot = packed[_sym_index(_V, _VT)]
    if pivot == 0:
        raise NoSolutionError("invariant form does not pair v with v~")
    scale = Fraction(-2) / pivot
    entries = [
        [packed[_sym_index(i, j)] * scale for j in range(REP_DIM)]
        for i in range(REP_DIM)
    ]
    return InvariantForm(DenseMatrix.from_rows(entries, QQ))


def quadric_value(x: Sequence) -> Fraction:
    """The quadratic form <x, x> whose isotropic locus is the cone Q."""
    return invariant_form().pair(x, x)


def _sparse_matrix(entries: dict, scale=1) -> DenseMatrix:
    rows = [[0] * REP_DIM for _ in range(REP_DIM)]
    for (i, j), val in entries.items():
        rows[i][j] = val * scale
    return DenseMatrix.from_rows(rows, QQ)


def _f1_matrix() -> DenseMatrix:
    # f1: v -> w, u -> 2 t~, t -> u, w~ -> -v~.
    return _sparse_matrix({(_W, _V): 1, (_TT, _U): 2, (_U, _T): 1, (_VT, _WT): -1})


def _f3_matrix() -> DenseMatrix:
    # f3: t~ -> w, w~ -> -t, v~ -> -u, u -> -2 v.
    return _sparse_matrix({(_W, _TT): 1, (_T, _WT): -1, (_U, _VT): -1, (_V, _U): -2})


def _f2_matrix(c: Sequence) -> DenseMatrix:
    # The weight-compatible unknown: v -> t, w -> u, t~ -> v~, u -> w~.
    return _sparse_matrix(
        {(_T, _V): c[0], (_U, _W): c[1], (_VT, _TT): c[2], (_WT, _U): c[3]}
    )


def _commutator(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    return a @ b - b @ a


def _cartan_action(x: G2Element) -> DenseMatrix:
    """The diagonal action of a Cartan element, read off from the weights."""
    c = x.coords
    if any(c[:12]):
        raise ValueError("not a Cartan element")
    d = (c[12], c[13] - c[12], -c[13])
    diag = [sum(k * di for k, di in zip(coeffs, d)) for coeffs in _REP_A_COEFFS]
    return _sparse_matrix({(i, i): diag[i] for i in range(REP_DIM) if diag[i]})


def _constraint_stack(c: Sequence) -> tuple:
    """The three sl2-commutation residuals, flattened to one long vector.

    Each residual [rho(e_i), rho(f_i)] - rho([e_i, f_i]) is affine in the
    four unknown f2 coefficients.
    """
    f1m, f3m = _f1_matrix(), _f3_matrix()
    f2m = _f2_matrix(c)
    e1m = _commutator(f2m, f3m).scale(Fraction(1, 2))
    e2m = _commutator(f3m, f1m).scale(Fraction(1, 2))
    e3m = _commutator(f1m, f2m).scale(Fraction(1, 2))
    residuals = []
    for em, fm, ei, fi in (
        (e1m, f1m, g2.e1, g2.f1),
        (e2m, f2m, g2.e2, g2.f2),
        (e3m, f3m, g2.e3, g2.f3),
    ):
        target = _cartan_action(bracket(ei, fi))
        residuals.append(_commutator(em, fm) - target)
    flat = []
    for r in residuals:
        for i in range(REP_DIM):
            flat.extend(r.row(i))
    return tuple(flat)


def _solve_f2_coefficients() -> tuple:
    """Solve the affine constraint system for the four f2 coefficients."""
    zero = (0, 0, 0, 0)
    base = _constraint_stack(zero)
    columns = []
    for k in range(4):
        unit = tuple(1 if i == k else 0 for i in range(4))
        shifted = _constraint_stack(unit)
        columns.append([s - b for s, b in zip(shifted, base)])
    m = DenseMatrix.from_rows(list(zip(*columns)), QQ)
    rhs = [-b for b in base]
    solution = solve_linear(m, rhs)
    if solution is None:
        raise NoSolutionError("representation constraint system is inconsistent")
    if kernel_basis(m):
        raise AmbiguousSolutionError(
            "representation constraint system is underdetermined"
        )
    if any(_constraint_stack(solution)):
        raise NoSolutionError("solved coefficients fail the constraint system")
    return solution


@cache
def build_rep7() -> Rep7:
    """Construct all fourteen representation matrices.

    rho(f1) and rho(f3) are fixed; rho(f2) is solved from the commutation
    constraints; everything else is generated by brackets:
    e1 = [f2,f3]/2, e2 = [f3,f1]/2, e3 = [f1,f2]/2, E_ij = -[e_i, f_j]/3,
    h_a = [E12, E21], h_b = [E23, E32].  The full homomorphism check over
    all 91 basis pairs is run afterwards (see verify_homomorphism).
    """
    coeffs = _solve_f2_coefficients()
    f1m, f3m = _f1_matrix(), _f3_matrix()
    f2m = _f2_matrix(coeffs)
    e1m = _commutator(f2m, f3m).scale(Fraction(1, 2))
    e2m = _commutator(f3m, f1m).scale(Fraction(1, 2))
    e3m = _commutator(f1m, f2m).scale(Fraction(1, 2))
    es = (e1m, e2m, e3m)
    fs = (f1m, f2m, f3m)
    third = Fraction(-1, 3)
    e12 = _commutator(es[0], fs[1]).scale(third)
    e13 = _commutator(es[0], fs[2]).scale(third)
    e21 = _commutator(es[1], fs[0]).scale(third)
    e23 = _commutator(es[1], fs[2]).scale(third)
    e31 = _commutator(es[2], fs[0]).scale(third)
    e32 = _commutator(es[2], fs[1]).scale(third)
    h_a = _commutator(e12, e21)
    h_b = _commutator(e23, e32)
    matrices = (
        e1m, e2m, e3m, f1m, f2m, f3m,
        e12, e13, e21, e23, e31, e32,
        h_a, h_b,
    )
    return Rep7(matrices=matrices, f2_coefficients=coeffs)


def verify_homomorphism(rep: Rep7 | None = None) -> int:
    """Number of basis pairs (i < j) satisfying the homomorphism identity
    rho([b_i, b_j]) = [rho(b_i), rho(b_j)]; 91 means all pass."""
    rep = rep or build_rep7()
    good = 0
    for i in range(DIM):
        for j in range(i + 1, DIM):
            lhs = rep.act(bracket(BASIS[i], BASIS[j]))
            rhs = _commutator(rep.matrices[i], rep.matrices[j])
            if (lhs - rhs).is_zero():
                good += 1
    return good


def verify_weight_compatibility(rep: Rep7 | None = None) -> bool:
    """Each root vector maps every weight line into the shifted weight line."""
    rep = rep or build_rep7()
    for b_idx in range(12):
        delta = BASIS_WEIGHTS[b_idx]
        m = rep.matrices[b_idx]
        for j in range(REP_DIM):
            target = (REP_WEIGHTS[j][0] + delta[0], REP_WEIGHTS[j][1] + delta[1])
            for i in range(REP_DIM):
                if m.entry(i, j) and REP_WEIGHTS[i] != target:
                    return False
    return True


def zero_weight_space(rep: Rep7 | None = None) -> tuple:
    """Basis of the joint kernel of the two Cartan actions (the zero-weight
    space); expected to be the single line through u."""
    rep = rep or build_rep7()
    stacked = [
        list(rep.matrix("h_a").row(i)) for i in range(REP_DIM)
    ] + [list(rep.matrix("h_b").row(i)) for i in range(REP_DIM)]
    return kernel_basis(DenseMatrix.from_rows(stacked, QQ))


def verify_invariant_form(rep: Rep7 | None = None) -> bool:
    """Infinitesimal invariance of the bilinear form:
    rho(x)^T B + B rho(x) = 0 for all 14 basis x."""
    rep = rep or build_rep7()
    b = invariant_form().matrix
    for m in rep.matrices:
        if not (m.transpose() @ b + b @ m).is_zero():
            return False
    return True


def verify_quadric_element(rep: Rep7 | None = None) -> bool:
    """Infinitesimal invariance of the symmetric-square element q:
    rho(x) C + C rho(x)^T = 0 for all 14 basis x, where C is the
    polarized coefficient matrix of q = u^2 - 4vv~ - 4ww~ - 4tt~."""
    rep = rep or build_rep7()
    c = quadric_element()
    for m in rep.matrices:
        if not (m @ c + c @ m.transpose()).is_zero():
            return False
    return True


#: The linear-side Borel: Cartan pair plus the six positive-root vectors of
#: the polarization {a1, a2, -a3, a1-a2, a1-a3, a2-a3}, which makes v (of
#: weight -a3) the highest-weight line.
BOREL_G2_NAMES: tuple[str, ...] = ("h_a", "h_b", "e1", "e2", "f3", "E12", "E13", "E23")

BOREL_POSITIVE_ROOTS: tuple[tuple[int, int], ...] = (
    (1, 0),   # a1        (e1)
    (1, 1),   # a2        (e2)
    (2, 1),   # -a3       (f3)
    (0, -1),  # a1 - a2   (E12)
    (3, 1),   # a1 - a3   (E13)
    (3, 2),   # a2 - a3   (E23)
)


def _block_diag_action(m: DenseMatrix) -> DenseMatrix:
    rows = []
    zero = [0] * REP_DIM
    for i in range(REP_DIM):
        rows.append(list(m.row(i)) + zero)
    for i in range(REP_DIM):
        rows.append(zero + list(m.row(i)))
    return DenseMatrix.from_rows(rows, QQ)


def _sl2_tensor_action(s: DenseMatrix) -> DenseMatrix:
    rows = [[0] * (2 * REP_DIM) for _ in range(2 * REP_DIM)]
    for a in range(2):
        for b in range(2):
            if s.entry(a, b):
                for i in range(REP_DIM):
                    rows[a * REP_DIM + i][b * REP_DIM + i] = s.entry(a, b)
    return DenseMatrix.from_rows(rows, QQ)


@cache
def build_symplectic14() -> Symplectic14:
    """omega = B tensor omega2 with omega2(e1, e2) = 1, plus the ten Borel
    generators (eight from g2, two upper-triangular from sl2) acting on it."""
    rep = build_rep7()
    b = invariant_form().matrix
    n = 2 * REP_DIM
    rows = [[0] * n for _ in range(n)]
    for i in range(REP_DIM):
        for j in range(REP_DIM):
            val = b.entry(i, j)
            if val:
                rows[i][REP_DIM + j] = val
                rows[REP_DIM + i][j] = -val
    omega = DenseMatrix.from_rows(rows, QQ)
    borel_g2 = tuple(rep.matrix(name) for name in BOREL_G2_NAMES)
    sl2_h = DenseMatrix.from_rows([[1, 0], [0, -1]], QQ)
    sl2_e = DenseMatrix.from_rows([[0, 1], [0, 0]], QQ)
    actions = tuple(_block_diag_action(m) for m in borel_g2) + (
        _sl2_tensor_action(sl2_h),
        _sl2_tensor_action(sl2_e),
    )
    return Symplectic14(
        omega=omega,
        borel_g2_names=BOREL_G2_NAMES,
        borel_g2=borel_g2,
        borel_sl2_names=("H2", "E12_2"),
        borel_sl2=(sl2_h, sl2_e),
        actions14=actions,
    )


def omega_pair(x: Sequence, y: Sequence) -> Fraction:
    """Evaluate omega = B tensor omega2 on two 14-vectors."""
    omega = build_symplectic14().omega
    img = omega.mul_vec(y)
    return sum((Fraction(a) * v for a, v in zip(x, img) if a), Fraction(0))


def verify_symplectic_invariance() -> bool:
    """omega has rank 14 and A^T omega + omega A = 0 for all ten generators."""
    symp = build_symplectic14()
    if rank(symp.omega) != 2 * REP_DIM:
        return False
    for a in symp.actions14:
        if not (a.transpose() @ symp.omega + symp.omega @ a).is_zero():
            return False
    return True


def _embed(x7: Sequence, slot: int) -> tuple:
    """Embed a 7-vector into C^7 tensor C^2 in tensor slot 0 (e1) or 1 (e2)."""
    head = [0] * REP_DIM
    vec = list(x7)
    return tuple(vec + head) if slot == 0 else tuple(head + vec)


def phi_symplectomorphism_check() -> bool:
    """The identification (x', x) -> ([x'], x) is a symplectomorphism.

    Checks omega(p1, p2) = Omega(Phi(p1), Phi(p2)) on all 196 basis pairs,
    where Omega(([y1], x1), ([y2], x2)) = omega(x1, y2) - omega(x2, y1),
    and that each g2-Borel generator preserves both tensor slots, acting
    on each as its own 7x7 matrix (so the action descends to the quotient
    and commutes with Phi).
    """
    symp = build_symplectic14()
    n = 2 * REP_DIM
    basis14 = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]

    def phi(p):
        # L = C^7 tensor e1 (first block); V = quotient by L, represented
        # by the e2 block.
        return (p[REP_DIM:], p[:REP_DIM])

    for p1 in basis14:
        for p2 in basis14:
            y1, x1 = phi(p1)
            y2, x2 = phi(p2)
            big_omega = omega_pair(_embed(x1, 0), _embed(y2, 1)) - omega_pair(
                _embed(x2, 0), _embed(y1, 1)
            )
            if omega_pair(p1, p2) != big_omega:
                return False

    for m7, m14 in zip(symp.borel_g2, symp.actions14[: len(symp.borel_g2)]):
        for i in range(n):
            for j in range(n):
                same_block = (i < REP_DIM) == (j < REP_DIM)
                expected = m7.entry(i % REP_DIM, j % REP_DIM) if same_block else 0
                if m14.entry(i, j) != expected:
                    return False
    return True


def conormal_conditions(zprime: Sequence, z: Sequence) -> bool:
    """The three exact conormal conditions:
    (i) <z', z'> = 0, (ii) <z, z'> = 0,
    (iii) <A z, z'> = <z, A z'> for every g2-Borel generator A."""
    form = invariant_form()
    if form.pair(zprime, zprime) != 0:
        return False
    if form.pair(z, zprime) != 0:
        return False
    for m in build_symplectic14().borel_g2:
        if form.pair(m.mul_vec(z), zprime) != form.pair(z, m.mul_vec(zprime)):
            return False
    return True


def moment_zero_check(point: Sequence) -> bool:
    """H_A(point) = omega(point, A point)/2 = 0 for all ten Borel generators."""
    symp = build_symplectic14()
    for a in symp.actions14:
        if omega_pair(point, a.mul_vec(point)) != 0:
            return False
    return True


def orbit_dimension(x: Sequence) -> int:
    """Rank of the g2-Borel tangent map A -> rho(A) x at the point x."""
    symp = build_symplectic14()
    rows = [list(m.mul_vec(x)) for m in symp.borel_g2]
    if not any(any(r) for r in rows):
        return 0
    return rank(DenseMatrix.from_rows(rows, QQ))


def tfixed_isotropic_lines() -> tuple[int, ...]:
    """Indices of the basis weight lines that are isotropic for B.

    Exactly the six nonzero-weight lines qualify; the zero-weight line u
    is excluded because B(u, u) = 4.
    """
    b = invariant_form().matrix
    return tuple(k for k in range(REP_DIM) if b.entry(k, k) == 0)


# ---------------------------------------------------------------------------
# Finite-field orbit oracle.
# ---------------------------------------------------------------------------


class UnionFind:
    """Array-based union-find with path halving and union by size."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def component_sizes(self) -> list[int]:
        return [self.size[i] for i in range(len(self.parent)) if self.find(i) == i]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _matrix_mod_p(m: DenseMatrix, p: int) -> np.ndarray:
    """Reduce an exact rational matrix mod p; BadPrimeError on collision."""
    out = np.zeros((m.rows, m.cols), dtype=np.int64)
    for i in range(m.rows):
        for j in range(m.cols):
            x = Fraction(m.entry(i, j))
            if x.denominator % p == 0:
                raise BadPrimeError(f"denominator {x.denominator} collides with {p}")
            out[i, j] = x.numerator * pow(x.denominator, -1, p) % p
    return out


def _primitive_root(p: int) -> int:
    order = p - 1
    factors = set()
    n, d = order, 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in factors):
            return g
    raise BadPrimeError(f"no primitive root found mod {p}")


def _unipotent_generators(p: int) -> list[np.ndarray]:
    """exp(c rho(x_delta)) mod p for the six positive roots and c != 0."""
    rep = build_rep7()
    gens = []
    for name in BOREL_G2_NAMES[2:]:
        n_mat = _matrix_mod_p(rep.matrix(name), p)
        n2 = n_mat @ n_mat % p
        if np.any(n2 @ n_mat % p):
            raise BadPrimeError("root-vector action is not nilpotent of order <= 3")
        inv2 = pow(2, -1, p)
        eye = np.eye(REP_DIM, dtype=np.int64)
        for c in range(1, p):
            gens.append((eye + c * n_mat + c * c * inv2 * n2) % p)
    return gens


def _torus_generators(p: int) -> list[np.ndarray]:
    """Diagonal scalings s^<mu, coroot> mod p for the two simple coroots."""
    s = _primitive_root(p)
    gens = []
    for pairing in (
        lambda m1, m2: 2 * m1 - 3 * m2,  # <mu, alpha-coroot>
        lambda m1, m2: -m1 + 2 * m2,     # <mu, beta-coroot>
    ):
        diag = [pow(s, pairing(m1, m2) % (p - 1), p) for (m1, m2) in REP_WEIGHTS]
        gens.append(np.diag(np.array(diag, dtype=np.int64)))
    return gens


@cache
def count_orbits_mod_p(p: int) -> OrbitCountResult:
    """Count Borel orbits on the quadric cone Q(F_p) by brute force.

    Enumerates all p^7 vectors, keeps those with <x, x> = 0, and unions every
    point with its image under each generator: the unipotent maps
    exp(c rho(x_delta)) for the six positive roots and all c in F_p - {0},
    and the two coroot scalings by a primitive root.  All arithmetic is
    exact integer arithmetic mod p.
    """
    if p < 3 or not _is_prime(p):
        raise BadPrimeError(f"oracle requires a prime >= 3, got {p}")

    powers = np.array([p**i for i in range(REP_DIM)], dtype=np.int64)
    total = p**REP_DIM
    idx = np.arange(total, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % p  # row i = coordinates of i

    b_mod = _matrix_mod_p(invariant_form().matrix, p)
    qv = ((digits @ b_mod) * digits).sum(axis=1) % p
    on_quadric = qv == 0
    keys = idx[on_quadric]
    points = digits[on_quadric]
    npoints = len(keys)

    lookup = np.full(total, -1, dtype=np.int64)
    lookup[keys] = np.arange(npoints, dtype=np.int64)

    uf = UnionFind(npoints)
    generators = _unipotent_generators(p) + _torus_generators(p)
    for gen in generators:
        images = (points @ gen.T) % p
        image_keys = images @ powers
        image_idx = lookup[image_keys]
        if np.any(image_idx < 0):
            raise AssertionError("generator does not preserve the quadric")
        union = uf.union
        for i, j in enumerate(image_idx.tolist()):
            union(i, j)

    sizes = tuple(sorted(uf.component_sizes()))
    origin_size = uf.size[uf.find(int(lookup[0]))]
    return OrbitCountResult(
        p=p,
        point_count=npoints,
        orbit_count=len(sizes),
        orbit_sizes=sizes,
        origin_orbit_size=origin_size,
    )


# ---------------------------------------------------------------------------
# Seeded sampling for the conormal/moment equivalence and scaling checks.
# ---------------------------------------------------------------------------


def sample_isotropic_vector(sampler: SmallRationalSampler, chart: int) -> tuple:
    """A rational point of the quadric cone, solved on one of three charts.

    With x fixed outside the isotropic coordinate line `solve_for`,
    <x + t e_s, x + t e_s> = <x, x> + 2 t <x, e_s> is linear in t because
    the line is isotropic, and <x, e_s> = B[pivot][s] x[pivot] != 0.
    """
    solve_for, pivot = ((_VT, _V), (_WT, _W), (_TT, _T))[chart % 3]
    b = invariant_form().matrix
    x = [sampler.fraction() for _ in range(REP_DIM)]
    x[pivot] = sampler.nonzero_fraction()
    x[solve_for] = Fraction(0)
    residual = quadric_value(x)
    x[solve_for] = -residual / (2 * b.entry(pivot, solve_for) * x[pivot])
    assert quadric_value(x) == 0
    return tuple(x)


def conormal_fiber_basis(zprime: Sequence) -> tuple:
    """Basis of the space of z satisfying conditions (ii) and (iii) at z'."""
    form = invariant_form().matrix
    rows = [list(form.mul_vec(zprime))]  # condition (ii): B(z, z') = 0
    for m in build_symplectic14().borel_g2:
        # condition (iii): B(rho(A) z, z') - B(z, rho(A) z') = 0.
        lhs = (m.transpose() @ form).mul_vec(zprime)
        rhs = form.mul_vec(m.mul_vec(zprime))
        rows.append([a - b for a, b in zip(lhs, rhs)])
    return kernel_basis(DenseMatrix.from_rows(rows, QQ))


def sample_conormal_pair(
    sampler: SmallRationalSampler, chart: int
) -> tuple[tuple, tuple]:
    """A pair (z', z) satisfying all three conormal conditions by construction."""
    zprime = sample_isotropic_vector(sampler, chart)
    fiber = conormal_fiber_basis(zprime)
    z = [Fraction(0)] * REP_DIM
    for basis_vec in fiber:
        c = sampler.fraction()
        z = [a + c * b for a, b in zip(z, basis_vec)]
    return zprime, tuple(z)


def rep_matrix_table(rep: Rep7 | None = None) -> str:
    """Plain-text dump of the fourteen representation matrices."""
    rep = rep or build_rep7()
    lines = [f"basis order: {', '.join(REP_LABELS)}", ""]
    for name, m in zip(BASIS_NAMES, rep.matrices):
        lines.append(f"rho({name}) =")
        width = max(
            len(str(m.entry(i, j))) for i in range(REP_DIM) for j in range(REP_DIM)
        )
        for i in range(REP_DIM):
            row = "  ".join(str(m.entry(i, j)).rjust(width) for j in range(REP_DIM))
            lines.append(f"  [{row}]")
        lines.append("")
    return "\n".join(lines)
