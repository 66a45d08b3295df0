"""The 7-dimensional representation, its invariant quadric, and the
Borel-orbit count on the quadric cone.

Frozen facts: the four undetermined rho(f2) coefficients solve uniquely
to (1, -1, -1, -2); all 91 bracket pairs are matched; the invariant
bilinear form pairs dual weight lines at -2 with B(u, u) = 4; the
quadratic invariant as a polynomial has unit u^2 coefficient; there are
6 isotropic T-fixed lines with pairwise distinct orbit dimensions; and
the Borel-orbit count over F_p is 7 for p in {3, 5}.
"""

from fractions import Fraction

import pytest

from g2verify.exact_linalg import rank
from g2verify.rep7_verifier import (
    REP_DIM,
    REP_LABELS,
    REP_WEIGHTS,
    BadPrimeError,
    build_rep7,
    build_symplectic14,
    conormal_conditions,
    conormal_fiber_basis,
    count_orbits_mod_p,
    invariant_form,
    moment_zero_check,
    omega_pair,
    orbit_dimension,
    phi_symplectomorphism_check,
    q_element_value,
    quadric_element,
    quadric_value,
    sample_conormal_pair,
    sample_isotropic_vector,
    tfixed_isotropic_lines,
    verify_homomorphism,
    verify_invariant_form,
    verify_quadric_element,
    verify_symplectic_invariance,
    verify_weight_compatibility,
    zero_weight_space,
)
from g2verify.sampling import SmallRationalSampler


def unit(i: int) -> tuple:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(REP_DIM))


ZERO = tuple(Fraction(0) for _ in range(REP_DIM))


@pytest.fixture(scope="module")
def rep():
    return build_rep7()


def test_basis_bookkeeping() -> None:
    assert REP_DIM == 7
    assert REP_LABELS == ("v", "w", "t~", "v~", "w~", "t", "u")
    assert len(REP_WEIGHTS) == 7
    assert REP_WEIGHTS[6] == (0, 0)
    # Nonzero weights occur in opposite pairs.
    nonzero = [w for w in REP_WEIGHTS if w != (0, 0)]
    assert all((-m, -n) in nonzero for m, n in nonzero)


def test_f2_coefficients_frozen(rep) -> None:
    assert rep.f2_coefficients == (
        Fraction(1),
        Fraction(-1),
        Fraction(-1),
        Fraction(-2),
    )


def test_seed_matrix_entries(rep) -> None:
    rho_f1 = rep.matrix("f1")
    rho_f3 = rep.matrix("f3")
    expected_f1 = {(1, 0): 1, (2, 6): 2, (6, 5): 1, (3, 4): -1}
    expected_f3 = {(1, 2): 1, (5, 4): -1, (6, 3): -1, (0, 6): -2}
    for m, expected in ((rho_f1, expected_f1), (rho_f3, expected_f3)):
        actual = {
            (i, j): m.entry(i, j)
            for i in range(REP_DIM)
            for j in range(REP_DIM)
            if m.entry(i, j)
        }
        assert actual == expected


def test_homomorphism_all_pairs(rep) -> None:
    assert verify_homomorphism(rep) == 91


def test_weight_compatibility(rep) -> None:
    assert verify_weight_compatibility(rep)


def test_zero_weight_space_is_the_u_line(rep) -> None:
    space = zero_weight_space(rep)
    assert len(space) == 1
    (v,) = space
    assert [k for k in range(REP_DIM) if v[k]] == [6]


def test_invariant_form_entries() -> None:
    b = invariant_form().matrix
    expected = {
        (0, 3): -2, (3, 0): -2,
        (1, 4): -2, (4, 1): -2,
        (2, 5): -2, (5, 2): -2,
        (6, 6): 4,
    }
    actual = {
        (i, j): b.entry(i, j)
        for i in range(REP_DIM)
        for j in range(REP_DIM)
        if b.entry(i, j)
    }
    assert actual == expected
    assert (b - b.transpose()).is_zero()
    assert rank(b) == 7


def test_invariant_form_identity(rep) -> None:
    assert verify_invariant_form(rep)


def test_quadric_element_invariance(rep) -> None:
    assert verify_quadric_element(rep)


def test_quadratic_invariant_polynomial() -> None:
    c = quadric_element()
    sampler = SmallRationalSampler(5)
    for _ in range(20):
        x = [sampler.fraction() for _ in range(REP_DIM)]
        v, w, tt, vt, wt, t, u = x
        assert q_element_value(x) == u * u - 4 * v * vt - 4 * w * wt - 4 * t * tt
        # The bilinear form computes the same polynomial up to the u^2
        # normalization: <x, x> = q(x) + 3 u^2.
        assert quadric_value(x) == q_element_value(x) + 3 * u * u
    assert c.entry(6, 6) == 1


def test_symplectic_doubling() -> None:
    symp = build_symplectic14()
    assert symp.omega.rows == symp.omega.cols == 14
    assert (symp.omega + symp.omega.transpose()).is_zero()
    assert rank(symp.omega) == 14
    assert len(symp.actions14) == 10
    assert verify_symplectic_invariance()


def test_omega_pair_antisymmetry() -> None:
    sampler = SmallRationalSampler(11)
    for _ in range(10):
        x = [sampler.fraction() for _ in range(14)]
        y = [sampler.fraction() for _ in range(14)]
        assert omega_pair(x, y) == -omega_pair(y, x)


def test_phi_is_a_symplectomorphism() -> None:
    assert phi_symplectomorphism_check()


def test_conormal_worked_examples() -> None:
    # (z' = v, z = v): all three conditions hold.
    assert conormal_conditions(unit(0), unit(0))
    # (z' = v, z = v~): <z, z'> = -2 breaks condition (ii).
    assert not conormal_conditions(unit(0), unit(3))
    # (z' = u, z = 0): <z', z'> = 4 breaks condition (i).
    assert not conormal_conditions(unit(6), ZERO)


def test_moment_map_matches_conormal_on_examples() -> None:
    for zprime, z in ((unit(0), unit(0)), (unit(0), unit(3)), (unit(6), ZERO)):
        point = tuple(z) + tuple(zprime)
        assert moment_zero_check(point) == conormal_conditions(zprime, z)


def test_conormal_sampler_produces_members() -> None:
    sampler = SmallRationalSampler(3)
    for k in range(12):
        zprime, z = sample_conormal_pair(sampler, k)
        assert conormal_conditions(zprime, z)
        assert moment_zero_check(tuple(z) + tuple(zprime))


def test_moment_map_matches_conormal_on_random_pairs() -> None:
    sampler = SmallRationalSampler(9)
    for _ in range(25):
        zprime = tuple(sampler.fraction() for _ in range(REP_DIM))
        z = tuple(sampler.fraction() for _ in range(REP_DIM))
        point = tuple(z) + tuple(zprime)
        assert conormal_conditions(zprime, z) == moment_zero_check(point)


def test_isotropic_sampler(rep) -> None:
    sampler = SmallRationalSampler(17)
    for chart in range(9):
        x = sample_isotropic_vector(sampler, chart)
        assert quadric_value(x) == 0
        assert any(x)


def test_conormal_fiber_is_annihilated() -> None:
    sampler = SmallRationalSampler(23)
    zprime = sample_isotropic_vector(sampler, 0)
    form = invariant_form()
    for z in conormal_fiber_basis(zprime):
        assert conormal_conditions(zprime, z)
        assert form.pair(z, zprime) == 0


def test_tfixed_isotropic_lines() -> None:
    lines = tfixed_isotropic_lines()
    assert lines == (0, 1, 2, 3, 4, 5)
    assert all(REP_LABELS[k] != "u" for k in lines)


def test_orbit_dimensions_distinct() -> None:
    dims = {REP_LABELS[k]: orbit_dimension(unit(k)) for k in tfixed_isotropic_lines()}
    assert dims == {"v": 1, "w": 3, "t~": 5, "v~": 6, "w~": 4, "t": 2}
    assert sorted(dims.values()) == [1, 2, 3, 4, 5, 6]
    assert orbit_dimension(ZERO) == 0


def test_orbit_dimension_scale_invariant() -> None:
    sampler = SmallRationalSampler(29)
    for _ in range(10):
        x = [sampler.fraction() for _ in range(REP_DIM)]
        lam = sampler.nonzero_fraction()
        assert orbit_dimension([lam * c for c in x]) == orbit_dimension(x)


@pytest.mark.parametrize("p", [3, 5])
def test_orbit_count_mod_p(p: int) -> None:
    result = count_orbits_mod_p(p)
    assert result.orbit_count == 7
    assert result.point_count == p**6
    assert result.origin_orbit_size == 1
    assert sum(result.orbit_sizes) == result.point_count
    assert all(s % (p - 1) == 0 for s in result.orbit_sizes if s > 1)


@pytest.mark.parametrize("bad", [2, 4, 9])
def test_orbit_count_rejects_bad_moduli(bad: int) -> None:
    with pytest.raises(BadPrimeError):
        count_orbits_mod_p(bad)
