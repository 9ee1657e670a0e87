import itertools
import math

import numpy as np
import pytest

from eshelby2d.algebra import GroupElement, group_apply, random_eshelby
from eshelby2d.decomp import Decomposition, complex_rep, decompose
from eshelby2d.harmonic import ComplexRep
from eshelby2d.invariants import (
    DEGREES, EXAMPLE1_COEFFS, DerivedInvariants, InvariantVector, PolarConfig,
    derived_invariants, example1_residuals, invariant_basis, invariant_basis_complex,
    irreducibility_witness, syzygy_residuals, trig_derived, trig_invariants,
)

S2 = math.sqrt(2) / 2
IDX2 = list(itertools.product(range(2), repeat=2))


def loop_chain(A, D, B):
    """A_ij D_ijkl D_klpq B_pq by explicit sums."""
    return sum(A[i, j] * D[i, j, k, l] * D[k, l, p, q] * B[p, q]
               for i, j in IDX2 for k, l in IDX2 for p, q in IDX2)


def loop_cubic(A, D, B):
    return sum(A[i, j] * D[i, j, k, l] * B[k, l] for i, j in IDX2 for k, l in IDX2)


def random_config(rng, scalars=False):
    H, L, K = rng.uniform(0, 2, 3)
    t = rng.uniform(-2 * np.pi, 2 * np.pi, 3)
    extra = rng.uniform(-1, 1, 3) if scalars else (0, 0, 0)
    return PolarConfig(H, L, K, *t, *extra)


def test_degree_metadata():
    assert DEGREES == (2, 2, 2, 3, 3, 2, 3, 1, 1, 1)
    assert InvariantVector(*range(10)).degrees == DEGREES


def test_zero():
    assert np.all(invariant_basis(Decomposition.zero()).as_array() == 0)
    assert np.all(invariant_basis_complex(ComplexRep()).as_array() == 0)


def test_cubic_normalization_oracle(rng):
    """Literal contraction is Re(z1^2 conj z3) / sqrt(2); J4 carries the sqrt(2)."""
    for seed in range(20):
        dec = decompose(random_eshelby(seed))
        z1, z2, z3 = complex_rep(dec).as_tuple()
        assert loop_cubic(dec.d1, dec.d, dec.d1) == pytest.approx(
            S2 * (z1 * z1 * z3.conjugate()).real, abs=1e-14)
        assert loop_cubic(dec.d1, dec.d, dec.d2) == pytest.approx(
            S2 * (z1 * z2 * z3.conjugate()).real, abs=1e-14)


def test_case7_values():
    a, b = irreducibility_witness(7)
    ja = invariant_basis(a.decomposition())
    jb = invariant_basis(b.decomposition())
    expect = [1, 1, 1, S2, -S2, 0, S2, 0, 0, 0]
    np.testing.assert_allclose(ja.as_array(), expect, atol=1e-14)
    expect[6] = -S2
    np.testing.assert_allclose(jb.as_array(), expect, atol=1e-14)


def test_complex_path_examples():
    iv = invariant_basis_complex(ComplexRep(1, 1j, 0))
    np.testing.assert_allclose(iv.as_array()[:7], [1, 1, 0, 0, 0, 0, 0], atol=0)
    iv = invariant_basis_complex(ComplexRep(1 + 1j, 0, 2j))
    np.testing.assert_allclose(iv.as_array()[:7], [2, 0, 4, 4, 0, 0, 0], atol=1e-15)


def test_contraction_equals_complex_path(rng):
    for n in range(1000):
        dec = decompose(random_eshelby(n) * rng.uniform(0.1, 10))
        a = invariant_basis(dec).as_array()
        b = invariant_basis_complex(complex_rep(dec), dec.lam, dec.mu, dec.v).as_array()
        assert np.all(np.abs(a - b) <= 1e-12 * np.maximum(1.0, np.abs(a)))


def test_trig_forms(rng):
    for _ in range(200):
        cfg = random_config(rng)
        iv = invariant_basis(cfg.decomposition()).as_array()[:7]
        np.testing.assert_allclose(iv, trig_invariants(cfg), rtol=0, atol=1e-12)


def test_derived_examples():
    zero = InvariantVector(*[0.0] * 10)
    assert np.all(derived_invariants(zero).as_array() == 0)
    iv = InvariantVector(0, 0, 4, 0, 0, 1, 1, 0, 0, 0)
    d = derived_invariants(iv)
    # J11 = J6^2 J3 - J7^2; J12 = J1 J7 - J4 J6; J13 = J1 J3 J6 - J4 J7; ...
    assert d == DerivedInvariants(3.0, 0.0, 0.0, 0.0, 0.0, 0.0)


def test_syzygy_trivial_configs():
    r = syzygy_residuals(PolarConfig(H=1.3, L=0.7, K=0.0, theta1=0.4, theta2=2.0))
    assert np.all(r == 0)
    assert np.all(trig_derived(PolarConfig(H=1.3, L=0.7, theta1=0.4)).as_array()[:5] == 0)
    cfg = PolarConfig(1, 1, 1)
    assert np.abs(syzygy_residuals(cfg)).max() < 1e-15
    assert np.all(trig_derived(cfg).as_array() == 0)


def test_syzygies_random(rng):
    for _ in range(1000):
        cfg = random_config(rng, scalars=True)
        bound = 1e-10 * (1 + cfg.H**2 * cfg.L**2 * cfg.K**2)
        assert np.abs(syzygy_residuals(cfg)).max() <= bound


def test_example1_coefficients_pinned_by_oracle():
    """Brute-force ratios of A:D:D:B to J-products determine the coefficients."""
    ratios = []
    for seed in range(30):
        dec = decompose(random_eshelby(seed))
        iv = invariant_basis(dec)
        ratios.append((loop_chain(dec.d1, dec.d, dec.d1) / (iv.j1 * iv.j3),
                       loop_chain(dec.d2, dec.d, dec.d2) / (iv.j2 * iv.j3),
                       loop_chain(dec.d1, dec.d, dec.d2) / (iv.j3 * iv.j6)))
    np.testing.assert_allclose(ratios, np.tile(EXAMPLE1_COEFFS, (30, 1)), rtol=1e-12)


def test_example1_residuals(rng):
    from eshelby2d.decomp import reconstruct
    assert np.all(example1_residuals(random_eshelby(0) * 0.0) == 0)
    dec = decompose(random_eshelby(3))
    no_d = reconstruct(Decomposition(dec.lam, dec.mu, dec.v, dec.d1, dec.d2,
                                     np.zeros((2, 2, 2, 2))))
    assert np.abs(example1_residuals(no_d)).max() < 1e-15
    for n in range(1000):
        M = random_eshelby(n) * rng.uniform(0.1, 10)
        assert np.abs(example1_residuals(M)).max() <= 1e-10 * (1 + M.norm() ** 4)


@pytest.mark.parametrize("s", range(1, 8))
def test_witness_pairs(s):
    a, b = irreducibility_witness(s)
    ja = invariant_basis(a.decomposition()).as_array()
    jb = invariant_basis(b.decomposition()).as_array()
    others = [t for t in range(10) if t != s - 1]
    assert np.abs(ja[others] - jb[others]).max() <= 1e-12
    assert abs(ja[s - 1] - jb[s - 1]) >= 0.5


def test_witness_specifics():
    a, b = irreducibility_witness(1)
    assert invariant_basis(a.decomposition()).j1 == pytest.approx(1)
    assert invariant_basis(b.decomposition()).j1 == pytest.approx(4)
    a, b = irreducibility_witness(6)
    assert invariant_basis(a.decomposition()).j6 == pytest.approx(1)
    assert invariant_basis(b.decomposition()).j6 == pytest.approx(0, abs=1e-15)
    with pytest.raises(ValueError):
        irreducibility_witness(8)


def test_rotation_and_reflection_behaviour(rng):
    for n in range(100):
        M = random_eshelby(n)
        base = invariant_basis(decompose(M)).as_array()
        tol = 1e-10 * (1 + np.abs(base))
        J = invariant_basis(decompose(group_apply(GroupElement(rng.uniform(0, 7)), M)))
        assert np.all(np.abs(J.as_array() - base) <= tol)
        Jr = invariant_basis(decompose(group_apply(GroupElement.reflection(), M))).as_array()
        assert np.all(np.abs(Jr[:9] - base[:9]) <= tol[:9])
        assert abs(Jr[9] + base[9]) <= tol[9]


def test_polar_config_validation():
    with pytest.raises(ValueError):
        PolarConfig(H=-1)
    with pytest.raises(ValueError):
        PolarConfig(theta1=float("nan"))
