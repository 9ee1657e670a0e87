import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eshelby2d.algebra import (
    IDENTITY, EshelbyTensor, GroupElement, SymmetryViolation, act, flat_offset,
    group_apply, random_eshelby, validate_minor_symmetry,
)
from eshelby2d.harmonic import EE1, EE2

from conftest import loop_act, random_elements

angles = st.floats(-20.0, 20.0, allow_nan=False)
elements = st.builds(GroupElement, angles, st.booleans())


def test_flat_offset_is_c_order():
    a = np.arange(16.0).reshape(2, 2, 2, 2)
    for i, j, k, l in np.ndindex(2, 2, 2, 2):
        assert a[i, j, k, l] == flat_offset(i + 1, j + 1, k + 1, l + 1)


def test_validate_zero():
    M = validate_minor_symmetry(np.zeros(16), tol=0.0)
    assert np.all(M.array == 0)


def test_validate_already_symmetric():
    raw = np.zeros(16)
    raw[flat_offset(1, 2, 1, 1)] = 1.0
    raw[flat_offset(2, 1, 1, 1)] = 1.0
    M = validate_minor_symmetry(raw, tol=0.0)
    assert M[0, 1, 0, 0] == 1.0 and M[1, 0, 0, 0] == 1.0
    assert np.count_nonzero(M.array) == 2


def test_validate_rejects_asymmetric():
    raw = np.zeros(16)
    raw[flat_offset(1, 2, 1, 1)] = 1.0
    with pytest.raises(SymmetryViolation) as err:
        validate_minor_symmetry(raw, tol=1e-12)
    assert err.value.deviation == 1.0


def test_validate_symmetrizes_within_tol():
    a = random_eshelby(3).array.copy()
    a[0, 1, 0, 0] += 1e-9
    M = validate_minor_symmetry(a, tol=1e-8)
    assert M[0, 1, 0, 0] == M[1, 0, 0, 0]
    assert abs(M[0, 1, 0, 0] - random_eshelby(3)[0, 1, 0, 0] - 0.5e-9) < 1e-15


def test_constructor_demands_exact_symmetry():
    a = random_eshelby(3).array.copy()
    a[0, 0, 0, 1] += 1e-15
    with pytest.raises(SymmetryViolation):
        EshelbyTensor(a)
    with pytest.raises(ValueError):
        validate_minor_symmetry(np.zeros(16), tol=-1)


def test_random_eshelby_determinism_and_contract():
    assert random_eshelby(0) == random_eshelby(0)
    assert random_eshelby(0) != random_eshelby(1)
    M = random_eshelby(7)
    EshelbyTensor(M.array)  # tol 0
    assert np.all(np.abs(M.array) <= 1.0)


def test_tensor_is_immutable():
    M = random_eshelby(2)
    with pytest.raises(ValueError):
        M.array[0, 0, 0, 0] = 5.0


def test_group_element_normal_form():
    g = GroupElement(-0.5, 1)
    assert 0 <= g.angle < 2 * math.pi and g.reflect is True
    assert GroupElement(2 * math.pi).angle == 0.0
    assert GroupElement.reflection().det == -1 and IDENTITY.det == 1
    np.testing.assert_allclose(GroupElement.reflection().matrix, np.diag([1.0, -1.0]))


@given(elements, elements)
def test_composition_matches_matrix_product(g1, g2):
    np.testing.assert_allclose((g2 @ g1).matrix, g2.matrix @ g1.matrix, atol=1e-12)


@given(elements, elements, elements)
def test_composition_is_associative(a, b, c):
    np.testing.assert_allclose(((a @ b) @ c).matrix, (a @ (b @ c)).matrix, atol=1e-12)


@given(elements)
def test_inverse(g):
    np.testing.assert_allclose((g.inverse() @ g).matrix, np.eye(2), atol=1e-12)
    assert round(np.linalg.det(g.matrix)) == g.det


def test_group_apply_identity_and_central_element():
    M = random_eshelby(11)
    assert group_apply(IDENTITY, M) == M
    np.testing.assert_allclose(group_apply(GroupElement(math.pi), M).array, M.array,
                               rtol=0, atol=1e-15)


def test_rotation_acts_on_EE_with_fourfold_phase():
    # H^4 coordinate turns by 4t: EE1 -> -EE1 at t = pi/4, EE1 -> EE2 at t = pi/8
    np.testing.assert_allclose(loop_act(GroupElement(math.pi / 4).matrix, EE1), -EE1,
                               atol=1e-15)
    np.testing.assert_allclose(loop_act(GroupElement(math.pi / 8).matrix, EE1), EE2,
                               atol=1e-15)
    for t in (math.pi / 8, math.pi / 4, 0.3, 2.1):
        direct = loop_act(GroupElement(t).matrix, EE1)
        formula = math.cos(4 * t) * EE1 + math.sin(4 * t) * EE2
        np.testing.assert_allclose(direct, formula, atol=1e-14)
        np.testing.assert_allclose(act(GroupElement(t), EE1), direct, atol=1e-14)


def test_group_apply_matches_loop_oracle(rng):
    for g in random_elements(rng, 20):
        M = random_eshelby(int(rng.integers(1 << 30)))
        np.testing.assert_allclose(group_apply(g, M).array, loop_act(g.matrix, M.array),
                                   rtol=0, atol=1e-14)


def test_action_properties(rng):
    for _ in range(100):
        g1, g2 = random_elements(rng, 2)
        M = random_eshelby(int(rng.integers(1 << 30)))
        twice = group_apply(g2, group_apply(g1, M))
        np.testing.assert_allclose(twice.array, group_apply(g2 @ g1, M).array,
                                   rtol=0, atol=1e-12)
        assert abs(group_apply(g1, M).norm() - M.norm()) <= 1e-12 * M.norm()
        back = group_apply(g1.inverse(), group_apply(g1, M))
        np.testing.assert_allclose(back.array, M.array, rtol=0, atol=1e-12)
        out = group_apply(g1, M)
        EshelbyTensor(out.array)  # exact minor symmetry


@settings(max_examples=50, deadline=None)
@given(elements, st.integers(0, 2**31))
def test_action_is_linear(g, seed):
    A, B = random_eshelby(seed), random_eshelby(seed + 1)
    lhs = group_apply(g, A + 2.0 * B).array
    rhs = group_apply(g, A).array + 2.0 * group_apply(g, B).array
    np.testing.assert_allclose(lhs, rhs, atol=1e-13)
