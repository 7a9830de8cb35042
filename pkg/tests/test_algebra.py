import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from loopfront.algebra import (BASIS, I2, adjoint_rotate, bracket, cross, e1, e2, e3, exp_su2,
                               inner, rotation_matrix, su2_from_rotation, su2_to_vec, vec_to_su2)
from loopfront.errors import NotInSu2, NotUnitary

vec = arrays(np.float64, 3, elements=st.floats(-10, 10))


def test_basis_orthonormal():
    G = np.array([[inner(a, b) for b in BASIS] for a in BASIS])
    assert np.allclose(G, np.eye(3), atol=1e-15)


def test_brackets_cyclic():
    assert np.allclose(bracket(e1, e2), e3)
    assert np.allclose(bracket(e2, e3), e1)
    assert np.allclose(bracket(e3, e1), e2)


def test_examples():
    assert np.all(vec_to_su2([0, 0, 0]) == 0)
    assert np.allclose(vec_to_su2([0, 0, 1]), 0.5 * np.diag([1j, -1j]))
    assert np.allclose(su2_to_vec(e1), [1, 0, 0])
    assert np.allclose(su2_to_vec(e1 @ e2 - e2 @ e1), [0, 0, 1])
    assert np.allclose(cross([1, 0, 0], [0, 1, 0]), [0, 0, 1])


def test_rotation_about_e1():
    s = 0.7
    F = exp_su2([s, 0, 0])
    assert np.allclose(adjoint_rotate(F, [0, 0, 1]), [0, -np.sin(s), np.cos(s)], atol=1e-14)


def test_rejects_non_su2_and_non_unitary():
    with pytest.raises(NotInSu2):
        su2_to_vec(I2)
    with pytest.raises(NotUnitary):
        adjoint_rotate(2 * I2, [1, 0, 0])


@given(vec)
def test_round_trip(v):
    assert np.allclose(su2_to_vec(vec_to_su2(v)), v, atol=1e-12)


@given(vec, vec)
def test_cross_is_bracket(u, v):
    lhs = vec_to_su2(cross(u, v))
    rhs = bracket(vec_to_su2(u), vec_to_su2(v))
    assert np.allclose(lhs, rhs, atol=1e-9)


@given(vec, vec, vec)
def test_adjoint_is_orientation_preserving_isometry(w, u, v):
    F = exp_su2(w)
    Ru, Rv = adjoint_rotate(F, u), adjoint_rotate(F, v)
    assert np.isclose(Ru @ Rv, u @ v, atol=1e-9)
    assert np.allclose(cross(Ru, Rv), adjoint_rotate(F, cross(u, v)), atol=1e-8)


@given(vec)
def test_rotation_lift(w):
    R = rotation_matrix(exp_su2(w))
    assert np.allclose(rotation_matrix(su2_from_rotation(R)), R, atol=1e-9)
