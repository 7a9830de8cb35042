import numpy as np
import pytest
from numpy.polynomial import Polynomial as P

from loopfront.algebra import adjoint_rotate, e1, e2, e3
from loopfront.cauchy import (AbcData, GeometricCauchyData, abc_to_potential, central_diff,
                              geometric_to_abc, jet_abc, jet_to_potential)
from loopfront.errors import DegenerateData, ZeroTransverseDerivative
from loopfront.jets import JetCoeffs, expand_jet
from loopfront.series import unit_lift


def vacuum_geometric():
    N0 = lambda t: np.array([0.0, -np.sin(2 * t), np.cos(2 * t)])
    V = lambda t: np.array([0.0, -np.cos(2 * t), -np.sin(2 * t)])
    return GeometricCauchyData(N0, V)


def test_central_diff_orders():
    for k, want in ((1, np.cos(0.3)), (2, -np.sin(0.3)), (3, -np.cos(0.3))):
        assert np.isclose(central_diff(np.sin, 0.3, 1e-2, k), want, atol=1e-4)
    with pytest.raises(ValueError):
        central_diff(np.sin, 0.0, 1e-2, 5)


def test_geometric_to_abc_vacuum():
    d = geometric_to_abc(vacuum_geometric())
    for t in (-0.7, 0.0, 0.4):
        a, b, c, A = d.values(t)
        assert np.allclose([a, b, c, A], [0, -1, 0, 1], atol=1e-7)


def test_geometric_rejects_bad_data():
    g = vacuum_geometric()
    with pytest.raises(DegenerateData):
        geometric_to_abc(GeometricCauchyData(lambda t: 2 * g.N0(t), g.V))
    with pytest.raises(ZeroTransverseDerivative):
        geometric_to_abc(GeometricCauchyData(g.N0, lambda t: np.zeros(3))).a(0.0)


def test_abc_defaults_and_potential():
    d = AbcData(P([0]), P([-1]), P([0]))
    assert d.values(0.3) == (0.0, -1.0, 0.0, 1.0)
    p = abc_to_potential(d, 0.25)
    assert p.base == (0.25, 0.25)
    c = p.chi.coefficients(0.1)
    assert np.allclose(c[0], e1) and np.allclose(c[1], 0) and np.allclose(c[2], e1)


def test_jet_abc_speed_is_normal_derivative():
    c = JetCoeffs.from_table([3, 0, 0, 1, 0, 0, 4, 0, 0, 1, 0, 0])
    d = jet_abc(c, interval=(-0.2, 0.2))
    assert np.isclose(d.A(0.0), 5.0)


def test_jet_potential_initial_frame():
    c = JetCoeffs.from_table([1, 1, 0, 1, 2, 0, 1, 0, 0, 1, 1, 0])
    p = jet_to_potential(c)
    N = unit_lift(*(lambda j: (j.u, j.v))(expand_jet(c)))
    assert np.allclose(adjoint_rotate(p.initial_frame, [0, 0, 1]), [float(s.value) for s in N])


def test_jet_potential_rejects_vanishing_b():
    # u = x, v = 0 has N_x = N_x + N_y on the diagonal, so b = 0
    with pytest.raises(DegenerateData):
        jet_to_potential(JetCoeffs.from_table([1, 0, 0, 0]))


def test_c_matches_quotient_formula():
    # the b-free expression used for c agrees with the quotient form wherever b != 0
    def N0(t):
        v = np.array([np.sin(t) + 0.3, np.cos(2 * t), 1 + 0.2 * t * t])
        return v / np.linalg.norm(v)

    def V(t):
        w = np.array([1 + t, 0.5 * t * t - 0.2, np.sin(3 * t)])
        n = N0(t)
        return w - np.dot(w, n) * n

    d = geometric_to_abc(GeometricCauchyData(N0, V))
    speed = lambda s: np.linalg.norm(V(s))
    for t in (-0.3, 0.1, 0.5):
        n, v = N0(t), V(t)
        dn, dv = central_diff(N0, t), central_diff(V, t)
        A, dA = speed(t), central_diff(speed, t)
        cq = (np.dot(dn - v, np.cross(n, dv)) - np.dot(dn, np.cross(n, v)) * dA / A) / np.dot(v - dn, v)
        assert np.isclose(d.c(t), cq, rtol=1e-9)
