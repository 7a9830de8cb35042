import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.polynomial import Polynomial as P

from loopfront.builder import Grid
from loopfront.planar import PlanarWaveMap, planar_eval, planar_stratum

X = P([0, 1])


def pmap(f1, f2, g1, g2):
    return PlanarWaveMap.from_polys(P(f1), P(f2), P(g1), P(g2))


def test_diagonal_singular_set():
    # (x + y, x^2 + y^2) has lambda = 2 (y - x)
    m = pmap([0, 1], [0, 0, 1], [0, 1], [0, 0, 1])
    F = planar_eval(m, Grid.rect(-1, 1, 21))
    Xg, Yg = Grid.rect(-1, 1, 21).mesh()
    assert np.allclose(F.lam, 2 * (Yg - Xg))
    st0 = planar_stratum(m)
    assert st0["singular"] and st0["rank"] == 1 and not st0["critical"]
    assert (st0["lambda_x"], st0["lambda_y"]) == (-2, 2)


def test_null_line_inside_singular_set():
    # f' vanishes at x = 0, so the whole line x = 0 is singular
    m = pmap([0, 0, 1], [0, 0, 0, 1], [0, 1], [0])
    s = planar_stratum(m)
    assert s["null_line_x_in_sigma"] and not s["null_line_y_in_sigma"]


def test_morse_and_non_morse():
    saddle = planar_stratum(pmap([0, 1], [0, 0, 0, 1 / 3], [0, 1], [0, 0, 0, 1 / 3]))
    assert saddle["critical"] and not saddle["morse_fails"] and saddle["hess_det"] == pytest.approx(-4)
    flat = planar_stratum(pmap([0, 1], [0], [0], [0, 0, 0, 1]))
    assert flat["critical"] and flat["morse_fails"]


def test_rank_zero():
    r = planar_stratum(pmap([0, 0, 1], [0], [0], [0, 0, 1]))
    assert r["label"] == "Rank0" and r["finitely_determined"]
    z = planar_stratum(pmap([0, 0, 0, 1], [0], [0], [0, 0, 0, 1]))
    assert z["j2_zero"] and not z["finitely_determined"]


def test_regular_point():
    assert planar_stratum(pmap([0, 1], [0], [0], [0, 1]))["label"] == "Regular"


def test_numeric_derivatives_fallback():
    m = PlanarWaveMap(np.sin, np.cos, lambda y: y, lambda y: y ** 2)
    s = planar_stratum(m, (0.3, 0.2))
    assert s["lambda"] == pytest.approx(np.cos(0.3) * 0.4 + np.sin(0.3), rel=1e-8)


coef = st.lists(st.floats(-2, 2), min_size=4, max_size=4)


@given(coef, coef, coef, coef)
@settings(max_examples=40, deadline=None)
def test_lambda_is_jacobian_determinant(f1, f2, g1, g2):
    m = pmap(f1, f2, g1, g2)
    F = planar_eval(m, Grid.rect(-0.5, 0.5, 7))
    assert np.allclose(np.linalg.det(F.jacobian), F.lam, atol=1e-9)
