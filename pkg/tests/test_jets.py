from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loopfront.jets import (JetCoeffs, PolyCauchyData, expand_jet, jet_eval, jet_to_poly_cauchy,
                            poly_cauchy_to_jet)
from loopfront.series import unit_lift, vcross

rat = st.fractions(min_value=-5, max_value=5, max_denominator=9)


def jets(n):
    return st.lists(rat, min_size=4 * n, max_size=4 * n).map(lambda r: JetCoeffs.from_table(r))


def mixed3(a10, a11, b10, b11):
    """Printed degree-3 mixed coefficients (x y^2 and x^2 y) of u."""
    return (a10 * a11 ** 2 + Fraction(1, 2) * a10 * b11 ** 2 + Fraction(1, 2) * a11 * b10 * b11,
            a10 ** 2 * a11 + Fraction(1, 2) * a10 * b10 * b11 + Fraction(1, 2) * a11 * b10 ** 2)


def test_from_table_layout():
    c = JetCoeffs.from_table([1, 2, 3, 4, 5, 6, 7, 8])
    assert (c.a1, c.a2, c.b1, c.b2) == ((1, 2), (3, 4), (5, 6), (7, 8))
    assert c.get("b", (2, 2)) == 8 and c.get("a", (5, 0)) == 0
    with pytest.raises(ValueError):
        JetCoeffs.from_table([1, 2, 3])
    with pytest.raises(KeyError):
        c.get("a", (2, 1))


def test_padding():
    c = JetCoeffs.from_table([1, 1, 1, 1]).padded(3)
    assert c.order == 3 and c.a1 == (1, 0, 0)
    assert c.padded(1).a1 == (1,)


def test_degree_two_mixed_vanish():
    j = expand_jet(JetCoeffs.from_table([1, 2, 3, 4, 5, 6, 7, 8]))
    assert j.a(2, 1) == 0 and j.b(2, 1) == 0


@given(jets(3))
@settings(max_examples=60, deadline=None)
def test_printed_mixed_coefficients(c):
    j = expand_jet(c)
    a10, a11, b10, b11 = c.a1[0], c.a2[0], c.b1[0], c.b2[0]
    assert (j.a(3, 2), j.a(3, 1)) == mixed3(a10, a11, b10, b11)
    assert (j.b(3, 2), j.b(3, 1)) == mixed3(b10, b11, a10, a11)


@given(jets(4))
@settings(max_examples=25, deadline=None)
def test_wave_equation_holds_to_order(c):
    # N x N_xy vanishes through degree n - 2
    j = expand_jet(c)
    N = unit_lift(j.u, j.v)
    r = vcross(N, [s.dx().dy() for s in N])
    n = j.order - 2
    assert all(s.c[p, q] == 0 for s in r for p in range(n + 1) for q in range(n + 1 - p))


@given(st.integers(1, 6).flatmap(jets))
@settings(max_examples=40, deadline=None)
def test_psi_round_trip(c):
    d = jet_to_poly_cauchy(c)
    assert poly_cauchy_to_jet(d) == c


@given(st.integers(1, 5).flatmap(lambda n: st.lists(rat, min_size=4 * n, max_size=4 * n)))
@settings(max_examples=30, deadline=None)
def test_psi_inverse_round_trip(vals):
    n = len(vals) // 4
    d = PolyCauchyData(*(tuple(vals[i * n:(i + 1) * n]) for i in range(4)))
    assert jet_to_poly_cauchy(poly_cauchy_to_jet(d)) == d


def test_float_mode_matches_exact():
    row = [1, 0.5, -0.25, 1, 2, 0.125, 1, 0, 0.5, 1, 1, -1]
    je, jf = expand_jet(JetCoeffs.from_table(row)), expand_jet(JetCoeffs.from_table(row, exact=False))
    assert np.allclose(je.u.c.astype(float), jf.u.c, atol=1e-14)


def test_jet_eval_normal_at_origin():
    j = expand_jet(JetCoeffs.from_table([1, 0, 1, 0, 0, 0, 2, 0]))
    N, parts = jet_eval(j)
    assert np.allclose(N, [0, 0, 1])
    # u = x + y, v = 2y
    assert np.allclose(parts[(1, 0)], [1, 0, 0]) and np.allclose(parts[(0, 1)], [1, 2, 0])
