from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from loopfront.series import Series2, inv_sqrt_taylor, unit_lift, vcross, vdot

rat = st.fractions(min_value=-3, max_value=3, max_denominator=7)


def rand_series(vals, n):
    c = np.empty((n + 1, n + 1), dtype=object)
    c.fill(Fraction(0))
    it = iter(vals)
    for p in range(n + 1):
        for q in range(n + 1 - p):
            c[p, q] = next(it)
    return Series2(c, n, True)


series3 = st.lists(rat, min_size=10, max_size=10).map(lambda v: rand_series(v, 3))
# no constant term, as for the chart functions of a jet
germ3 = st.lists(rat, min_size=9, max_size=9).map(lambda v: rand_series([Fraction(0)] + v, 3))


def test_variables_and_product():
    x, y = Series2.variable("x", 3), Series2.variable("y", 3)
    p = (x + y) * (x - y)
    assert p.c[2, 0] == 1 and p.c[0, 2] == -1 and p.c[1, 1] == 0
    assert (x * x * x * x).c.sum() == 0   # truncated away


@given(series3, series3)
@settings(max_examples=40, deadline=None)
def test_product_matches_evaluation(a, b):
    # degree <= 3 parts of the product agree with the polynomial product
    pts = [(0.1, -0.2), (0.05, 0.07)]
    full = np.polynomial.polynomial.polymul
    for x, y in pts:
        lhs = (a * b)(x, y)
        rhs = sum(float(a.c[i, j]) * float(b.c[k, l]) * x ** (i + k) * y ** (j + l)
                  for i in range(4) for j in range(4 - i) for k in range(4) for l in range(4 - k)
                  if i + j + k + l <= 3)
        assert np.isclose(lhs, rhs, atol=1e-12)


@given(series3)
def test_derivative_and_partial(a):
    assert a.dx().c[0, 0] == a.c[1, 0]
    assert a.partial(2, 1) == 2 * a.c[2, 1]


def test_inv_sqrt_coefficients():
    assert inv_sqrt_taylor(0, 3) == [1, Fraction(-1, 2), Fraction(3, 8), Fraction(-5, 16)]
    fl = inv_sqrt_taylor(0.0, 3, exact=False)
    assert np.allclose(fl, [1, -0.5, 0.375, -0.3125])


@given(germ3, germ3)
@settings(max_examples=30, deadline=None)
def test_unit_lift_has_unit_length(u, v):
    N = unit_lift(u, v)
    n2 = vdot(N, N)
    assert n2.c[0, 0] == 1
    assert all(n2.c[p, q] == 0 for p in range(4) for q in range(4 - p) if p + q > 0)
    # N is parallel to (u, v, 1)
    w = vcross(N, [u, v, Series2.const(1, 3)])
    assert all(x == 0 for s in w for x in s.c.flat)
