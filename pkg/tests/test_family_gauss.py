import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from loopfront.classify import (FamilyJet, swap_xy, classify_gauss_map_jet, classify_jet, family_genericity,
                                monge_taylor_tangent)
from loopfront.classify.gauss import normal_form
from loopfront.errors import OrderTooLow, WrongStratum
from loopfront.jets import JetCoeffs, expand_jet

TWO_FIVE = (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 1)
SHCHERBAK = (1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1)


def test_monge_taylor_of_linear_germ():
    U1, U2, V1, V2 = monge_taylor_tangent(expand_jet(JetCoeffs.from_table([1, 0, 0] + [0] * 9)))
    assert U1.c[2, 0] == -1 and sum(x != 0 for x in U1.c.flat) == 1
    assert all(x == 0 for s in (U2, V1, V2) for x in s.c.flat)


def test_base_strata():
    assert classify_jet(JetCoeffs.from_table(TWO_FIVE)).label == "TwoFiveCuspidalEdge"
    assert classify_jet(JetCoeffs.from_table(SHCHERBAK)).label == "Shcherbak"


def test_two_five_conditions():
    base = JetCoeffs.from_table(TWO_FIVE)
    r = family_genericity(FamilyJet(base, usy=1))
    assert r.value("(a) b22 u_sy - a22 v_sy") == 2
    assert not r.holds("(b) b10 u_sx - a10 v_sx") and not r.generic
    r = family_genericity(FamilyJet(base, usy=1, usx=1))
    assert r.generic and r.side == 1
    assert family_genericity(FamilyJet(base, usy=-1, usx=1)).side == -1


def test_shcherbak_conditions():
    base = JetCoeffs.from_table(SHCHERBAK)
    assert not family_genericity(FamilyJet(base, usy=1)).generic
    r = family_genericity(FamilyJet(base, vsy=1))
    assert r.generic and r.value("b10 u_sy - a10 v_sy") == -1


def test_family_swaps_when_nx_vanishes():
    base = JetCoeffs.from_table(TWO_FIVE)
    sw = swap_xy(base)
    assert sw.a1[0] == 0 and sw.b1[0] == 0
    assert classify_jet(sw).label == "TwoFiveCuspidalEdge"
    a = family_genericity(FamilyJet(base, usx=1, usy=1, vsx=2))
    b = family_genericity(FamilyJet(sw, usx=1, usy=1, vsy=2))
    assert [c.value for c in a.conditions] == [c.value for c in b.conditions]


def test_family_wrong_stratum(example_jets):
    with pytest.raises(WrongStratum):
        family_genericity(FamilyJet(JetCoeffs.from_table(example_jets["Swallowtail"]), usy=1))
    with pytest.raises(ValueError):
        FamilyJet(JetCoeffs.from_table(TWO_FIVE), usx=float("nan"))


# --- Gauss map -----------------------------------------------------------

def sympy_normal_form(c, n=3):
    """g(X, y) with (u, v) ~ (X, g), by direct symbolic inversion of X = u."""
    j = expand_jet(c)
    x, y, X = sp.symbols("x y X")
    poly = lambda s: sum(sp.Rational(s.c[p, q].numerator, s.c[p, q].denominator) * x ** p * y ** q
                         for p in range(n + 1) for q in range(n + 1 - p))
    U, V = poly(j.u), poly(j.v)
    a10 = U.coeff(x, 1).subs(y, 0)
    cut = lambda e: sum(t for t in sp.Add.make_args(sp.expand(e))
                        if sp.Poly(t, X, y).total_degree() <= n)
    xs = X / a10
    for _ in range(n + 1):
        xs = cut(xs + (X - U.subs(x, xs)) / a10)
    return sp.Poly(cut(V.subs(x, xs)), X, y), x, y, X


def rfrac():
    return Fraction(random.randint(-9, 9) or 1, random.randint(1, 5))


@pytest.mark.parametrize("seed", range(6))
def test_normal_form_matches_sympy(seed):
    random.seed(seed)
    c = JetCoeffs.from_table([rfrac() for _ in range(12)])
    P, x, y, X = sympy_normal_form(c)
    j = expand_jet(c)
    g = normal_form(j.u, j.v)
    for p in range(4):
        for q in range(4 - p):
            assert g.c[p, q] == P.coeff_monomial(X ** p * y ** q)


@pytest.mark.parametrize("seed", range(6))
def test_corrected_cubic_coefficients(seed):
    # on the stratum where the 2-jet of g vanishes, the cubic part is
    # l1 = -3 a11 D30, l2 = 3 a11^2 D30, l3 = a10^3 D33 - a11^3 D30 (times a10^-4)
    random.seed(100 + seed)
    a10, a20, a30, a11, a22, a33, b10, b30, b33 = (rfrac() for _ in range(9))
    b11, b20, b22 = a11 * b10 / a10, a20 * b10 / a10, a22 * b10 / a10
    c = JetCoeffs([a10, a20, a30], [a11, a22, a33], [b10, b20, b30], [b11, b22, b33])
    P, x, y, X = sympy_normal_form(c)
    co = lambda i, k: P.coeff_monomial(X ** i * y ** k) * a10 ** 4
    D30, D33 = a10 * b30 - a30 * b10, a10 * b33 - a33 * b10
    l1, l2, l3 = -3 * a11 * D30, 3 * a11 ** 2 * D30, a10 ** 3 * D33 - a11 ** 3 * D30
    assert co(1, 1) == 0 and co(0, 2) == 0
    assert (co(2, 1), co(1, 2), co(0, 3)) == (l1, l2, l3)
    assert l2 ** 2 - 3 * l1 * l3 == 9 * a10 ** 3 * a11 * D30 * D33
    rep = classify_gauss_map_jet(c)
    if l3 != 0:
        assert rep.value("l1") == l1 and rep.value("l2") == l2 and rep.value("l3") == l3


def test_gauss_example_jets(example_jets):
    lab = lambda k: classify_gauss_map_jet(JetCoeffs.from_table(example_jets[k]))
    assert lab("CuspidalEdge").label == "Fold" and lab("Swallowtail").label == "Fold"
    lips, beaks = lab("CuspidalLips"), lab("CuspidalBeaks")
    assert lips.label == "Lips" and (lips.value("l1"), lips.value("l2"), lips.value("l3")) == (3, -3, 2)
    assert lips.value("l2^2-3l1l3") == -9
    assert beaks.label == "Beaks" and beaks.value("l2^2-3l1l3") == 27


@pytest.mark.parametrize("b33,idx", [(2, 3), (-1, 3)])
def test_gauss_cusp_series(b33, idx):
    rep = classify_gauss_map_jet(JetCoeffs.from_table((1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0,
                                                       0, -1, b33, 0)))
    assert rep.label == "CuspSeries" and rep.index == idx


def test_gauss_regular_rank0_and_order():
    assert classify_gauss_map_jet(JetCoeffs.from_table((1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0))).label == "Regular"
    r = classify_gauss_map_jet(JetCoeffs.from_table((0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0)))
    assert r.label == "RankZeroI22"
    z = classify_gauss_map_jet(JetCoeffs.from_table([0] * 12))
    assert z.label == "Excluded" and "not finitely determined" in z.note
    with pytest.raises(OrderTooLow):
        classify_gauss_map_jet(JetCoeffs.from_table([1, 0, 0, 1]))
