"""Classification from (a, b, c) data along the diagonal x = y.

The diagonal values only fix one-variable functions; the two-variable
Taylor expansions of a, b, c about (t0, t0) follow from the compatibility
relations a_x = b c, b_x = -a c, c_y = A a and A_y = 0.  On that
expansion sigma = -A a and the null field is eta = b d/dx - A d/dy, so the
general criteria apply directly, with no reparametrization to b = -1.
"""
from fractions import Fraction
from math import comb

import numpy as np
from numpy.polynomial import Polynomial

from ..cauchy import FD_STEP, AbcData, central_diff
from ..errors import DegenerateData, NotOnCurve
from ..series import Series2
from .report import Checker

TAYLOR_ORDER = 3


def _poly_taylor(p, t0, n):
    """Exact Taylor coefficients of a numpy Polynomial about t0."""
    coef = [Fraction(float(x)) for x in p.convert().coef]
    return [sum(cj * comb(j, k) * t0 ** (j - k) for j, cj in enumerate(coef) if j >= k)
            for k in range(n + 1)]


def _fd_taylor(fn, t0, n, h=FD_STEP):
    g = lambda t: float(np.asarray(fn(t)))
    out = [g(t0)]
    fact = 1
    for k in range(1, n + 1):
        fact *= k
        out.append(float(central_diff(g, t0, h, k)) / fact)
    return out


def diagonal_taylor(d: AbcData, t0, n=TAYLOR_ORDER):
    """Taylor coefficients of a, b, c, A about t0 and whether they are exact."""
    fns = (d.a, d.b, d.c, d.A)
    if all(isinstance(f, Polynomial) for f in fns):
        t = Fraction(float(t0))
        return [_poly_taylor(f, t, n) for f in fns], True
    return [_fd_taylor(f, float(t0), n) for f in fns], False


def _zeros(n, exact):
    return Series2.const(0, n, exact).c.copy()


def abc_series(taylors, n, exact):
    """Two-variable Taylor series of a, b, c, A in (x - t0, y - t0)."""
    ta, tb, tc, tA = taylors
    al, be, ga, AA = (_zeros(n, exact) for _ in range(4))
    for i in range(n + 1):
        AA[i, 0] = tA[i]
    Ac = Series2(AA, n, exact)
    for m in range(n + 1):
        if m:
            a, b, c = (Series2(x, n, exact) for x in (al, be, ga))
            bc, ac, Aa = (b * c).c, (a * c).c, (Ac * a).c
            for i in range(1, m + 1):
                al[i, m - i] = bc[i - 1, m - i] / i
                be[i, m - i] = -ac[i - 1, m - i] / i
            for j in range(1, m + 1):
                ga[m - j, j] = Aa[m - j, j - 1] / j
        al[0, m] = ta[m] - sum(al[i, m - i] for i in range(1, m + 1))
        be[0, m] = tb[m] - sum(be[i, m - i] for i in range(1, m + 1))
        ga[m, 0] = tc[m] - sum(ga[m - j, j] for j in range(1, m + 1))
    return tuple(Series2(x, n, exact) for x in (al, be, ga)) + (Ac,)


def _grad(s):
    return s.dx().value, s.dy().value


def classify_abc(d: AbcData, t0):
    """Report for the point (t0, t0) of the surface generated by ``d``."""
    lo, hi = d.interval
    if not (lo <= t0 <= hi):
        raise NotOnCurve(f"t0 = {t0} lies outside the interval [{lo}, {hi}]")
    taylors, exact = diagonal_taylor(d, t0)
    a, b, c, A = abc_series(taylors, TAYLOR_ORDER, exact)
    if A.value == 0 or (not exact and abs(A.value) < 1e-12):
        raise DegenerateData("A vanishes at t0")
    M = max(1.0, max(abs(float(x)) for tl in taylors for x in tl))
    sc = lambda k: M ** k
    chk = Checker(exact)
    ta, tb, tc = taylors[:3]
    for name, v in (("a'", ta[1]), ("a''", 2 * ta[2]), ("a'''", 6 * ta[3]), ("c", tc[0])):
        chk.info(name, v)
    za = chk.zero("a", a.value, sc(1))
    zb = chk.zero("b", b.value, sc(1))
    if za is None or zb is None:
        return chk.report("Unresolved", "abc", point=(t0, t0))
    if not za:
        return chk.report("Regular", "abc", point=(t0, t0))
    if zb:
        return _non_wave_front(chk, a, b, c, taylors, sc, t0)

    eta = lambda g: b * g.dx() - A * g.dy()
    ax, ay = _grad(a)
    rx = chk.zero("a_x", ax, sc(2))
    ry = chk.zero("a_y", ay, sc(2))
    if rx is None or ry is None:
        return chk.report("Unresolved", "abc", point=(t0, t0))
    if not (rx and ry):
        ea = eta(a)
        z1 = chk.zero("eta a", ea.value, sc(2))
        if z1 is False:
            return chk.report("CuspidalEdge", "abc", point=(t0, t0))
        eea = eta(ea)
        z2 = chk.zero("eta^2 a", eea.value, sc(3)) if z1 else None
        if z1 and z2 is False:
            return chk.report("Swallowtail", "abc", point=(t0, t0))
        if z1 and z2:
            z3 = chk.zero("eta^3 a", eta(eea).value, sc(4))
            if z3 is False:
                return chk.report("CuspidalButterfly", "abc", point=(t0, t0))
        return chk.report("Unresolved", "abc", point=(t0, t0))

    axx, axy, ayy = 2 * a.c[2, 0], a.c[1, 1], 2 * a.c[0, 2]
    chk.info("c'(a''+c')", tc[1] * (2 * ta[2] + tc[1]))
    # relative to the entries, so large unrelated Taylor terms do not swamp it
    hs = max(abs(float(v)) for v in (axx, axy, ayy)) ** 2 or 1.0
    s = chk.sign("det Hess a", axx * ayy - axy * axy, hs)
    if s is None or s == 0:
        return chk.report("Unresolved", "abc", "singular set is not Morse", (t0, t0))
    if s > 0:
        return chk.report("CuspidalLips", "abc", point=(t0, t0))
    z = chk.zero("eta^2 a", eta(eta(a)).value, sc(3))
    if z is False:
        return chk.report("CuspidalBeaks", "abc", point=(t0, t0))
    return chk.report("Unresolved", "abc", point=(t0, t0))


def _non_wave_front(chk, a, b, c, taylors, sc, t0):
    ta, tb, tc = taylors[:3]
    d1a, d2a, d1b, d2b = ta[1], 2 * ta[2], tb[1], 2 * tb[2]
    chk.info("a'b''-b'a''+2c(a'^2+b'^2)",
             d1a * d2b - d1b * d2a + 2 * tc[0] * (d1a ** 2 + d1b ** 2))
    ay = a.dy().value
    r = chk.zero("a_y", ay, sc(2))
    if r is None:
        return chk.report("Unresolved", "abc", point=(t0, t0))
    if not r:
        ayy, byy, by = 2 * a.c[0, 2], 2 * b.c[0, 2], b.dy().value
        ds = (max(abs(float(ay)), abs(float(by))) * max(abs(float(ayy)), abs(float(byy)))) or 1.0
        z = chk.zero("a_y b_yy - b_y a_yy", ay * byy - by * ayy, ds)
        if z is False:
            return chk.report("TwoFiveCuspidalEdge", "abc", point=(t0, t0))
        return chk.report("Unresolved", "abc", point=(t0, t0))
    axy, ayy = a.c[1, 1], 2 * a.c[0, 2]
    z1 = chk.zero("b'c", axy, sc(2))
    z2 = chk.zero("a''-2b'c", ayy, sc(2))
    if z1 is False and z2 is False:
        return chk.report("Shcherbak", "abc", point=(t0, t0))
    note = "singular set is not Morse" if z1 is not False else "both branches null"
    return chk.report("Unresolved", "abc", note, (t0, t0))
