"""Strata of the Gauss map N itself, viewed as a map germ of the plane.

With a10 != 0 the germ is A-equivalent to (X, g(X, y)) where X = u.  The
normal form g is obtained here by exact series inversion of X = u(x, y),
so the 2-jet and 3-jet coefficients of g are computed rather than copied.
The closed forms in a10, a11, ... are reported alongside as info.
"""
from ..errors import OrderTooLow
from ..jets import JetCoeffs, expand_jet
from ..series import Series2
from .jet import _det, coefficients, lambda_series, rotate_jet, swap_xy
from .report import Checker, Condition

GAUSS_LABELS = ("Regular", "Fold", "CuspSeries", "Lips", "Beaks", "RankZeroI22",
                "Excluded", "Deeper")


class GaussReport:
    def __init__(self, label, conditions, note="", index=None):
        if label not in GAUSS_LABELS:
            raise ValueError(label)
        self.label, self.conditions, self.note, self.index = label, conditions, note, index

    def value(self, cid):
        for c in self.conditions:
            if c.id == cid:
                return c.value
        raise KeyError(cid)

    def to_dict(self):
        out = {"label": self.label, "method": "jet",
               "conditions": [c.as_dict() for c in self.conditions]}
        if self.index is not None:
            out["series_index"] = self.index
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self):
        return f"GaussReport({self.label!r}, index={self.index})"


def _compose_x(s: Series2, phi: Series2):
    """s(phi(X, y), y) for phi without constant term."""
    n = min(s.order, phi.order)
    out = Series2.const(0, n, s.exact)
    pw = Series2.const(1, n, s.exact)
    for p in range(n + 1):
        row = s.c[p].copy()
        row[n + 1 - p:] = 0
        coeff = Series2.const(0, n, s.exact)
        coeff.c[0, :n + 1 - p] = row[:n + 1 - p]
        out = out + coeff * pw
        pw = pw * phi
    return out


def normal_form(u: Series2, v: Series2):
    """g(X, y) with (u, v) ~ (X, g); requires u_x(0) != 0."""
    n = u.order
    a10 = u.c[1, 0]
    X = Series2.variable("x", n, u.exact)
    phi = X * (1 / a10) if u.exact else X * (1.0 / a10)
    for _ in range(n + 1):
        phi = phi + (X - _compose_x(u, phi)) * ((1 / a10) if u.exact else 1.0 / a10)
    return _compose_x(v, phi)


def classify_gauss_map_jet(c: JetCoeffs):
    """Coarse A-stratum of N from a jet of order at least 3."""
    if c.order < 3:
        raise OrderTooLow("the Gauss-map strata need a jet of order 3")
    chk = Checker(exact=c.exact)
    notes = []
    q = coefficients(c, 3)
    sc = max(abs(float(x)) for x in q.values()) or 1.0
    rank0 = all(chk.zero(k, q[k], sc) for k in ("a10", "a11", "b10", "b11"))
    if rank0:
        d = q["a20"] * q["b22"] - q["a22"] * q["b20"]
        z = chk.zero("a20b22-a22b20", d, sc ** 2)
        if z is False:
            return GaussReport("RankZeroI22", chk.conditions, "2-jet equivalent to (x^2, y^2)")
        j2zero = all(q[k] == 0 for k in ("a20", "a22", "b20", "b22"))
        note = ("zero 2-jet: not finitely determined" if j2zero
                else "rank 0 with degenerate 2-jet; the I22^l family is not representable")
        return GaussReport("Excluded", chk.conditions, note)
    chk.conditions.clear()

    if q["a10"] == 0 and q["b10"] == 0:
        c = swap_xy(c)
        notes.append("x and y exchanged")
    if coefficients(c, 1)["a10"] == 0:
        c = rotate_jet(c)
        notes.append("chart rotated by (3/5, 4/5)")
    q = coefficients(c, 3)
    a10, a11 = q["a10"], q["a11"]
    s0 = a10 * q["b11"] - a11 * q["b10"]
    if chk.zero("a10b11-a11b10", s0, sc ** 2) is False:
        return GaussReport("Regular", chk.conditions, "; ".join(notes))

    j = expand_jet(c)
    g = normal_form(j.u, j.v)
    D20, D22, D30, D33 = (_det(q, "10", k) for k in ("20", "22", "30", "33"))
    chk.info("y^2 closed form", (D20 * a11 ** 2 + D22 * a10 ** 2) / a10 ** 3)
    chk.info("xy closed form", 2 * a11 * D20 / a10 ** 3)
    y2 = chk.zero("y^2 coefficient", g.c[0, 2], sc ** 3)
    if y2 is False:
        return GaussReport("Fold", chk.conditions, "; ".join(notes))
    xy = chk.zero("xy coefficient", g.c[1, 1], sc ** 3)
    if xy is False:
        idx = _cusp_index(j, chk, sc)
        return GaussReport("CuspSeries" if idx else "Deeper", chk.conditions,
                           "; ".join(notes + ([f"(x, xy + y^{idx})"] if idx else
                                              ["series index beyond the jet order"])), idx)
    if y2 is None or xy is None:
        return GaussReport("Deeper", chk.conditions, "undecided 2-jet")
    scale4 = a10 ** 4
    l1, l2, l3 = (g.c[2, 1] * scale4, g.c[1, 2] * scale4, g.c[0, 3] * scale4)
    chk.info("l1", l1)
    chk.info("l2", l2)
    chk.info("a10b30-a30b10", D30)
    chk.info("a10b33-a33b10", D33)
    z3 = chk.zero("l3", l3, sc ** 7)
    if z3 is False:
        s = chk.sign("l2^2-3l1l3", l2 * l2 - 3 * l1 * l3, sc ** 14)
        if s == -1:
            return GaussReport("Lips", chk.conditions, "; ".join(notes))
        if s == 1:
            return GaussReport("Beaks", chk.conditions, "; ".join(notes))
        return GaussReport("Deeper", chk.conditions, "; ".join(notes + ["3-jet (x, y^3)"]))
    if chk.zero("l2", l2, sc ** 7) is False:
        return GaussReport("Deeper", chk.conditions, "; ".join(notes + ["3-jet (x, xy^2)"]))
    if chk.zero("l1", l1, sc ** 7) is False:
        return GaussReport("Excluded", chk.conditions, "3-jet (x, x^2 y) is not representable")
    return GaussReport("Deeper", chk.conditions, "; ".join(notes + ["3-jet (x, 0)"]))


def _cusp_index(j, chk, sc):
    """k with N ~ (x, xy + y^k + ...), from the order of lambda along ker du."""
    u, v = j.u, j.v
    lam, _ = lambda_series(u, v)
    k1, k2 = -u.dy(), u.dx()
    h = lam
    for i in range(1, j.order):
        h = k1 * h.dx() + k2 * h.dy()
        z = chk.zero(f"kappa^{i} lambda", h.value, sc ** (i + 2))
        if z is False:
            return i + 1
        if z is None:
            return None
    return None
