"""Monge-Taylor tangent vectors and transversality of one-parameter families.

A family u^s, v^s enters only through the mixed s-derivatives of u and v at
the origin.  The checks below are linear in those derivatives, with
coefficients read off the base jet.
"""
from dataclasses import dataclass, field

import numpy as np

from ..errors import WrongStratum
from ..jets import BivariateJet, JetCoeffs
from ..series import Series2
from .jet import classify_jet, coefficients, swap_xy
from .report import Checker


def _pad(s: Series2, n):
    return Series2(s.c, n, s.exact)


def monge_taylor_tangent(j: BivariateJet):
    """(U1, U2, V1, V2): x- and y-derivatives of the Monge-Taylor map at the origin.

    Each is a polynomial truncated at the jet order, e.g.
    U1 = u_x - u_x(0) - (u_x(0) u + v_x(0) v) u.
    """
    n = j.order
    u, v = j.u, j.v
    out = {}
    for d, tag in (("dx", "1"), ("dy", "2")):
        ud, vd = _pad(getattr(u, d)(), n), _pad(getattr(v, d)(), n)
        u0, v0 = ud.value, vd.value
        w = u * u0 + v * v0
        out["U" + tag] = ud - u0 - w * u
        out["V" + tag] = vd - v0 - w * v
    return out["U1"], out["U2"], out["V1"], out["V2"]


@dataclass
class FamilyJet:
    """Base jet plus the mixed s-derivatives of u^s, v^s at the origin.

    ``higher`` may carry further derivatives; it is stored, not used.
    """

    base: JetCoeffs
    usx: object = 0
    usy: object = 0
    vsx: object = 0
    vsy: object = 0
    higher: dict = field(default_factory=dict)

    def __post_init__(self):
        for k in ("usx", "usy", "vsx", "vsy"):
            if not np.isfinite(float(getattr(self, k))):
                raise ValueError(f"{k} is not finite")

    def swapped(self):
        return FamilyJet(swap_xy(self.base), self.usy, self.usx, self.vsy, self.vsx, self.higher)


@dataclass
class GenericityReport:
    stratum: str
    conditions: list
    generic: bool
    side: int = 0      # sign of the double-point condition for 2/5 edges

    def value(self, cid):
        for c in self.conditions:
            if c.id == cid:
                return c.value
        raise KeyError(cid)

    def holds(self, cid):
        for c in self.conditions:
            if c.id == cid:
                return c.verdict in ("nonzero", "positive", "negative")
        raise KeyError(cid)

    def to_dict(self):
        return {"stratum": self.stratum, "generic": self.generic, "side": self.side,
                "conditions": [c.as_dict() for c in self.conditions]}


def family_genericity(fj: FamilyJet):
    """Transversality of a family through a 2/5 edge or a Shcherbak point.

    The base jet must classify as TwoFiveCuspidalEdge or Shcherbak; any other
    label raises WrongStratum.  Jets with N_x = 0 are handled by exchanging
    x and y, which also exchanges the s-derivatives.
    """
    rep = classify_jet(fj.base)
    if rep.label not in ("TwoFiveCuspidalEdge", "Shcherbak"):
        raise WrongStratum(f"base jet is {rep.label}, not a non-wave-front codimension-1 point")
    q = coefficients(fj.base.padded(max(3, fj.base.order)), 3)
    if q["a10"] == 0 and q["b10"] == 0:
        fj = fj.swapped()
        q = coefficients(fj.base.padded(max(3, fj.base.order)), 3)
    exact = fj.base.exact
    chk = Checker(exact=exact)
    usx, usy, vsx, vsy = fj.usx, fj.usy, fj.vsx, fj.vsy
    a10, b10, a22, b22 = q["a10"], q["b10"], q["a22"], q["b22"]
    sc = max(abs(float(x)) for x in (a10, b10, a22, b22, usx, usy, vsx, vsy, 1e-300)) ** 2
    if rep.label == "TwoFiveCuspidalEdge":
        za = chk.zero("(a) b22 u_sy - a22 v_sy", b22 * usy - a22 * vsy, sc)
        zb = chk.zero("(b) b10 u_sx - a10 v_sx", b10 * usx - a10 * vsx, sc)
        dp = b10 * b22 * usy + (2 * a22 * b10 - 3 * a10 * b22) * vsy
        side = chk.sign("double point b10b22 u_sy + (2a22b10-3a10b22) v_sy", dp, sc * max(sc, 1.0) ** 0.5)
        return GenericityReport("TwoFiveCuspidalEdge", chk.conditions,
                                za is False and zb is False and bool(side), int(side or 0))
    zt = chk.zero("b10 u_sy - a10 v_sy", b10 * usy - a10 * vsy, sc)
    m1 = q["a22"] * (a10 * q["b20"] - q["a20"] * b10)
    m2 = a10 * q["b33"] - q["a33"] * b10
    z1 = chk.zero("a22(a10b20-a20b10)", m1, sc)
    z2 = chk.zero("a10b33-a33b10", m2, sc)
    return GenericityReport("Shcherbak", chk.conditions,
                            zt is False and z1 is False and z2 is False)
