"""Exact classification of a singular point from the free jet coefficients.

Everything here runs in rational arithmetic when the jet is exact.  The
function whose zero set is the singular set is taken as the Jacobian
lambda = u_x v_y - u_y v_x of the chart map; it differs from
det(f_x, f_y, N) by the positive factor delta^3 and a sign, so every
criterion phrased through vanishing orders of its eta-derivatives is the
same.  The null field is extended off the singular set as
eta = <w_x, w_y> d/dx + |w_x|^2 d/dy with w = (u, v).
"""
from fractions import Fraction

from ..errors import OrderTooLow
from ..jets import JetCoeffs, expand_jet
from .report import Checker

# Pythagorean rotation used to move the chart off a coordinate axis
_ROT = (Fraction(3, 5), Fraction(4, 5))


def rotate_jet(c: JetCoeffs, cs=_ROT):
    """Rotate the (u, v) chart: (u, v) -> (c u - s v, s u + c v).

    Rotations about the pole act on the chart linearly and commute with the
    wave-map system, so this maps jets to jets.
    """
    co, si = cs if c.exact else (float(cs[0]), float(cs[1]))
    rot = lambda a, b: ([co * x - si * y for x, y in zip(a, b)],
                        [si * x + co * y for x, y in zip(a, b)])
    a1, b1 = rot(c.a1, c.b1)
    a2, b2 = rot(c.a2, c.b2)
    return JetCoeffs(a1, a2, b1, b2, exact=c.exact)


def swap_xy(c: JetCoeffs):
    """Exchange the null coordinates x and y."""
    return JetCoeffs(c.a2, c.a1, c.b2, c.b1, exact=c.exact)


def coefficients(c: JetCoeffs, n=3):
    """Dict a10, a20, ..., b33 (zero beyond the order)."""
    out = {}
    for name in ("a", "b"):
        for k in range(1, n + 1):
            out[f"{name}{k}0"] = c.get(name, (k, 0))
            out[f"{name}{k}{k}"] = c.get(name, (k, k))
    return out


def lambda_series(u, v):
    ux, uy, vx, vy = u.dx(), u.dy(), v.dx(), v.dy()
    lam = ux * vy - uy * vx
    eta = (ux * uy + vx * vy, ux * ux + vx * vx)
    return lam, eta


def eta_derivatives(c: JetCoeffs, k=3):
    """[lambda, eta lambda, ..., eta^k lambda] at the origin, from the expanded jet."""
    if c.order < k + 1:
        raise OrderTooLow(f"eta^{k} lambda needs a jet of order {k + 1}")
    j = expand_jet(c.padded(k + 1))
    lam, (e1, e2) = lambda_series(j.u, j.v)
    vals, g = [lam.value], lam
    for _ in range(k):
        g = e1 * g.dx() + e2 * g.dy()
        vals.append(g.value)
    return vals


def cusp_condition(q):
    return q["b11"] * (q["a20"] * q["b11"] - q["a11"] * q["b20"]) + \
        q["b10"] * (q["a10"] * q["b22"] - q["a22"] * q["b10"])


def swallowtail_cubic(q):
    a10, a20, a30, a11, a22, a33 = (q[k] for k in ("a10", "a20", "a30", "a11", "a22", "a33"))
    b10, b20, b30, b11, b22, b33 = (q[k] for k in ("b10", "b20", "b30", "b11", "b22", "b33"))
    return (6 * b33 * a10 * b10 ** 2 - 6 * b30 * a11 * b11 ** 2 - 6 * a33 * b10 ** 3
            + 6 * a30 * b11 ** 3 + 4 * b20 * b22 * a10 * b11 - 4 * b20 * b22 * a11 * b10
            + 12 * a20 * b22 * b10 * b11 - 12 * a22 * b20 * b10 * b11
            + a10 ** 3 * b11 ** 3 + 3 * a10 ** 2 * a11 * b10 * b11 ** 2
            - 3 * a10 * a11 ** 2 * b10 ** 2 * b11 + 6 * a10 * b10 ** 2 * b11 ** 3
            - a11 ** 3 * b10 ** 3 - 6 * a11 * b10 ** 3 * b11 ** 2)


def _det(q, i, j):
    """a_i b_j - a_j b_i for coefficient names like '10', '33'."""
    return q["a" + i] * q["b" + j] - q["a" + j] * q["b" + i]


class _Ctx:
    def __init__(self, c, strict):
        self.c, self.strict = c, strict
        self.notes = []

    def need(self, n, what):
        if self.c.order >= n:
            return
        if self.strict:
            raise OrderTooLow(f"{what} needs a jet of order {n}, got {self.c.order}")
        self.notes.append(f"zero-padded from order {self.c.order} to {n} for {what}")
        self.c = self.c.padded(n)


def _scale(q, degree):
    m = max((abs(float(v)) for v in q.values()), default=1.0)
    return max(m, 1e-300) ** degree


def classify_jet(c: JetCoeffs, strict=False):
    """Singularity of the pseudospherical front at the origin from its jet.

    With ``strict`` a branch that needs more coefficients than supplied
    raises OrderTooLow; otherwise the missing free coefficients are taken
    as zero and a note says so.
    """
    ctx = _Ctx(c, strict)
    chk = Checker(exact=c.exact)
    q = coefficients(ctx.c.padded(max(3, ctx.c.order)), 3)
    sc = lambda d: _scale(q, d)

    nx2 = q["a10"] ** 2 + q["b10"] ** 2
    ny2 = q["a11"] ** 2 + q["b11"] ** 2
    if all(chk.zero(k, q[k], sc(1)) for k in ("a10", "a11", "b10", "b11")):
        return chk.report("Rank0", "jet", "rank 0: codimension at least 2")
    chk.conditions.clear()
    zx = chk.zero("|N_x|^2", nx2, sc(2))
    zy = chk.zero("|N_y|^2", ny2, sc(2))
    if zx is None or zy is None:
        return chk.report("Unresolved", "jet", "wave-front test undecided")
    if zx or zy:
        return _non_wave_front(ctx, chk, swap=zx)

    s0 = q["b11"] * q["a10"] - q["b10"] * q["a11"]
    singular = chk.zero("b11a10-b10a11", s0, sc(2))
    if singular is None:
        return chk.report("Unresolved", "jet")
    if not singular:
        return chk.report("Regular", "jet")

    # the printed conditions assume a10 and b10 both nonzero
    if q["a10"] == 0 or q["b10"] == 0:
        ctx.c = rotate_jet(ctx.c)
        q = coefficients(ctx.c.padded(max(3, ctx.c.order)), 3)
        ctx.notes.append("chart rotated by (3/5, 4/5) so that a10, b10 != 0")
    ctx.need(2, "singular-set regularity")
    sx = q["a20"] * q["b11"] - q["a11"] * q["b20"]
    sy = _det(q, "10", "22")
    rx = chk.zero("a20b11-a11b20", sx, sc(2))
    ry = chk.zero("a10b22-a22b10", sy, sc(2))
    if rx is None or ry is None:
        return chk.report("Unresolved", "jet", "; ".join(ctx.notes))
    if not (rx and ry):
        return _regular_sigma(ctx, chk, q, sc)
    return _singular_sigma(ctx, chk, sc)


def _regular_sigma(ctx, chk, q, sc):
    E = cusp_condition(q)
    z = chk.zero("cusp", E, sc(3))
    note = lambda: "; ".join(ctx.notes)
    if z is None:
        return chk.report("Unresolved", "jet", note())
    if not z:
        return chk.report("CuspidalEdge", "jet", note())
    ctx.need(3, "the swallowtail test")
    q = coefficients(ctx.c, 3)
    C = swallowtail_cubic(q)
    z = chk.zero("swallowtail cubic", C, sc(6))
    if z is None:
        return chk.report("Unresolved", "jet", note())
    if not z:
        return chk.report("Swallowtail", "jet", note())
    ctx.need(4, "the butterfly test")
    vals = eta_derivatives(ctx.c, 3)
    chk.info("eta lambda", vals[1])
    chk.info("eta^2 lambda", vals[2])
    z = chk.zero("eta^3 lambda", vals[3], sc(8))
    if z is False:
        return chk.report("CuspidalButterfly", "jet", note())
    return chk.report("Unresolved", "jet", "; ".join(ctx.notes + ["eta^3 lambda vanishes"]))


def _singular_sigma(ctx, chk, sc):
    ctx.need(3, "the Morse test")
    q = coefficients(ctx.c, 3)
    note = lambda extra=(): "; ".join(ctx.notes + list(extra))
    D30, D33 = _det(q, "10", "30"), _det(q, "10", "33")
    P = -3 * q["a11"] * D30 / q["a10"]
    Q = 3 * D33
    chk.info("a10b30-a30b10", D30)
    chk.info("a10b33-a33b10", D33)
    chk.info("x^2 coefficient", P)
    chk.info("y^2 coefficient", Q)
    s = chk.sign("Morse discriminant", P * Q, sc(4))
    if s is None or s == 0:
        return chk.report("Unresolved", "jet", note(["singular set is not Morse"]))
    if s > 0:
        return chk.report("CuspidalLips", "jet", note())
    T = D30 * q["a11"] ** 3 - D33 * q["a10"] ** 3
    z = chk.zero("beaks transversality", T, sc(5))
    if z is False:
        return chk.report("CuspidalBeaks", "jet", note())
    return chk.report("Unresolved", "jet", note(["null direction tangent to a branch"]))


def _non_wave_front(ctx, chk, swap):
    if swap:
        ctx.c = swap_xy(ctx.c)
        ctx.notes.append("x and y exchanged (N_x = 0)")
    q = coefficients(ctx.c.padded(max(3, ctx.c.order)), 3)
    sc = lambda d: _scale(q, d)
    note = lambda extra=(): "; ".join(ctx.notes + list(extra))
    ctx.need(2, "singular-set regularity")
    sy = _det(q, "10", "22")
    z = chk.zero("a10b22-a22b10", sy, sc(2))
    if z is None:
        return chk.report("Unresolved", "jet", note())
    ctx.need(3, "the non-wave-front tests")
    q = coefficients(ctx.c, 3)
    if not z:
        w = _det(q, "22", "33")
        z2 = chk.zero("a22b33-a33b22", w, sc(2))
        if z2 is False:
            return chk.report("TwoFiveCuspidalEdge", "jet", note())
        return chk.report("Unresolved", "jet", note(["degenerate 2/5 edge"]))
    m1 = q["a22"] * _det(q, "10", "20")
    m2 = _det(q, "10", "33")
    z1 = chk.zero("a22(a10b20-a20b10)", m1, sc(3))
    z2 = chk.zero("a10b33-a33b10", m2, sc(2))
    if z1 is False and z2 is False:
        return chk.report("Shcherbak", "jet", note())
    return chk.report("Unresolved", "jet", note(["degenerate non-wave-front point"]))
