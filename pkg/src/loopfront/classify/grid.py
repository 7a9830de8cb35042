"""Numerical classification on a gridded surface.

N is fitted by a least-squares polynomial on a window of grid points and
the criteria are evaluated on the fit.  Conditions that single out a curve
or a point of the domain (sigma = 0, eta sigma = 0, grad sigma = 0) are
met by moving to the nearest such point within ``radius``; the remaining
ones are tested with the two relative bands.
"""
import numpy as np
from scipy.interpolate import RegularGridInterpolator

from ..builder import fd
from ..builder.contour import singular_contour
from ..errors import NotSingular
from ..series import Series2, vdet, vdot, vdx, vdy
from .report import Checker

FIT_HALF = 6
FIT_DEGREE = 8
FLAT_RATIO = 1e-7
WAVE_FRONT_RATIO = 1e-3


def local_fit(s, node, half=FIT_HALF, degree=FIT_DEGREE):
    """Three float Series2 (components of N) in coordinates centred at grid node."""
    g = s.grid
    i0, j0 = node
    nx, ny = g.shape
    lo_i = min(max(i0 - half, 0), max(nx - 2 * half - 1, 0))
    lo_j = min(max(j0 - half, 0), max(ny - 2 * half - 1, 0))
    I = np.arange(lo_i, min(lo_i + 2 * half + 1, nx))
    J = np.arange(lo_j, min(lo_j + 2 * half + 1, ny))
    X, Y = np.meshgrid(g.x[I] - g.x[i0], g.y[J] - g.y[j0], indexing="ij")
    vals = s.N[np.ix_(I, J)].reshape(-1, 3)
    X, Y = X.ravel(), Y.ravel()
    keep = np.all(np.isfinite(vals), axis=1)
    L = half * max(g.hx, g.hy)
    pq = [(p, q) for p in range(degree + 1) for q in range(degree + 1 - p)]
    if keep.sum() < len(pq):
        raise NotSingular("not enough valid grid points around the point")
    V = np.stack([(X[keep] / L) ** p * (Y[keep] / L) ** q for p, q in pq], axis=1)
    coef, *_ = np.linalg.lstsq(V, vals[keep], rcond=None)
    out = []
    for k in range(3):
        c = np.zeros((degree + 1, degree + 1))
        for (p, q), v in zip(pq, coef[:, k]):
            c[p, q] = v / L ** (p + q)
        out.append(Series2(c, degree, False))
    return out


class LocalModel:
    """sigma, eta and their derivatives built from a local fit of N."""

    def __init__(self, N, use_x=True):
        Nx, Ny = vdx(N), vdy(N)
        self.sigma = vdet(Nx, Ny, N)
        gxy = vdot(Nx, Ny)
        self.eta = (gxy, vdot(Nx, Nx)) if use_x else (vdot(Ny, Ny), gxy)
        self.nx2, self.ny2 = vdot(Nx, Nx), vdot(Ny, Ny)
        D = self.D
        self.e1 = D(self.sigma)
        self.e2 = D(self.e1)
        self.e3 = D(self.e2)
        sg = self.sigma
        self.gx, self.gy = sg.dx(), sg.dy()
        self.hxx, self.hxy, self.hyy = self.gx.dx(), self.gx.dy(), self.gy.dy()
        self.e1x, self.e1y = self.e1.dx(), self.e1.dy()
        self.d3 = [sg.dx().dx().dx(), sg.dx().dx().dy(), sg.dx().dy().dy(), sg.dy().dy().dy()]
        e = self.eta
        self.deta = [e[0].dx(), e[0].dy(), e[1].dx(), e[1].dy()]
        self.d2eta = [d.dx() for d in self.deta] + [d.dy() for d in self.deta]

    def D(self, g):
        return self.eta[0] * g.dx() + self.eta[1] * g.dy()

    def at(self, name, p):
        return float(getattr(self, name)(p[0], p[1]))

    def grad(self, p):
        return np.array([self.at("gx", p), self.at("gy", p)])

    def hess(self, p):
        a, b, c = self.at("hxx", p), self.at("hxy", p), self.at("hyy", p)
        return np.array([[a, b], [b, c]])

    def scales(self, p):
        """Sizes of the competing terms in eta sigma, eta^2 sigma, eta^3 sigma."""
        n0 = np.linalg.norm(self.eta_at(p))
        n1 = max(abs(float(t(*p))) for t in self.deta)
        n2 = max(abs(float(t(*p))) for t in self.d2eta)
        g1 = np.linalg.norm(self.grad(p))
        g2 = np.abs(self.hess(p)).max()
        g3 = max(abs(float(t(*p))) for t in self.d3)
        return (n0 * g1,
                n0 ** 2 * g2 + n0 * n1 * g1,
                n0 ** 3 * g3 + 3 * n0 ** 2 * n1 * g2 + (n0 ** 2 * n2 + n0 * n1 ** 2) * g1)

    def eta_at(self, p):
        return np.array([float(self.eta[0](*p)), float(self.eta[1](*p))])


def _newton(F, J, p, radius, iters=30, tol=1e-14):
    p0 = np.array(p, float)
    x = p0.copy()
    for _ in range(iters):
        f = np.atleast_1d(F(x))
        Jm = np.atleast_2d(J(x))
        try:
            step = np.linalg.lstsq(Jm, -f, rcond=None)[0]
        except np.linalg.LinAlgError:
            return None
        x = x + step
        if not np.all(np.isfinite(x)) or np.linalg.norm(x - p0) > 4 * radius:
            return None
        if np.linalg.norm(step) < tol * max(1.0, radius):
            break
    return x if np.linalg.norm(x - p0) <= radius else None


def _prepare(s, point, half, degree):
    g = s.grid
    node = g.nearest(*point)
    base = np.array([g.x[node[0]], g.y[node[1]]])
    p = np.asarray(point, float) - base
    N = local_fit(s, node, half, degree)
    # choose the eta extension that stays away from zero
    m = LocalModel(N, True)
    if m.at("nx2", p) < m.at("ny2", p):
        m = LocalModel(N, False)
    return m, base, p


def refine_eta_root(s, point, radius=None, half=FIT_HALF, degree=FIT_DEGREE):
    """Nearest common zero of sigma and eta sigma within ``radius``, or None."""
    h = max(s.grid.hx, s.grid.hy)
    radius = 2 * h if radius is None else radius
    m, base, p = _prepare(s, point, half, degree)
    F = lambda x: np.array([m.at("sigma", x), m.at("e1", x)])
    J = lambda x: np.array([m.grad(x), [m.at("e1x", x), m.at("e1y", x)]])
    r = _newton(F, J, p, radius)
    return None if r is None else r + base


def classify_grid(s, point, radius=None, half=FIT_HALF, degree=FIT_DEGREE):
    """Report at ``point`` = (x, y), which should lie on or near the singular set."""
    g = s.grid
    h = max(g.hx, g.hy)
    radius = 1.5 * h if radius is None else radius
    m, base, p = _prepare(s, point, half, degree)
    chk = Checker(exact=False)
    absolute = lambda q: tuple(float(v) for v in q + base)

    nx2, ny2 = m.at("nx2", p), m.at("ny2", p)
    grad = m.grad(p)
    H = m.hess(p)
    natural = np.sqrt(nx2 * ny2)
    if np.linalg.norm(grad) * radius + np.abs(H).max() * radius ** 2 + abs(m.at("sigma", p)) \
            < FLAT_RATIO * max(natural, 1e-300):
        chk.info("|grad sigma|", float(np.linalg.norm(grad)))
        return chk.report("Unresolved", "grid", "sigma vanishes identically near the point",
                          absolute(p))
    chk.info("|N_x|^2", nx2)
    chk.info("|N_y|^2", ny2)
    if min(nx2, ny2) < WAVE_FRONT_RATIO * max(nx2, ny2):
        return chk.report("Unresolved", "grid", "not a wave front near the point", absolute(p))

    # critical point of sigma nearby: singular set is not a curve there
    c = _newton(m.grad, m.hess, p, radius)
    if c is not None:
        Hc = m.hess(c)
        sig_c = m.at("sigma", c)
        zc = chk.zero("sigma at critical point", sig_c, np.sqrt(m.at("nx2", c) * m.at("ny2", c)))
        if zc:
            return _morse(m, chk, c, Hc, absolute)
        if zc is None:
            return chk.report("Unresolved", "grid", point=absolute(c))
        chk.conditions.pop()

    F = lambda x: np.array([m.at("sigma", x)])
    q = _newton(F, lambda x: m.grad(x)[None, :], p, radius)
    if q is None:
        raise NotSingular(f"no zero of sigma within {radius:.3g} of {tuple(point)}")
    chk.info("sigma", m.at("sigma", q))
    z1 = chk.zero("eta sigma", m.at("e1", q), m.scales(q)[0])
    if z1 is False:
        return chk.report("CuspidalEdge", "grid", point=absolute(q))
    r = q
    if z1 is None:
        # inside the band gap: move to the zero of eta sigma on the singular set
        F2 = lambda x: np.array([m.at("sigma", x), m.at("e1", x)])
        J2 = lambda x: np.array([m.grad(x), [m.at("e1x", x), m.at("e1y", x)]])
        r = _newton(F2, J2, q, radius)
        if r is None:
            return chk.report("Unresolved", "grid", "eta sigma small but no zero nearby",
                              absolute(q))
        chk.conditions[-1].value = m.at("e1", r)
        chk.conditions[-1].verdict = "zero"
        chk.undecided = False
    sc = m.scales(r)
    z2 = chk.zero("eta^2 sigma", m.at("e2", r), sc[1])
    if z2 is False:
        return chk.report("Swallowtail", "grid", point=absolute(r))
    if z2:
        z3 = chk.zero("eta^3 sigma", m.at("e3", r), sc[2])
        if z3 is False:
            return chk.report("CuspidalButterfly", "grid", point=absolute(r))
    return chk.report("Unresolved", "grid", point=absolute(r))


def _morse(m, chk, c, H, absolute):
    det = float(np.linalg.det(H))
    s = chk.sign("det Hess sigma", det, np.abs(H).max() ** 2)
    if s is None or s == 0:
        return chk.report("Unresolved", "grid", "singular set is not Morse", absolute(c))
    if s > 0:
        return chk.report("CuspidalLips", "grid", point=absolute(c))
    z = chk.zero("eta^2 sigma", m.at("e2", c), m.scales(c)[1])
    if z is False:
        return chk.report("CuspidalBeaks", "grid", point=absolute(c))
    return chk.report("Unresolved", "grid", point=absolute(c))


def eta_sigma_field(s, order=4):
    """eta sigma on the grid with the extension used by classify_grid."""
    g = s.grid
    Nx = fd.d1(s.N, g.hx, 0, order)
    Ny = fd.d1(s.N, g.hy, 1, order)
    nx2 = np.einsum("...i,...i", Nx, Nx)
    ny2 = np.einsum("...i,...i", Ny, Ny)
    gxy = np.einsum("...i,...i", Nx, Ny)
    use_x = np.nanmin(nx2) >= np.nanmin(ny2)
    e = (gxy, nx2) if use_x else (ny2, gxy)
    sig = np.nan_to_num(np.asarray(s.sigma, float))
    return e[0] * fd.d1(sig, g.hx, 0, order) + e[1] * fd.d1(sig, g.hy, 1, order)


def find_swallowtails(s, radius=None, min_separation=None):
    """Points of the singular contour where eta sigma changes sign and that
    classify_grid confirms as swallowtails.  Returns a list of reports."""
    g = s.grid
    h = max(g.hx, g.hy)
    sep = 2 * h if min_separation is None else min_separation
    es = RegularGridInterpolator((g.x, g.y), eta_sigma_field(s))
    found = []
    for pl in singular_contour(s):
        v = es(pl.xy)
        for k in np.flatnonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0):
            t = v[k] / (v[k] - v[k + 1])
            pt = pl.xy[k] + t * (pl.xy[k + 1] - pl.xy[k])
            if any(np.hypot(*(np.array(r.point) - pt)) < sep for r in found):
                continue
            pt = refine_eta_root(s, pt)
            if pt is None or any(np.hypot(*(np.array(r.point) - pt)) < sep for r in found):
                continue
            try:
                rep = classify_grid(s, pt, radius)
            except NotSingular:
                continue
            if rep.label == "Swallowtail":
                found.append(rep)
    return found
