"""Direct finite-difference solution of the wave-map system in the chart (u, v).

Independent of the loop-group pipeline.  In t = (x + y)/2, s = (x - y)/2 the
system reads u_ss = u_tt - 4 G_u (and the same for v), which is marched in s
away from the diagonal with a leapfrog scheme at CFL ratio 1.
"""
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from ..errors import Overflow
from ..jets import PolyCauchyData

OVERFLOW = 1e6


@dataclass
class DiagonalCauchy:
    """Callables u, u_x, v, v_x along (t, t) with optional t-derivatives."""

    u: callable
    ux: callable
    v: callable
    vx: callable
    du: callable = None   # d/dt u(t, t)
    ddu: callable = None
    dv: callable = None
    ddv: callable = None

    @classmethod
    def from_poly(cls, d: PolyCauchyData):
        a = np.array([0.0] + [float(x) for x in d.alpha])
        b = np.array([float(x) for x in d.beta])
        la = np.array([0.0] + [float(x) for x in d.lam])
        mu = np.array([float(x) for x in d.mu])
        ev = lambda c: (lambda t: npoly.polyval(t, c))
        return cls(ev(a), ev(b), ev(la), ev(mu),
                   ev(npoly.polyder(a)), ev(npoly.polyder(a, 2)),
                   ev(npoly.polyder(la)), ev(npoly.polyder(la, 2)))

    def derivs(self, t, h=1e-4):
        out = []
        for f, d1, d2 in ((self.u, self.du, self.ddu), (self.v, self.dv, self.ddv)):
            if d1 is None:
                d1 = lambda s, f=f: (f(s - 2 * h) - 8 * f(s - h) + 8 * f(s + h) - f(s + 2 * h)) / (12 * h)
            if d2 is None:
                d2 = lambda s, f=f: (-f(s - 2 * h) + 16 * f(s - h) - 30 * f(s) + 16 * f(s + h) - f(s + 2 * h)) / (12 * h * h)
            out.append((d1(t), d2(t)))
        return out


@dataclass
class MarchResult:
    u: np.ndarray
    v: np.ndarray
    N: np.ndarray
    tau: float


def _rhs(u, v, ux, uy, vx, vy):
    den = 1.0 + u * u + v * v
    cross = ux * vy + uy * vx
    return (2 * u * ux * uy + v * cross) / den, (2 * v * vx * vy + u * cross) / den


def _G(U, V, Us, Vs, tau):
    """Right-hand sides at interior t points given values and s-derivatives."""
    Ut = np.empty_like(U)
    Vt = np.empty_like(V)
    Ut[1:-1] = (U[2:] - U[:-2]) / (2 * tau)
    Vt[1:-1] = (V[2:] - V[:-2]) / (2 * tau)
    Ut[[0, -1]] = np.nan
    Vt[[0, -1]] = np.nan
    ux, uy = (Ut + Us) / 2, (Ut - Us) / 2
    vx, vy = (Vt + Vs) / 2, (Vt - Vs) / 2
    return _rhs(U, V, ux, uy, vx, vy)


def pde_march(initial, grid, refine=4):
    """u, v and N = delta (u, v, 1) on a square grid symmetric about x = y.

    ``initial`` is a DiagonalCauchy or PolyCauchyData.  The lattice step is
    tau = h / (2 refine) in both t and s so every grid point is a lattice
    point.  Raises Overflow if |u| + |v| exceeds 1e6.
    """
    if isinstance(initial, PolyCauchyData):
        initial = DiagonalCauchy.from_poly(initial)
    if len(grid.x) != len(grid.y) or not np.allclose(grid.x, grid.y, atol=1e-12):
        raise ValueError("pde_march needs identical x and y samples")
    h = grid.hx
    tau = h / (2 * refine)
    lo, hi = float(grid.x[0]), float(grid.x[-1])
    nt = int(round((hi - lo) / tau)) + 1
    t = lo + tau * np.arange(nt)
    nk = nt // 2  # levels needed on each side: |s| <= (hi - lo)/2

    u0, ux0, v0, vx0 = (np.asarray(f(t), dtype=float) * np.ones_like(t)
                        for f in (initial.u, initial.ux, initial.v, initial.vx))
    (ut0, utt0), (vt0, vtt0) = initial.derivs(t)
    ut0, utt0, vt0, vtt0 = (np.asarray(a, float) * np.ones_like(t) for a in (ut0, utt0, vt0, vtt0))
    us0, vs0 = 2 * ux0 - ut0, 2 * vx0 - vt0

    levels = {}
    for sign in (1, -1):
        Us_, Vs_ = sign * us0, sign * vs0   # derivative along the marching direction
        Gu, Gv = _rhs(u0, v0, (ut0 + us0) / 2, (ut0 - us0) / 2, (vt0 + vs0) / 2, (vt0 - vs0) / 2)
        U1 = u0 + tau * Us_ + 0.5 * tau ** 2 * (utt0 - 4 * Gu)
        V1 = v0 + tau * Vs_ + 0.5 * tau ** 2 * (vtt0 - 4 * Gv)
        hist = [(u0, v0), (U1, V1)]
        for k in range(1, nk):
            (Um, Vm), (U, V) = hist[-2], hist[-1]
            # predictor: backward-difference s-derivative
            if k >= 2:
                Umm, Vmm = hist[-3]
                Us_p = (3 * U - 4 * Um + Umm) / (2 * tau)
                Vs_p = (3 * V - 4 * Vm + Vmm) / (2 * tau)
            else:
                Us_p, Vs_p = (U - Um) / tau, (V - Vm) / tau
            Gu, Gv = _G(U, V, sign * Us_p, sign * Vs_p, tau)
            Un, Vn = _leap(U, V, Um, Vm, Gu, Gv, tau)
            # corrector with central s-derivative
            Gu, Gv = _G(U, V, sign * (Un - Um) / (2 * tau), sign * (Vn - Vm) / (2 * tau), tau)
            Un, Vn = _leap(U, V, Um, Vm, Gu, Gv, tau)
            valid = np.isfinite(Un)
            if np.any(np.abs(Un[valid]) + np.abs(Vn[valid]) > OVERFLOW):
                raise Overflow("solution left the chart (|u| + |v| > 1e6)")
            hist.append((Un, Vn))
        levels[sign] = hist

    nx = len(grid.x)
    u = np.empty((nx, nx))
    v = np.empty((nx, nx))
    for i in range(nx):
        for j in range(nx):
            m = (i + j) * refine     # t index: (x + y)/2 = lo + (i + j) h / 2
            k = (i - j) * refine     # s index
            lev = levels[1][k] if k >= 0 else levels[-1][-k]
            u[i, j], v[i, j] = lev[0][m], lev[1][m]
    delta = 1.0 / np.sqrt(1 + u * u + v * v)
    N = np.stack([delta * u, delta * v, delta], axis=-1)
    return MarchResult(u, v, N, tau)


def _leap(U, V, Um, Vm, Gu, Gv, tau):
    Un = np.full_like(U, np.nan)
    Vn = np.full_like(V, np.nan)
    Un[1:-1] = U[2:] + U[:-2] - Um[1:-1] - 4 * tau ** 2 * Gu[1:-1]
    Vn[1:-1] = V[2:] + V[:-2] - Vm[1:-1] - 4 * tau ** 2 * Gv[1:-1]
    return Un, Vn
