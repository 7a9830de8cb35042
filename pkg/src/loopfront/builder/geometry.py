"""Frontal integration, fundamental forms and parallel surfaces on a grid."""
from dataclasses import dataclass

import numpy as np

from ..errors import FocalDistance, SingularPoint
from . import fd


def _dot(a, b):
    return np.einsum("...i,...i", a, b)


def regularity_threshold(grid):
    return 10.0 * max(grid.hx, grid.hy) ** 2


def integrate_frontal(N, grid, base=None, order=4):
    """f from f_x = N x N_x, f_y = -N x N_y, with f(base) = 0.

    The 1-form is closed, so integrating along the base row and then up
    each column gives f.  Derivatives and quadrature are fourth order unless
    ``order=2``.
    """
    N = np.asarray(N, dtype=float)
    base = (grid.x[0], grid.y[0]) if base is None else base
    i0, j0 = grid.index_of(*base)
    Nx = fd.d1(N, grid.hx, 0, order)
    Ny = fd.d1(N, grid.hy, 1, order)
    fx = np.cross(N, Nx)
    fy = -np.cross(N, Ny)
    row = fd.cumulative_integral(fx[:, j0], grid.hx, 0, i0, order)  # (nx, 3)
    cols = fd.cumulative_integral(fy, grid.hy, 1, j0, order)        # (nx, ny, 3)
    return row[:, None, :] + cols


@dataclass
class FundamentalForms:
    A: np.ndarray
    B: np.ndarray
    cos_phi: np.ndarray
    sin_phi: np.ndarray
    K: np.ndarray
    regular: np.ndarray
    speed_residual: np.ndarray    # max(| |f_x|-|N_x| |, | |f_y|-|N_y| |)
    asymptotic_residual: np.ndarray  # max(|<f_x,N_x>|, |<f_y,N_y>|)


def fundamental_forms(s, order=2, threshold=None, f=None):
    """A = |f_x|, B = |f_y|, angle phi and Gauss curvature from finite differences.

    Values are NaN where |sigma| is below ``threshold`` (10 h^2 by default).
    ``order`` sets the difference order used for every derivative.
    """
    g = s.grid
    f = s.f if f is None else f
    thr = regularity_threshold(g) if threshold is None else threshold
    D = fd.partials(f, g.hx, g.hy, order, second=True)
    DN = fd.partials(s.N, g.hx, g.hy, order)
    fx, fy = D["x"], D["y"]
    A = np.linalg.norm(fx, axis=-1)
    B = np.linalg.norm(fy, axis=-1)
    E, F, G = A * A, _dot(fx, fy), B * B
    e, m, gg = _dot(D["xx"], s.N), _dot(D["xy"], s.N), _dot(D["yy"], s.N)
    sigma = s.sigma if s.sigma is not None else _dot(np.cross(fx, fy), s.N)
    regular = np.abs(sigma) > thr
    with np.errstate(divide="ignore", invalid="ignore"):
        K = (e * gg - m * m) / (E * G - F * F)
        cos_phi = F / (A * B)
        sin_phi = _dot(np.cross(fx, fy), s.N) / (A * B)
    K = np.where(regular, K, np.nan)
    speed = np.maximum(np.abs(A - np.linalg.norm(DN["x"], axis=-1)),
                       np.abs(B - np.linalg.norm(DN["y"], axis=-1)))
    asym = np.maximum(np.abs(_dot(fx, DN["x"])), np.abs(_dot(fy, DN["y"])))
    return FundamentalForms(A, B, np.where(regular, cos_phi, np.nan),
                            np.where(regular, sin_phi, np.nan), K, regular, speed, asym)


def fundamental_forms_at(s, i, j, order=2):
    ff = fundamental_forms(s, order)
    if not ff.regular[i, j]:
        raise SingularPoint(f"|sigma| below threshold at grid point ({i}, {j})")
    return {k: float(getattr(ff, k)[i, j]) for k in ("A", "B", "cos_phi", "sin_phi", "K")}


@dataclass
class ParallelData:
    r: float
    g: np.ndarray
    K: np.ndarray         # from phi
    H: np.ndarray
    K_fd: np.ndarray      # from differences of g
    H_fd: np.ndarray
    retained: np.ndarray
    focal: np.ndarray     # points dropped because the denominator vanishes

    def weingarten_residual(self, which="formula"):
        K, H = (self.K, self.H) if which == "formula" else (self.K_fd, self.H_fd)
        return np.abs((1 + self.r ** 2) * K + 2 * self.r * H + 1)

    def umbilic_residual(self, sin_phi, cos_phi, which="formula"):
        K, H = (self.K, self.H) if which == "formula" else (self.K_fd, self.H_fd)
        den = (1 - self.r ** 2) * sin_phi + 2 * self.r * cos_phi
        return np.abs(H * H - K - 1.0 / den ** 2)

    def radii(self, cos_phi, sin_phi):
        """Principal radii r_i = (cos phi + (-1)^i) / sin phi, i = 1, 2."""
        return (cos_phi - 1) / sin_phi, (cos_phi + 1) / sin_phi


def parallel_surface(s, r, order=4, focal_tol=0.1, strict=False):
    """Parallel g = f + r N with curvatures two ways.

    The closed-form values use the angle phi between the asymptotic
    directions; the difference values use g's own first and second
    derivatives with normal N.  Points where (1 - r^2) sin phi + 2 r cos phi
    vanishes are excluded (and raise FocalDistance if ``strict``).
    """
    grid = s.grid
    ff = fundamental_forms(s, order)
    sp, cp = ff.sin_phi, ff.cos_phi
    den = (1 - r * r) * sp + 2 * r * cp
    focal = ff.regular & (np.abs(den) < focal_tol)
    if strict and np.any(focal):
        raise FocalDistance(f"r = {r} is a focal distance at {int(focal.sum())} points")
    keep = ff.regular & ~focal
    with np.errstate(divide="ignore", invalid="ignore"):
        K = np.where(keep, -sp / den, np.nan)
        H = np.where(keep, (r * sp - cp) / den, np.nan)
    g = s.f + r * s.N
    D = fd.partials(g, grid.hx, grid.hy, order, second=True)
    E, F, G = _dot(D["x"], D["x"]), _dot(D["x"], D["y"]), _dot(D["y"], D["y"])
    e, m, gg = _dot(D["xx"], s.N), _dot(D["xy"], s.N), _dot(D["yy"], s.N)
    with np.errstate(divide="ignore", invalid="ignore"):
        W = E * G - F * F
        Kfd = np.where(keep, (e * gg - m * m) / W, np.nan)
        Hfd = np.where(keep, (e * G - 2 * m * F + gg * E) / (2 * W), np.nan)
    return ParallelData(float(r), g, K, H, Kfd, Hfd, keep, focal)
