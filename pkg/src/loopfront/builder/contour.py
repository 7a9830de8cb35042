"""Zero set of sigma as polylines, tagged with the null direction."""
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import RegularGridInterpolator
from skimage.measure import find_contours

from . import fd

FLAT_SIGMA = 1e-10


@dataclass
class Polyline:
    xy: np.ndarray     # (k, 2) points in the (x, y) domain
    f: np.ndarray      # (k, 3) surface points (linear interpolation)
    eta: np.ndarray    # (k, 2) null direction B d/dx - eps1 A d/dy
    closed: bool


def null_direction_field(s, order=4):
    """eta = (B, -eps1 A) with A = |f_x|, B = |f_y|, eps1 = sign <f_x, f_y>."""
    g = s.grid
    fx = fd.d1(s.f, g.hx, 0, order)
    fy = fd.d1(s.f, g.hy, 1, order)
    A = np.linalg.norm(fx, axis=-1)
    B = np.linalg.norm(fy, axis=-1)
    eps1 = np.sign(np.einsum("...i,...i", fx, fy))
    eps1[eps1 == 0] = 1
    return np.stack([B, -eps1 * A], axis=-1)


def singular_contour(s, level=0.0):
    """Marching-squares zero contour of sigma; [] when there is none.

    A sigma that vanishes to rounding on the whole grid (an identically
    singular surface) has no well-defined contour and also returns [].
    """
    sig = np.asarray(s.sigma, dtype=float)
    if not np.any(np.isfinite(sig)) or np.nanmax(np.abs(sig)) < FLAT_SIGMA:
        return []
    g = s.grid
    field = np.where(np.isfinite(sig), sig, np.nan)
    raw = find_contours(field, level)
    if not raw:
        return []
    eta = null_direction_field(s)
    pts = (g.x, g.y)
    interp_f = RegularGridInterpolator(pts, s.f)
    interp_eta = RegularGridInterpolator(pts, eta)
    out = []
    for c in raw:
        xy = np.column_stack([g.x[0] + c[:, 0] * g.hx, g.y[0] + c[:, 1] * g.hy])
        xy[:, 0] = np.clip(xy[:, 0], g.x[0], g.x[-1])
        xy[:, 1] = np.clip(xy[:, 1], g.y[0], g.y[-1])
        closed = len(c) > 2 and np.allclose(c[0], c[-1])
        out.append(Polyline(xy, interp_f(xy), interp_eta(xy), bool(closed)))
    return out
