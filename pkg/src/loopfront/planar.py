"""Wave maps into the plane, N(x, y) = (f1(x) + g1(y), f2(x) + g2(y)).

Components are callables; derivatives may be supplied as lists of callables
or are taken by central differences.
"""
from dataclasses import dataclass, field

import numpy as np

from .cauchy import FD_STEP, central_diff

ZERO_TOL = 1e-9


@dataclass
class PlanarWaveMap:
    f1: callable
    f2: callable
    g1: callable
    g2: callable
    derivs: dict = field(default_factory=dict)   # e.g. {"f1": [f1', f1'', f1''']}

    @classmethod
    def from_polys(cls, f1, f2, g1, g2):
        """From numpy Polynomial objects; derivatives are exact."""
        ps = dict(f1=f1, f2=f2, g1=g1, g2=g2)
        d = {k: [p.deriv(i) for i in (1, 2, 3)] for k, p in ps.items()}
        return cls(f1, f2, g1, g2, d)

    def d(self, name, k, t):
        """k-th derivative of component ``name`` at t."""
        fn = getattr(self, name)
        if k == 0:
            return fn(t)
        if name in self.derivs and len(self.derivs[name]) >= k:
            return self.derivs[name][k - 1](t)
        return central_diff(fn, t, FD_STEP, k)


@dataclass
class PlanarField:
    value: np.ndarray      # (nx, ny, 2)
    jacobian: np.ndarray   # (nx, ny, 2, 2), rows = components, cols = (x, y)
    lam: np.ndarray        # f1' g2' - f2' g1'


def planar_eval(m: PlanarWaveMap, grid):
    """Values, Jacobian and lambda on the grid's (x, y) nodes."""
    X, Y = grid.mesh()
    x, y = X[:, 0], Y[0, :]
    f1, f2 = np.asarray(m.f1(x), float) * np.ones_like(x), np.asarray(m.f2(x), float) * np.ones_like(x)
    g1, g2 = np.asarray(m.g1(y), float) * np.ones_like(y), np.asarray(m.g2(y), float) * np.ones_like(y)
    d = lambda n, t: np.asarray(m.d(n, 1, t), float) * np.ones_like(t)
    f1p, f2p, g1p, g2p = d("f1", x), d("f2", x), d("g1", y), d("g2", y)
    val = np.stack([f1[:, None] + g1[None, :], f2[:, None] + g2[None, :]], -1)
    J = np.empty(X.shape + (2, 2))
    J[..., 0, 0] = f1p[:, None]
    J[..., 0, 1] = g1p[None, :]
    J[..., 1, 0] = f2p[:, None]
    J[..., 1, 1] = g2p[None, :]
    lam = f1p[:, None] * g2p[None, :] - f2p[:, None] * g1p[None, :]
    return PlanarField(val, J, lam)


def planar_stratum(m: PlanarWaveMap, point=(0.0, 0.0), tol=ZERO_TOL):
    """Rank, null lines inside the singular set and the Morse-failure facts at a point."""
    x0, y0 = point
    fd = {n: [m.d(n, k, x0) for k in (1, 2, 3)] for n in ("f1", "f2")}
    gd = {n: [m.d(n, k, y0) for k in (1, 2, 3)] for n in ("g1", "g2")}
    f1p, f2p = fd["f1"][0], fd["f2"][0]
    g1p, g2p = gd["g1"][0], gd["g2"][0]
    zero = lambda *vals: all(abs(float(v)) <= tol for v in vals)
    lam = f1p * g2p - f2p * g1p
    rank = int(np.linalg.matrix_rank(np.array([[f1p, g1p], [f2p, g2p]], float), tol=tol))
    nx, ny = zero(f1p, f2p), zero(g1p, g2p)
    out = {
        "rank": rank,
        "lambda": float(lam),
        "singular": zero(lam),
        "null_line_x_in_sigma": nx,     # the line x = x0
        "null_line_y_in_sigma": ny,     # the line y = y0
        "lambda_x": float(fd["f1"][1] * g2p - fd["f2"][1] * g1p),
        "lambda_y": float(f1p * gd["g2"][1] - f2p * gd["g1"][1]),
        "lambda_xx": float(fd["f1"][2] * g2p - fd["f2"][2] * g1p),
        "lambda_yy": float(f1p * gd["g2"][2] - f2p * gd["g1"][2]),
        "lambda_xy": float(fd["f1"][1] * gd["g2"][1] - fd["f2"][1] * gd["g1"][1]),
    }
    crit = out["singular"] and zero(out["lambda_x"], out["lambda_y"])
    out["critical"] = crit
    # at a rank-1 critical point lambda_xy = 0 as well, so j^2 lambda is
    # Morse exactly when lambda_xx lambda_yy != 0
    out["hess_det"] = out["lambda_xx"] * out["lambda_yy"] - out["lambda_xy"] ** 2
    out["morse_fails"] = bool(crit and zero(out["hess_det"]))
    j2_zero = rank == 0 and zero(fd["f1"][1], fd["f2"][1], gd["g1"][1], gd["g2"][1])
    out["j2_zero"] = j2_zero
    out["finitely_determined"] = not j2_zero
    if not out["singular"]:
        out["label"] = "Regular"
    elif rank == 0:
        out["label"] = "Rank0"
    else:
        out["label"] = "Rank1"
    return out
