"""Grids in null coordinates and the gridded surface record."""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Uniform rectangle; arrays are indexed [i, j] <-> (x[i], y[j])."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        for name in ("x", "y"):
            a = np.asarray(getattr(self, name), dtype=float)
            if a.ndim != 1 or len(a) < 2:
                raise ValueError(f"{name} needs at least 2 samples")
            d = np.diff(a)
            if np.any(d <= 0) or np.ptp(d) > 1e-9 * max(1.0, abs(d[0])):
                raise ValueError(f"{name} samples must be uniform and ascending")
            object.__setattr__(self, name, a)

    @classmethod
    def rect(cls, x0=-1.0, x1=1.0, nx=201, y0=None, y1=None, ny=None):
        y0 = x0 if y0 is None else y0
        y1 = x1 if y1 is None else y1
        ny = nx if ny is None else ny
        return cls(np.linspace(x0, x1, nx), np.linspace(y0, y1, ny))

    @property
    def hx(self):
        return float(self.x[1] - self.x[0])

    @property
    def hy(self):
        return float(self.y[1] - self.y[0])

    @property
    def shape(self):
        return (len(self.x), len(self.y))

    def mesh(self):
        return np.meshgrid(self.x, self.y, indexing="ij")

    def index_of(self, x, y, tol=1e-9):
        i = np.flatnonzero(np.abs(self.x - x) <= tol)
        j = np.flatnonzero(np.abs(self.y - y) <= tol)
        if len(i) == 0 or len(j) == 0:
            raise ValueError(f"({x}, {y}) is not a grid point")
        return int(i[0]), int(j[0])

    def nearest(self, x, y):
        return (int(np.argmin(np.abs(self.x - x))), int(np.argmin(np.abs(self.y - y))))


@dataclass
class SurfaceData:
    grid: Grid
    f: np.ndarray          # (nx, ny, 3), Sym formula
    N: np.ndarray          # (nx, ny, 3)
    frame: Optional[np.ndarray] = None   # (nx, ny, 2, 2) at lambda = 1
    sigma: Optional[np.ndarray] = None   # det(f_x, f_y, N)
    ok: Optional[np.ndarray] = None      # False where the Birkhoff solve failed
    cond: Optional[np.ndarray] = None
    tail: float = 0.0
    base: tuple = (0.0, 0.0)
    info: dict = field(default_factory=dict)

    @property
    def shape(self):
        return self.grid.shape
