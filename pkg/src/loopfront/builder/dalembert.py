"""Generalized d'Alembert construction of (f, N) on a grid."""
import os
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..algebra import e3, rotation_matrix, su2_to_vec
from ..errors import OutsideBigCell
from ..loops import (BIG_CELL_COND, DEFAULT_M, DEFAULT_SAMPLES, DEFAULT_STEPS_PER_UNIT,
                     birkhoff_plus_inverse, inv2, integrate_loop_path, samples_to_coeffs)
from . import fd
from .grid import SurfaceData

TAIL_WARN = 1e-8


def thread_count():
    n = int(os.environ.get("LOOPFRONT_THREADS", "0") or 0)
    return n if n > 0 else (os.cpu_count() or 1)


def _edge_mass(coeffs):
    return float(np.abs(coeffs[..., [0, 1, -2, -1], :, :]).max())


def sigma_field(f, N, grid, order=4):
    fx = fd.d1(f, grid.hx, 0, order)
    fy = fd.d1(f, grid.hy, 1, order)
    return np.einsum("...i,...i", np.cross(fx, fy), N)


def dalembert_solve(p, grid, M=DEFAULT_M, samples=DEFAULT_SAMPLES,
                    steps_per_unit=DEFAULT_STEPS_PER_UNIT, threads=None,
                    cond_limit=BIG_CELL_COND):
    """Build the surface of a potential pair on ``grid``.

    X is integrated along x and Y along y from the base point, both starting
    at the identity.  For each grid point X(x)^{-1} Y(y) = H_- H_+ and the
    frame is F = X H_- = Y H_+^{-1}; only K = H_+^{-1} is needed.  The Sym
    formula gives f = (dF/dlambda) F^{-1} at lambda = 1.  Points whose
    Toeplitz system is too ill-conditioned are flagged in ``ok`` and left
    as NaN.
    """
    x0, y0 = p.base
    grid.index_of(x0, y0)
    K = samples
    Xs = integrate_loop_path(p.chi, grid.x, x0, steps_per_unit, K)
    Ys = integrate_loop_path(p.psi, grid.y, y0, steps_per_unit, K)
    Yc = samples_to_coeffs(Ys, M)
    tail = max(_edge_mass(samples_to_coeffs(Xs, M)), _edge_mass(Yc))
    n = np.arange(-M, M + 1)
    Y1 = Yc.sum(axis=-3)
    dY1 = np.einsum("n,jnab->jab", n.astype(complex), Yc)
    Xinv, _ = inv2(Xs)
    m = np.arange(M + 1).astype(complex)

    nx, ny = grid.shape
    F = np.full((nx, ny, 2, 2), np.nan, dtype=complex)
    dF = np.full((nx, ny, 2, 2), np.nan, dtype=complex)
    cond = np.empty((nx, ny))
    ok = np.empty((nx, ny), dtype=bool)
    row_tail = np.zeros(nx)

    def row(i):
        g = samples_to_coeffs(Xinv[i][None] @ Ys, M)  # (ny, 2M+1, 2, 2)
        row_tail[i] = _edge_mass(g)
        Kc, c, good = birkhoff_plus_inverse(g, M, cond_limit)
        K1 = Kc.sum(axis=-3)
        dK1 = np.einsum("m,jmab->jab", m, Kc)
        Fi = Y1 @ K1
        dFi = dY1 @ K1 + Y1 @ dK1
        Fi[~good] = np.nan
        dFi[~good] = np.nan
        F[i], dF[i], cond[i], ok[i] = Fi, dFi, c, good

    nthreads = thread_count() if threads is None else max(1, threads)
    if nthreads > 1:
        with ThreadPoolExecutor(nthreads) as ex:
            list(ex.map(row, range(nx)))
    else:
        for i in range(nx):
            row(i)

    ib, jb = grid.index_of(x0, y0)
    if not ok[ib, jb]:
        raise OutsideBigCell("base point is outside the big cell")
    tail = max(tail, float(row_tail.max()))
    if tail > TAIL_WARN:
        warnings.warn(f"loop truncation tail {tail:.2e} exceeds {TAIL_WARN:g}; raise M",
                      RuntimeWarning, stacklevel=2)

    F0 = np.asarray(p.initial_frame, dtype=complex)
    F = F0 @ F
    dF = F0 @ dF
    Finv = np.conj(np.swapaxes(F, -1, -2))
    f = su2_to_vec(dF @ Finv, check=False)
    R = rotation_matrix(F)
    N = R[..., :, 2]
    # drop the base-point translation so that f(base) = 0 exactly as in the
    # integrated version; the Sym value there is Ad_{F0}(0) = 0 anyway
    sigma = sigma_field(f, N, grid) if np.all(ok) else _masked_sigma(f, N, grid, ok)
    s = SurfaceData(grid=grid, f=f.real, N=N, frame=F, sigma=sigma, ok=ok, cond=cond,
                    tail=tail, base=(x0, y0))
    s.info.update(M=M, samples=K, steps_per_unit=steps_per_unit)
    return s


def _masked_sigma(f, N, grid, ok):
    sig = sigma_field(np.nan_to_num(f), np.nan_to_num(N), grid)
    bad = ~ok
    # a failed point contaminates the stencils around it
    from scipy.ndimage import binary_dilation
    bad = binary_dilation(bad, iterations=2)
    sig[bad] = np.nan
    return sig
