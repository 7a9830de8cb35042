"""Truncated twisted Laurent loops in SL(2, C).

A loop is stored as its Laurent coefficients ``coeffs[n + M]`` for powers
n = -M..M, each a 2x2 complex matrix.  The twisting condition
gamma(lambda) = Ad_P gamma(-lambda) means odd powers are off-diagonal and
even powers diagonal; it is enforced by masking after every operation.

Most routines have a batched array form (leading axes broadcast) used by the
surface builder, and a thin object wrapper for single loops.
"""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import I2
from .errors import OutsideBigCell, SingularLoop

DEFAULT_M = 12
DEFAULT_SAMPLES = 64
DEFAULT_STEPS_PER_UNIT = 256
BIG_CELL_COND = 1e12
SINGULAR_DET = 1e-12

_DIAG = np.array([[1, 0], [0, 1]], dtype=bool)


def parity_mask(powers):
    """Boolean mask (len(powers), 2, 2) of entries allowed by the twisting."""
    powers = np.asarray(powers)
    even = (powers % 2 == 0)[:, None, None]
    return np.where(even, _DIAG, ~_DIAG)


def enforce_parity(coeffs, n_min):
    coeffs = np.asarray(coeffs, dtype=complex)
    n = np.arange(n_min, n_min + coeffs.shape[-3])
    return np.where(parity_mask(n), coeffs, 0)


def circle_points(K):
    return np.exp(2j * np.pi * np.arange(K) / K)


def coeffs_to_samples(coeffs, n_min, K):
    """Values at the K-th roots of unity; coefficient axis is -3."""
    n = np.arange(n_min, n_min + coeffs.shape[-3])
    if len(n) > K:
        raise ValueError(f"{len(n)} coefficients cannot be sampled at {K} points")
    buf = np.zeros(coeffs.shape[:-3] + (K, 2, 2), dtype=complex)
    buf[..., n % K, :, :] = coeffs
    # sum_n c_n lambda_j^n = K * ifft
    return np.fft.ifft(buf, axis=-3) * K


def samples_to_coeffs(samples, M):
    """Laurent coefficients for powers -M..M from circle samples, twisted."""
    K = samples.shape[-3]
    if K < 2 * M + 1:
        raise ValueError(f"need at least {2 * M + 1} samples for order {M}")
    full = np.fft.fft(samples, axis=-3) / K
    n = np.arange(-M, M + 1)
    return enforce_parity(full[..., n % K, :, :], -M)


def det2(m):
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def inv2(m):
    """Explicit 2x2 inverse (adjugate over determinant)."""
    d = det2(m)
    out = np.empty_like(m)
    out[..., 0, 0] = m[..., 1, 1]
    out[..., 1, 1] = m[..., 0, 0]
    out[..., 0, 1] = -m[..., 0, 1]
    out[..., 1, 0] = -m[..., 1, 0]
    return out / d[..., None, None], d


def convolve(g, g_min, h, h_min):
    """Full Cauchy product of coefficient arrays; returns (coeffs, n_min)."""
    na, nb = g.shape[-3], h.shape[-3]
    shape = np.broadcast_shapes(g.shape[:-3], h.shape[:-3])
    out = np.zeros(shape + (na + nb - 1, 2, 2), dtype=complex)
    if na <= nb:
        for a in range(na):
            out[..., a:a + nb, :, :] += g[..., a:a + 1, :, :] @ h
    else:
        for b in range(nb):
            out[..., b:b + na, :, :] += g @ h[..., b:b + 1, :, :]
    return out, g_min + h_min


def truncate(coeffs, n_min, lo, hi):
    """Restrict to powers lo..hi (zero-padding if needed); returns (kept, tail)."""
    n = np.arange(n_min, n_min + coeffs.shape[-3])
    out = np.zeros(coeffs.shape[:-3] + (hi - lo + 1, 2, 2), dtype=complex)
    keep = (n >= lo) & (n <= hi)
    out[..., n[keep] - lo, :, :] = coeffs[..., keep, :, :]
    dropped = coeffs[..., ~keep, :, :]
    tail = np.max(np.abs(dropped), initial=0.0)
    return out, tail


@dataclass(frozen=True)
class TwistedLaurentLoop:
    """Coefficients for powers -M..M of a twisted loop."""

    coeffs: np.ndarray
    dropped_tail: float = 0.0

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 3 or c.shape[1:] != (2, 2) or c.shape[0] % 2 != 1:
            raise ValueError("coeffs must have shape (2M+1, 2, 2)")
        M = c.shape[0] // 2
        c = enforce_parity(c, -M)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def M(self):
        return self.coeffs.shape[0] // 2

    @classmethod
    def identity(cls, M=DEFAULT_M):
        c = np.zeros((2 * M + 1, 2, 2), dtype=complex)
        c[M] = I2
        return cls(c)

    @classmethod
    def from_terms(cls, terms, M=DEFAULT_M):
        """Build from {power: matrix}."""
        c = np.zeros((2 * M + 1, 2, 2), dtype=complex)
        for n, m in terms.items():
            c[n + M] += np.asarray(m, dtype=complex)
        return cls(c)

    @classmethod
    def from_samples(cls, samples, M=DEFAULT_M):
        return cls(samples_to_coeffs(np.asarray(samples, dtype=complex), M))

    def coeff(self, n):
        if abs(n) > self.M:
            return np.zeros((2, 2), dtype=complex)
        return self.coeffs[n + self.M]

    def evaluate(self, lam):
        """Value at lambda (scalar or array); result shape lam.shape + (2, 2)."""
        lam = np.asarray(lam, dtype=complex)
        n = np.arange(-self.M, self.M + 1)
        pw = lam[..., None] ** n
        return np.einsum("...n,nij->...ij", pw, self.coeffs)

    def samples(self, K=DEFAULT_SAMPLES):
        return coeffs_to_samples(self.coeffs, -self.M, K)

    def tail_mass(self):
        """Max-norm of the two outermost bands plus anything dropped earlier."""
        edge = np.abs(self.coeffs[[0, 1, -2, -1]]).max()
        return max(float(edge), float(self.dropped_tail))

    def lambda_derivative_at_one(self):
        """d/dlambda at lambda = 1, i.e. sum n * c_n."""
        n = np.arange(-self.M, self.M + 1)
        return np.einsum("n,nij->ij", n.astype(complex), self.coeffs)

    def __matmul__(self, other):
        return loop_multiply(self, other)


def loop_multiply(g, h):
    if g.M != h.M:
        raise ValueError("truncation orders differ")
    full, n0 = convolve(g.coeffs, -g.M, h.coeffs, -h.M)
    kept, tail = truncate(full, n0, -g.M, g.M)
    return TwistedLaurentLoop(kept, max(tail, g.dropped_tail, h.dropped_tail))


def loop_inverse(g, K=DEFAULT_SAMPLES):
    s = g.samples(K)
    with np.errstate(divide="ignore", invalid="ignore"):
        si, d = inv2(s)
    if np.min(np.abs(d)) < SINGULAR_DET:
        raise SingularLoop(f"determinant modulus {np.min(np.abs(d)):.3e} on the circle")
    return TwistedLaurentLoop(samples_to_coeffs(si, g.M), g.dropped_tail)


@dataclass(frozen=True)
class LoopAlgebraForm:
    """A 1-form t -> sum_{n=n_min}^{n_max} A_n(t) lambda^n dt.

    ``fn(t)`` returns an array of shape (n_max - n_min + 1, 2, 2).
    """

    fn: Callable
    n_min: int
    n_max: int

    def coefficients(self, t):
        c = np.asarray(self.fn(t), dtype=complex)
        if c.shape != (self.n_max - self.n_min + 1, 2, 2):
            raise ValueError("form returned wrong coefficient shape")
        return c

    def at_samples(self, t, lam):
        """Values A(t, lambda_j) for an array of lambda samples."""
        c = self.coefficients(t)
        n = np.arange(self.n_min, self.n_max + 1)
        return np.einsum("jn,nab->jab", lam[:, None] ** n, c)

    @classmethod
    def constant(cls, terms):
        lo, hi = min(terms), max(terms)
        c = np.zeros((hi - lo + 1, 2, 2), dtype=complex)
        for n, m in terms.items():
            c[n - lo] = m
        return cls(lambda t, _c=c: _c, lo, hi)


def _rk4_path(form, ts, steps_per_unit, lam):
    """Integrate X' = X A(t) from ts[0] through each ts[k] at every lambda sample.

    Returns samples of shape (len(ts), K, 2, 2).  Points are visited in the
    order given; the first one is the initial point with X = I.
    """
    K = len(lam)
    out = np.empty((len(ts), K, 2, 2), dtype=complex)
    X = np.broadcast_to(I2, (K, 2, 2)).copy()
    out[0] = X
    cache = {}

    def A(t):
        key = float(t)
        if key not in cache:
            cache[key] = form.at_samples(t, lam)
        return cache[key]

    for k in range(1, len(ts)):
        a, b = float(ts[k - 1]), float(ts[k])
        n = max(1, int(np.ceil(abs(b - a) * steps_per_unit)))
        dt = (b - a) / n
        for s in range(n):
            t = a + s * dt
            A0, Am, A1 = A(t), A(t + dt / 2), A(t + dt)
            k1 = X @ A0
            k2 = (X + 0.5 * dt * k1) @ Am
            k3 = (X + 0.5 * dt * k2) @ Am
            k4 = (X + dt * k3) @ A1
            X = X + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        cache.clear()
        out[k] = X
    return out


def integrate_loop_ode(form, t0, t1, steps, M=DEFAULT_M, K=DEFAULT_SAMPLES):
    """X(t1) for X^{-1} X' = form, X(t0) = I, with `steps` RK4 steps."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if max(-form.n_min, form.n_max) > M:
        raise ValueError("form band exceeds truncation order")
    s = _rk4_fixed(form, t0, t1, steps, circle_points(K))
    return TwistedLaurentLoop(samples_to_coeffs(s, M))


def _rk4_fixed(form, t0, t1, steps, lam):
    X = np.broadcast_to(I2, (len(lam), 2, 2)).copy()
    dt = (t1 - t0) / steps
    for s in range(steps):
        t = t0 + s * dt
        A0 = form.at_samples(t, lam)
        Am = form.at_samples(t + dt / 2, lam)
        A1 = form.at_samples(t + dt, lam)
        k1 = X @ A0
        k2 = (X + 0.5 * dt * k1) @ Am
        k3 = (X + 0.5 * dt * k2) @ Am
        k4 = (X + dt * k3) @ A1
        X = X + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return X


def integrate_loop_path(form, ts, t0, steps_per_unit=DEFAULT_STEPS_PER_UNIT,
                        K=DEFAULT_SAMPLES):
    """Circle samples of X(t) for every t in the ascending array ts.

    X(t0) = I and t0 must be one of the ts.  Integration proceeds outward
    from t0 in both directions.  Returns shape (len(ts), K, 2, 2).
    """
    ts = np.asarray(ts, dtype=float)
    hits = np.flatnonzero(np.isclose(ts, t0, rtol=0, atol=1e-12))
    if len(hits) == 0:
        raise ValueError("base point is not a grid sample")
    i0 = int(hits[0])
    lam = circle_points(K)
    out = np.empty((len(ts), K, 2, 2), dtype=complex)
    out[i0:] = _rk4_path(form, ts[i0:], steps_per_unit, lam)
    out[:i0 + 1] = _rk4_path(form, ts[i0::-1], steps_per_unit, lam)[::-1]
    return out


def toeplitz_system(g, M):
    """Block matrix T[n, m] = g_{n-m}, n, m = 0..M, as (..., 2(M+1), 2(M+1))."""
    n = np.arange(M + 1)
    idx = n[:, None] - n[None, :] + M
    blocks = g[..., idx, :, :]  # (..., M+1, M+1, 2, 2)
    blocks = np.swapaxes(blocks, -3, -2)  # (..., M+1, 2, M+1, 2)
    return blocks.reshape(g.shape[:-3] + (2 * (M + 1), 2 * (M + 1)))


def birkhoff_plus_inverse(g, M, cond_limit=BIG_CELL_COND):
    """Solve the block-Toeplitz system for K = H_+^{-1} (batched).

    g has shape (..., 2M+1, 2, 2).  Returns (K coefficients for powers 0..M
    with shape (..., M+1, 2, 2), condition numbers, ok mask).
    """
    T = toeplitz_system(g, M)
    try:
        Tinv = np.linalg.inv(T)
    except np.linalg.LinAlgError:
        if T.ndim > 2:
            raise
        raise OutsideBigCell("Toeplitz system is exactly singular")
    cond = np.abs(T).sum(axis=-2).max(axis=-1) * np.abs(Tinv).sum(axis=-2).max(axis=-1)
    Kc = Tinv[..., :, :2].reshape(g.shape[:-3] + (M + 1, 2, 2))
    Kc = enforce_parity(Kc, 0)
    ok = np.isfinite(cond) & (cond <= cond_limit)
    return Kc, cond, ok


def birkhoff_split(g, cond_limit=BIG_CELL_COND):
    """Factor g = H_- H_+ with H_-(infinity) = I.

    H_- has powers <= 0 only and constant term I; H_+ has powers >= 0.
    """
    M = g.M
    Kc, cond, ok = birkhoff_plus_inverse(g.coeffs, M, cond_limit)
    if not ok:
        raise OutsideBigCell(f"Toeplitz condition number {cond:.3e}")
    Kfull = np.zeros((2 * M + 1, 2, 2), dtype=complex)
    Kfull[M:] = Kc
    K = TwistedLaurentLoop(Kfull)
    H_plus = loop_inverse(K)
    H_plus = TwistedLaurentLoop(np.where(np.arange(-M, M + 1)[:, None, None] >= 0,
                                         H_plus.coeffs, 0), H_plus.dropped_tail)
    full, n0 = convolve(g.coeffs, -M, Kc, 0)
    Hm, _ = truncate(full, n0, -M, 0)
    Hm_full = np.zeros((2 * M + 1, 2, 2), dtype=complex)
    Hm_full[:M + 1] = Hm
    return TwistedLaurentLoop(Hm_full, g.dropped_tail), H_plus
