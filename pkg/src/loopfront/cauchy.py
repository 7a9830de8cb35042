"""Potential pairs from Cauchy data along the diagonal x = y.

Three sources are supported: a unit normal N0(t) with a transverse
derivative V(t) = N_x(t, t), a direct triple (a, b, c) with optional speed
A(t), and a jet of the wave map at the origin.  All end in the same
loop-algebra form

    alpha0(t) = (c e3 + A e1 lambda + (-b e1 + a e2) lambda^{-1}) dt,

used for both chi(x) and psi(y).
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .algebra import I2, e1, e2, e3, rotation_matrix, su2_from_rotation
from .errors import DegenerateData, ZeroTransverseDerivative
from .jets import DiagonalData, JetCoeffs, expand_jet
from .loops import LoopAlgebraForm

FD_STEP = 1e-4
SAMPLE_TOL = 1e-8


def central_diff(fn, t, h=FD_STEP, k=1):
    """Five-point central difference of order k = 1..4 (vector-valued ok)."""
    f = [np.asarray(fn(t + m * h), dtype=float) for m in (-2, -1, 0, 1, 2)]
    if k == 1:
        return (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
    if k == 2:
        return (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
    if k == 3:
        return (-f[0] + 2 * f[1] - 2 * f[3] + f[4]) / (2 * h ** 3)
    if k == 4:
        return (f[0] - 4 * f[1] + 6 * f[2] - 4 * f[3] + f[4]) / h ** 4
    raise ValueError("order must be 1..4")


@dataclass
class GeometricCauchyData:
    """N0(t) unit, V(t) tangent to the sphere at N0(t), on interval I."""

    N0: Callable
    V: Callable
    interval: tuple = (-1.0, 1.0)
    N0_prime: Optional[Callable] = None
    V_prime: Optional[Callable] = None
    samples: int = 41

    def dN0(self, t):
        return self.N0_prime(t) if self.N0_prime else central_diff(self.N0, t)

    def dV(self, t):
        return self.V_prime(t) if self.V_prime else central_diff(self.V, t)

    def sample_points(self):
        return np.linspace(self.interval[0], self.interval[1], self.samples)

    def check(self, tol=SAMPLE_TOL):
        for t in self.sample_points():
            n, v = np.asarray(self.N0(t)), np.asarray(self.V(t))
            if abs(np.dot(n, n) - 1) > tol:
                raise DegenerateData(f"|N0| != 1 at t={t:.6g}")
            if abs(np.dot(n, v)) > tol * max(1.0, np.linalg.norm(v)):
                raise DegenerateData(f"V not tangent to the sphere at t={t:.6g}")


@dataclass
class AbcData:
    """Functions a, b, c, A of t; A defaults to 1.

    Any of them may be a ``numpy.polynomial.Polynomial``; classification then
    differentiates its coefficients exactly.
    """

    a: Callable
    b: Callable
    c: Callable
    A: Callable = field(default=None)
    interval: tuple = (-1.0, 1.0)
    eps: Optional[np.ndarray] = None  # per-sample sign diagnostic when derived

    def __post_init__(self):
        if self.A is None:
            self.A = np.polynomial.Polynomial([1.0])

    def values(self, t):
        return tuple(float(np.asarray(g(t))) for g in (self.a, self.b, self.c, self.A))


@dataclass(frozen=True)
class PotentialPair:
    """chi(x) dx and psi(y) dy with base point and an initial frame at it.

    ``initial_frame`` is the value of the SU(2) frame at the base point; the
    builder integrates from the identity and left-multiplies by it, which is
    a rigid motion of the output.
    """

    chi: LoopAlgebraForm
    psi: LoopAlgebraForm
    base: tuple = (0.0, 0.0)
    initial_frame: np.ndarray = field(default_factory=lambda: I2.copy())
    abc: Optional[AbcData] = None

    def __post_init__(self):
        if self.chi.n_max > 1 or self.psi.n_min < -1:
            raise ValueError("potential pair is not admissible")


def geometric_to_abc(d: GeometricCauchyData, tol=1e-10) -> AbcData:
    d.check()

    def parts(t):
        N0, V = np.asarray(d.N0(t), float), np.asarray(d.V(t), float)
        dN, dV = np.asarray(d.dN0(t), float), np.asarray(d.dV(t), float)
        A = np.linalg.norm(V)
        if A < tol:
            raise ZeroTransverseDerivative(f"|V| = {A:.3e} at t={float(t):.6g}")
        return N0, V, dN, dV, A

    def a(t):
        N0, V, dN, dV, A = parts(t)
        return np.dot(dN, np.cross(N0, V)) / A

    def b(t):
        N0, V, dN, dV, A = parts(t)
        return np.dot(V - dN, V) / A

    def c(t):
        # equivalent to the quotient formula wherever b != 0, and defined
        # also where b vanishes
        N0, V, dN, dV, A = parts(t)
        return np.dot(np.cross(dV, N0), V) / A ** 2

    def A(t):
        return parts(t)[-1]

    ts = d.sample_points()
    bs = np.array([b(t) for t in ts])
    if np.all(np.abs(bs) < tol):
        raise DegenerateData("<V - N0', V> vanishes at every sample")
    eps = np.array([np.sign(np.dot(np.cross(d.dV(t), d.N0(t)), d.V(t))) for t in ts])
    return AbcData(np.vectorize(a), np.vectorize(b), np.vectorize(c), np.vectorize(A),
                   interval=d.interval, eps=eps)


def _alpha0(a, b, c, A):
    """Coefficients of alpha0 for powers -1, 0, 1 (vectorized over t)."""
    a, b, c, A = (np.asarray(v, dtype=float) for v in (a, b, c, A))
    m1 = (-b)[..., None, None] * e1 + a[..., None, None] * e2
    z = c[..., None, None] * e3
    p1 = A[..., None, None] * e1
    return np.stack([m1, z, p1], axis=-3)


def abc_to_potential(d: AbcData, t0=0.0, initial_frame=None) -> PotentialPair:
    fn = lambda t: _alpha0(d.a(t), d.b(t), d.c(t), d.A(t))
    form = LoopAlgebraForm(fn, -1, 1)
    frame = I2.copy() if initial_frame is None else np.asarray(initial_frame, complex)
    return PotentialPair(form, form, (float(t0), float(t0)), frame, d)


class _JetDiagonal:
    """Vectorized (a, b, c, A) along the diagonal of an expanded jet."""

    def __init__(self, j, tol):
        self.D = DiagonalData(j)
        self.tol = tol

    def abcA(self, t):
        d = self.D(t)
        N0, V = d[""], d["x"]
        dN, dV = d["x"] + d["y"], d["xx"] + d["xy"]
        A = np.linalg.norm(V, axis=-1)
        if np.any(A < self.tol):
            raise ZeroTransverseDerivative(f"|N_x| below {self.tol:g} on the diagonal")
        a = np.einsum("...i,...i", dN, np.cross(N0, V)) / A
        b = np.einsum("...i,...i", V - dN, V) / A
        c = np.einsum("...i,...i", np.cross(dV, N0), V) / A ** 2
        return a, b, c, A


def jet_abc(c: JetCoeffs, order=None, interval=(-1.0, 1.0), tol=1e-10) -> AbcData:
    """Triple (a, b, c) and speed A induced on the diagonal by a jet."""
    jc = c if order is None else c.padded(order)
    jd = _JetDiagonal(expand_jet(jc), tol)
    jd.abcA(np.linspace(interval[0], interval[1], 41))  # fail early
    return AbcData(lambda t: jd.abcA(t)[0], lambda t: jd.abcA(t)[1],
                   lambda t: jd.abcA(t)[2], lambda t: jd.abcA(t)[3], interval=interval)


JET_POTENTIAL_ORDER = 6


def jet_to_potential(c: JetCoeffs, order=JET_POTENTIAL_ORDER, interval=(-0.5, 0.5),
                     tol=1e-10) -> PotentialPair:
    """Potential whose surface realizes the jet (zero-padded to ``order``).

    The initial frame is chosen so that Ad_F e3 = N(0,0) and
    Ad_F(-A e2) = N_x(0,0), which pins down the rigid motion so the built
    normal field agrees with the jet's.
    """
    jc = c.padded(max(order, c.order))
    j = expand_jet(jc)
    jd = _JetDiagonal(j, tol)
    ts = np.linspace(interval[0], interval[1], 41)
    jd.abcA(ts)
    _, b, _, _ = jd.abcA(ts)
    if np.all(np.abs(b) < tol):
        raise DegenerateData("b vanishes along the sampled diagonal")

    def fn(t):
        a, b, cc, A = jd.abcA(np.asarray(t, dtype=float))
        return _alpha0(a, b, cc, A)

    d0 = jd.D(np.array(0.0))
    N0, V = d0[""], d0["x"]
    col2 = -V / np.linalg.norm(V)
    # columns are the images of e1, e2, e3 under Ad_F
    R = np.column_stack([np.cross(col2, N0), col2, N0])
    F0 = su2_from_rotation(R)
    assert np.allclose(rotation_matrix(F0), R, atol=1e-10)
    abc = AbcData(lambda t: jd.abcA(t)[0], lambda t: jd.abcA(t)[1],
                  lambda t: jd.abcA(t)[2], lambda t: jd.abcA(t)[3], interval=interval)
    form = LoopAlgebraForm(fn, -1, 1)
    return PotentialPair(form, form, (0.0, 0.0), F0, abc)
