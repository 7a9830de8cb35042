"""Truncated bivariate Taylor series.

``c[p, q]`` is the coefficient of x^p y^q; only p + q <= order is kept.
Entries may be Fractions (object arrays) or floats, so the same code serves
exact jet work and numerical fits.
"""
from fractions import Fraction
from math import comb

import numpy as np


def _zeros(n, exact):
    if exact:
        a = np.empty((n + 1, n + 1), dtype=object)
        a.fill(Fraction(0))
        return a
    return np.zeros((n + 1, n + 1))


def _mask(n):
    p, q = np.indices((n + 1, n + 1))
    return p + q <= n


class Series2:
    __slots__ = ("c", "order", "exact")

    def __init__(self, c, order=None, exact=None):
        c = np.asarray(c)
        n = c.shape[0] - 1 if order is None else order
        if exact is None:
            exact = c.dtype == object
        out = _zeros(n, exact)
        m = min(n, c.shape[0] - 1)
        out[:m + 1, :m + 1] = c[:m + 1, :m + 1]
        out[~_mask(n)] = Fraction(0) if exact else 0.0
        self.c, self.order, self.exact = out, n, exact

    @classmethod
    def const(cls, value, order, exact=True):
        s = cls(_zeros(order, exact), order, exact)
        s.c[0, 0] = value
        return s

    @classmethod
    def variable(cls, which, order, exact=True):
        s = cls(_zeros(order, exact), order, exact)
        if order >= 1:
            s.c[(1, 0) if which == "x" else (0, 1)] = 1
        return s

    def _coerce(self, other):
        if isinstance(other, Series2):
            return other
        return Series2.const(other, self.order, self.exact)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.order, o.order)
        return Series2(self.c[:n + 1, :n + 1] + o.c[:n + 1, :n + 1], n, self.exact)

    __radd__ = __add__

    def __neg__(self):
        return Series2(-self.c, self.order, self.exact)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series2):
            return Series2(self.c * other, self.order, self.exact)
        n = min(self.order, other.order)
        out = _zeros(n, self.exact)
        a, b = self.c, other.c
        for p in range(n + 1):
            for q in range(n + 1 - p):
                if a[p, q] != 0:
                    out[p:, q:] += a[p, q] * b[:n + 1 - p, :n + 1 - q]
        return Series2(out, n, self.exact)

    __rmul__ = __mul__

    def dx(self):
        n = self.order
        if n == 0:
            return Series2(_zeros(0, self.exact), 0, self.exact)
        p = np.arange(1, n + 1)[:, None]
        return Series2(self.c[1:, :n] * p, n - 1, self.exact)

    def dy(self):
        n = self.order
        if n == 0:
            return Series2(_zeros(0, self.exact), 0, self.exact)
        q = np.arange(1, n + 1)[None, :]
        return Series2(self.c[:n, 1:] * q, n - 1, self.exact)

    def partial(self, i, j):
        """Value of d^{i+j}/dx^i dy^j at the origin."""
        if i + j > self.order:
            raise ValueError("derivative exceeds series order")
        from math import factorial
        return self.c[i, j] * factorial(i) * factorial(j)

    @property
    def value(self):
        return self.c[0, 0]

    def truncate(self, n):
        return Series2(self.c, min(n, self.order), self.exact)

    def to_float(self):
        return Series2(self.c.astype(float), self.order, False)

    def __call__(self, x, y):
        n = self.order
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        out = np.zeros(np.broadcast(x, y).shape)
        for p in range(n + 1):
            for q in range(n + 1 - p):
                v = self.c[p, q]
                if v != 0:
                    out = out + float(v) * x ** p * y ** q
        return out

    def shift(self, x0, y0):
        """Re-expand about (x0, y0); exact for polynomials."""
        n = self.order
        out = _zeros(n, self.exact)
        for i in range(n + 1):
            for j in range(n + 1 - i):
                v = self.c[i, j]
                if v == 0:
                    continue
                for p in range(i + 1):
                    for q in range(j + 1):
                        out[p, q] += v * comb(i, p) * comb(j, q) * x0 ** (i - p) * y0 ** (j - q)
        return Series2(out, n, self.exact)

    def compose(self, taylor):
        """f(self) where taylor[k] = f^{(k)}(s0)/k! about s0 = self.value."""
        n = self.order
        d = self - self.value
        out = Series2.const(taylor[0], n, self.exact)
        pw = Series2.const(1, n, self.exact)
        for k in range(1, n + 1):
            pw = pw * d
            out = out + pw * taylor[k]
        return out

    def __repr__(self):
        return f"Series2(order={self.order}, exact={self.exact})"


def inv_sqrt_taylor(w0, n, exact=True):
    """Taylor coefficients of (1 + w)^{-1/2} about w0."""
    if exact and w0 == 0:
        out, c = [], Fraction(1)
        for k in range(n + 1):
            out.append(c)
            c = c * (Fraction(-1, 2) - k) / (k + 1)
        return out
    base = 1.0 + float(w0)
    out, c = [], 1.0
    for k in range(n + 1):
        out.append(c * base ** (-0.5 - k))
        c = c * (-0.5 - k) / (k + 1)
    return out


def unit_lift(u, v):
    """N = delta (u, v, 1) with delta = (1 + u^2 + v^2)^{-1/2}, as three series."""
    w = u * u + v * v
    delta = w.compose(inv_sqrt_taylor(w.value, w.order, u.exact and v.exact))
    return [delta * u, delta * v, delta]


def vdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vcross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def vdet(a, b, c):
    return vdot(vcross(a, b), c)


def vdx(a):
    return [s.dx() for s in a]


def vdy(a):
    return [s.dy() for s in a]
