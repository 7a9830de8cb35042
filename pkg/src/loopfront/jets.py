"""Jets of wave maps into the sphere, written in the chart N = delta (u, v, 1).

A germ is determined by its pure Taylor coefficients: a_{k0} (x^k in u),
a_{kk} (y^k in u) and the same for v.  Every mixed coefficient is forced by

    (1 + u^2 + v^2) u_xy = 2 u u_x u_y + v (u_x v_y + u_y v_x)

and its mirror with u and v swapped.  Coefficients are indexed the usual way:
a_{ki} multiplies x^{k-i} y^i, so a_{ki} lives at ``u.c[k - i, i]``.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import polynomial as npoly

from .series import Series2, unit_lift

MAX_EXACT_ORDER = 8


def _num(x, exact):
    if not exact:
        return float(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    return Fraction(x).limit_denominator(10 ** 12) if isinstance(x, str) else Fraction(float(x))


@dataclass(frozen=True)
class JetCoeffs:
    """Free jet parameters; each array has length n (index i-1 holds degree i)."""

    a1: tuple  # a_{i0}
    a2: tuple  # a_{ii}
    b1: tuple  # b_{i0}
    b2: tuple  # b_{ii}
    exact: bool = True

    def __post_init__(self):
        n = len(self.a1)
        if not (len(self.a2) == len(self.b1) == len(self.b2) == n) or n < 1:
            raise ValueError("coefficient arrays must share a length n >= 1")
        for name in ("a1", "a2", "b1", "b2"):
            object.__setattr__(self, name,
                               tuple(_num(x, self.exact) for x in getattr(self, name)))

    @property
    def order(self):
        return len(self.a1)

    @classmethod
    def from_table(cls, row, order=None, exact=True):
        """From (a10,a20,a30; a11,a22,a33; b10,b20,b30; b11,b22,b33) style rows.

        ``row`` is a flat sequence of 4k numbers grouped as a1, a2, b1, b2.
        Missing higher orders up to ``order`` are zero.
        """
        row = list(row)
        if len(row) % 4:
            raise ValueError("row length must be a multiple of 4")
        k = len(row) // 4
        n = max(k, order or k)
        groups = [row[i * k:(i + 1) * k] + [0] * (n - k) for i in range(4)]
        return cls(*groups, exact=exact)

    def padded(self, n):
        """Same jet with zero free coefficients up to order n."""
        if n <= self.order:
            return JetCoeffs(self.a1[:n], self.a2[:n], self.b1[:n], self.b2[:n], self.exact)
        z = [0] * (n - self.order)
        return JetCoeffs(list(self.a1) + z, list(self.a2) + z,
                         list(self.b1) + z, list(self.b2) + z, self.exact)

    def get(self, name, i):
        """Named access, e.g. get('a', (3, 0)) -> a30; zero beyond the order."""
        k, j = i
        arr = {("a", 0): self.a1, ("a", 1): self.a2, ("b", 0): self.b1, ("b", 1): self.b2}
        if j not in (0, k):
            raise KeyError("only pure coefficients are free")
        seq = arr[(name, 0 if j == 0 else 1)]
        zero = Fraction(0) if self.exact else 0.0
        return seq[k - 1] if k <= len(seq) else zero


@dataclass(frozen=True)
class BivariateJet:
    u: Series2
    v: Series2

    @property
    def order(self):
        return self.u.order

    @property
    def exact(self):
        return self.u.exact

    def a(self, k, i):
        return self.u.c[k - i, i]

    def b(self, k, i):
        return self.v.c[k - i, i]

    def normal_series(self):
        return unit_lift(self.u, self.v)


@dataclass(frozen=True)
class PolyCauchyData:
    """Diagonal data u(t,t) = sum alpha_i t^i, u_x(t,t) = sum beta_i t^{i-1}, same for v."""

    alpha: tuple
    beta: tuple
    lam: tuple
    mu: tuple

    def __post_init__(self):
        if not (len(self.alpha) == len(self.beta) == len(self.lam) == len(self.mu)):
            raise ValueError("Cauchy coefficient arrays differ in length")

    @property
    def order(self):
        return len(self.alpha)


def _fill_mixed(uc, vc, k, exact):
    """Set the mixed coefficients of total degree k from lower degrees."""
    u = Series2(uc, k, exact)
    v = Series2(vc, k, exact)
    ux, uy, vx, vy = u.dx(), u.dy(), v.dx(), v.dy()
    w = u * u + v * v
    cross = ux * vy + uy * vx
    ru = 2 * u * ux * uy + v * cross - w * ux.dy()
    rv = 2 * v * vx * vy + u * cross - w * vx.dy()
    d = k - 2
    for p in range(d + 1):
        q = d - p
        den = (p + 1) * (q + 1)
        uc[p + 1, q + 1] = ru.c[p, q] / den
        vc[p + 1, q + 1] = rv.c[p, q] / den


def _empty(n, exact):
    if exact:
        a = np.empty((n + 1, n + 1), dtype=object)
        a.fill(Fraction(0))
        return a
    return np.zeros((n + 1, n + 1))


def expand_jet(c: JetCoeffs) -> BivariateJet:
    n = c.order
    exact = c.exact and n <= MAX_EXACT_ORDER
    uc, vc = _empty(n, exact), _empty(n, exact)
    for k in range(1, n + 1):
        uc[k, 0] = _num(c.a1[k - 1], exact)
        uc[0, k] = _num(c.a2[k - 1], exact)
        vc[k, 0] = _num(c.b1[k - 1], exact)
        vc[0, k] = _num(c.b2[k - 1], exact)
    for k in range(2, n + 1):
        _fill_mixed(uc, vc, k, exact)
    return BivariateJet(Series2(uc, n, exact), Series2(vc, n, exact))


def jet_to_poly_cauchy(c: JetCoeffs) -> PolyCauchyData:
    j = expand_jet(c)
    n = j.order
    alpha, beta, lam, mu = [], [], [], []
    for i in range(1, n + 1):
        alpha.append(sum(j.a(i, k) for k in range(i + 1)))
        beta.append(sum((i - k) * j.a(i, k) for k in range(i)))
        lam.append(sum(j.b(i, k) for k in range(i + 1)))
        mu.append(sum((i - k) * j.b(i, k) for k in range(i)))
    return PolyCauchyData(tuple(alpha), tuple(beta), tuple(lam), tuple(mu))


def poly_cauchy_to_jet(d: PolyCauchyData, exact=True) -> JetCoeffs:
    n = d.order
    exact = exact and n <= MAX_EXACT_ORDER
    uc, vc = _empty(n, exact), _empty(n, exact)
    for i in range(1, n + 1):
        if i >= 2:
            _fill_mixed(uc, vc, i, exact)
        for cc, s_val, s_der in ((uc, d.alpha, d.beta), (vc, d.lam, d.mu)):
            mixed = [cc[i - k, k] for k in range(1, i)]
            pure_x = (_num(s_der[i - 1], exact) - sum((i - k) * m for k, m in zip(range(1, i), mixed))) / i
            cc[i, 0] = pure_x
            cc[0, i] = _num(s_val[i - 1], exact) - pure_x - sum(mixed)
    a1 = [uc[i, 0] for i in range(1, n + 1)]
    a2 = [uc[0, i] for i in range(1, n + 1)]
    b1 = [vc[i, 0] for i in range(1, n + 1)]
    b2 = [vc[0, i] for i in range(1, n + 1)]
    return JetCoeffs(a1, a2, b1, b2, exact=exact)


def jet_eval(j: BivariateJet, x=0.0, y=0.0, max_order=3):
    """N and its partials d^{i+j}N/dx^i dy^j, i, j <= max_order, at (x, y).

    Partials of total degree above the jet order are omitted.  At the origin
    an exact jet is differentiated in rational arithmetic before conversion.
    """
    u, v = j.u, j.v
    if x != 0 or y != 0:
        u, v = u.to_float().shift(float(x), float(y)), v.to_float().shift(float(x), float(y))
    N = unit_lift(u, v)
    parts = {}
    for i in range(max_order + 1):
        for k in range(max_order + 1):
            if i + k <= j.order:
                parts[(i, k)] = np.array([float(s.partial(i, k)) for s in N])
    return parts[(0, 0)], parts


def _lift(uv):
    """Chain rule for N = delta (u, v, 1) given partial derivatives of u and v.

    ``uv`` maps keys '', 'x', 'y', 'xx', 'xy' to (u, v) arrays.  Returns the
    same keys for N with a trailing axis of length 3.
    """
    u, v = uv[""]
    delta = 1.0 / np.sqrt(1.0 + u * u + v * v)
    P = {"": np.stack([u, v, np.ones_like(u)], -1)}
    for k in ("x", "y", "xx", "xy"):
        if k in uv:
            uk, vk = uv[k]
            P[k] = np.stack([uk, vk, np.zeros_like(uk)], -1)
    w1 = {k: 2 * (u * uv[k][0] + v * uv[k][1]) for k in ("x", "y") if k in uv}
    d1 = {k: -0.5 * delta ** 3 * w1[k] for k in w1}
    out = {"": delta[..., None] * P[""]}
    for k in w1:
        out[k] = d1[k][..., None] * P[""] + delta[..., None] * P[k]
    for k, (i, m) in (("xx", ("x", "x")), ("xy", ("x", "y"))):
        if k not in uv:
            continue
        wij = 2 * (uv[i][0] * uv[m][0] + u * uv[k][0] + uv[i][1] * uv[m][1] + v * uv[k][1])
        dij = 0.75 * delta ** 5 * w1[i] * w1[m] - 0.5 * delta ** 3 * wij
        out[k] = (dij[..., None] * P[""] + d1[i][..., None] * P[m]
                  + d1[m][..., None] * P[i] + delta[..., None] * P[k])
    return out


def _diag_poly(s: Series2):
    """Coefficients in t of s(t, t)."""
    n = s.order
    out = np.zeros(n + 1)
    for p in range(n + 1):
        for q in range(n + 1 - p):
            out[p + q] += float(s.c[p, q])
    return out


class DiagonalData:
    """Fast evaluation of N, N_x, N_y, N_xx, N_xy along the diagonal (t, t)."""

    def __init__(self, j: BivariateJet):
        u, v = j.u.to_float(), j.v.to_float()
        self._polys = {
            "": (u, v),
            "x": (u.dx(), v.dx()),
            "y": (u.dy(), v.dy()),
            "xx": (u.dx().dx(), v.dx().dx()),
            "xy": (u.dx().dy(), v.dx().dy()),
        }
        self._polys = {k: tuple(_diag_poly(s) for s in pair) for k, pair in self._polys.items()}

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        uv = {k: (npoly.polyval(t, p[0]), npoly.polyval(t, p[1])) for k, p in self._polys.items()}
        return _lift(uv)

    def N0(self, t):
        return self(t)[""]

    def V(self, t):
        return self(t)["x"]

    def N0_prime(self, t):
        d = self(t)
        return d["x"] + d["y"]

    def V_prime(self, t):
        d = self(t)
        return d["xx"] + d["xy"]
