"""Finite differences on uniform grids (order 2 or 4, one-sided at the edges)."""
import numpy as np

# first derivative, fourth order: interior and the two edge rows
_D1_IN = np.array([1, -8, 0, 8, -1]) / 12.0
_D1_E0 = np.array([-25, 48, -36, 16, -3]) / 12.0
_D1_E1 = np.array([-3, -10, 18, -6, 1]) / 12.0
# second derivative, fourth order
_D2_IN = np.array([-1, 16, -30, 16, -1]) / 12.0
_D2_E0 = np.array([45, -154, 214, -156, 61, -10]) / 12.0
_D2_E1 = np.array([10, -15, -4, 14, -6, 1]) / 12.0


def _interior(a, axis, stencil):
    """sum_k stencil[k] * a[i - r + k] for the interior indices i = r..n-r-1."""
    n, m = a.shape[axis], len(stencil)
    out = 0
    for k, w in enumerate(stencil):
        if w:
            out = out + w * np.take(a, np.arange(k, n - m + 1 + k), axis=axis)
    return out


def _set(out, axis, idx, val):
    sl = [slice(None)] * out.ndim
    sl[axis] = idx
    out[tuple(sl)] = val


def _take(a, axis, idx):
    return np.take(a, idx, axis=axis)


def d1(a, h, axis, order=4):
    a = np.asarray(a)
    n = a.shape[axis]
    if order == 2 or n < 5:
        return np.gradient(a, h, axis=axis, edge_order=2 if n >= 3 else 1)
    out = np.empty_like(a, dtype=np.result_type(a, float))
    _set(out, axis, slice(2, n - 2), _interior(a, axis, _D1_IN))
    first = lambda idxs, w: sum(wk * _take(a, axis, i) for wk, i in zip(w, idxs))
    _set(out, axis, 0, first(range(0, 5), _D1_E0))
    _set(out, axis, 1, first(range(0, 5), _D1_E1))
    _set(out, axis, n - 1, -first(range(n - 1, n - 6, -1), _D1_E0))
    _set(out, axis, n - 2, -first(range(n - 1, n - 6, -1), _D1_E1))
    return out / h


def d2(a, h, axis, order=4):
    a = np.asarray(a)
    n = a.shape[axis]
    if order == 2 or n < 6:
        return _d2_second(a, h, axis)
    out = np.empty_like(a, dtype=np.result_type(a, float))
    _set(out, axis, slice(2, n - 2), _interior(a, axis, _D2_IN))
    first = lambda idxs, w: sum(wk * _take(a, axis, i) for wk, i in zip(w, idxs))
    _set(out, axis, 0, first(range(0, 6), _D2_E0))
    _set(out, axis, 1, first(range(0, 6), _D2_E1))
    _set(out, axis, n - 1, first(range(n - 1, n - 7, -1), _D2_E0))
    _set(out, axis, n - 2, first(range(n - 1, n - 7, -1), _D2_E1))
    return out / (h * h)


def _d2_second(a, h, axis):
    n = a.shape[axis]
    out = np.empty_like(a, dtype=np.result_type(a, float))
    _set(out, axis, slice(1, n - 1), _interior(a, axis, np.array([1.0, -2.0, 1.0])))
    if n >= 4:
        w = np.array([2.0, -5.0, 4.0, -1.0])
        _set(out, axis, 0, sum(wk * _take(a, axis, i) for wk, i in zip(w, range(4))))
        _set(out, axis, n - 1, sum(wk * _take(a, axis, i) for wk, i in zip(w, range(n - 1, n - 5, -1))))
    else:
        _set(out, axis, 0, _take(out, axis, 1))
        _set(out, axis, n - 1, _take(out, axis, n - 2))
    return out / (h * h)


def partials(a, hx, hy, order=4, second=False):
    """Dict with keys 'x', 'y' (and 'xx', 'xy', 'yy') for a field on axes 0, 1."""
    out = {"x": d1(a, hx, 0, order), "y": d1(a, hy, 1, order)}
    if second:
        out["xx"] = d2(a, hx, 0, order)
        out["yy"] = d2(a, hy, 1, order)
        out["xy"] = d1(out["x"], hy, 1, order)
    return out


def cumulative_integral(g, h, axis, i0, order=4):
    """Integral of samples g from index i0 along axis, signed, zero at i0."""
    g = np.moveaxis(np.asarray(g, dtype=float), axis, 0)
    n = g.shape[0]
    seg = np.empty((n - 1,) + g.shape[1:])
    if order == 2 or n < 4:
        seg[:] = 0.5 * h * (g[:-1] + g[1:])
    else:
        seg[1:n - 2] = h / 24 * (-g[:n - 3] + 13 * g[1:n - 2] + 13 * g[2:n - 1] - g[3:])
        seg[0] = h / 24 * (9 * g[0] + 19 * g[1] - 5 * g[2] + g[3])
        seg[n - 2] = h / 24 * (9 * g[n - 1] + 19 * g[n - 2] - 5 * g[n - 3] + g[n - 4])
    out = np.zeros_like(g)
    out[i0 + 1:] = np.cumsum(seg[i0:], axis=0)
    if i0 > 0:
        out[:i0] = -np.cumsum(seg[:i0][::-1], axis=0)[::-1]
    return np.moveaxis(out, 0, axis)
