"""Identification of R^3 with su(2).

Vectors are numpy arrays of shape (..., 3); matrices have shape (..., 2, 2).
The basis e1, e2, e3 is orthonormal for <X, Y> = -2 tr(XY) and satisfies
[e1, e2] = e3 cyclically, so the matrix bracket is the cross product.
"""
import numpy as np

from .errors import NotInSu2, NotUnitary

TOL = 1e-8

e1 = 0.5 * np.array([[0, 1j], [1j, 0]])
e2 = 0.5 * np.array([[0, -1], [1, 0]], dtype=complex)
e3 = 0.5 * np.array([[1j, 0], [0, -1j]])
BASIS = np.stack([e1, e2, e3])
I2 = np.eye(2, dtype=complex)
# P = diag(-1, 1) implements the twisting automorphism Ad_P
P = np.diag([-1.0, 1.0]).astype(complex)


def inner(X, Y):
    """<X, Y> = -2 tr(XY), real part."""
    return (-2.0 * np.einsum("...ij,...ji->...", X, Y)).real


def vec_to_su2(v):
    v = np.asarray(v, dtype=float)
    return np.einsum("...k,kij->...ij", v.astype(complex), BASIS)


def su2_to_vec(m, tol=TOL, check=True):
    """Components of m in the e1, e2, e3 basis.

    Raises NotInSu2 when m is not trace-free anti-Hermitian within `tol`
    (max-entry norm).
    """
    m = np.asarray(m, dtype=complex)
    if check:
        herm = m + np.conj(np.swapaxes(m, -1, -2))
        tr = m[..., 0, 0] + m[..., 1, 1]
        res = max(np.max(np.abs(herm), initial=0.0), np.max(np.abs(tr), initial=0.0))
        if not np.isfinite(res) or res > tol:
            raise NotInSu2(f"su(2) residual {res:.3e} exceeds {tol:g}")
    # -2 tr(m e_k) written out entrywise
    x = (m[..., 0, 1] + m[..., 1, 0]).imag
    y = (m[..., 1, 0] - m[..., 0, 1]).real
    z = (m[..., 0, 0] - m[..., 1, 1]).imag
    return np.stack([x, y, z], axis=-1)


def unitarity_residual(F):
    F = np.asarray(F, dtype=complex)
    G = np.conj(np.swapaxes(F, -1, -2)) @ F - I2
    det = F[..., 0, 0] * F[..., 1, 1] - F[..., 0, 1] * F[..., 1, 0]
    return max(np.max(np.abs(G), initial=0.0), np.max(np.abs(det - 1), initial=0.0))


def adjoint_rotate(F, v, tol=TOL, check=True):
    """Ad_F v = F v F^{-1} for F in SU(2); broadcasts over leading axes."""
    F = np.asarray(F, dtype=complex)
    if check:
        res = unitarity_residual(F)
        if not np.isfinite(res) or res > tol:
            raise NotUnitary(f"unitarity residual {res:.3e} exceeds {tol:g}")
    Fi = np.conj(np.swapaxes(F, -1, -2))
    return su2_to_vec(F @ vec_to_su2(v) @ Fi, check=False)


def rotation_matrix(F):
    """3x3 matrix R with Ad_F v = R v, columns Ad_F e_k."""
    F = np.asarray(F, dtype=complex)
    Fi = np.conj(np.swapaxes(F, -1, -2))
    cols = [su2_to_vec(F @ B @ Fi, check=False) for B in BASIS]
    return np.stack(cols, axis=-1)


def su2_from_rotation(R):
    """Lift a rotation matrix to F in SU(2) with Ad_F = R (sign is arbitrary)."""
    R = np.asarray(R, dtype=float)
    # quaternion from rotation; e_k corresponds to half of i sigma-type units
    tr = np.trace(R)
    w = 0.5 * np.sqrt(max(1.0 + tr, 0.0))
    if w > 1e-6:
        qx = (R[2, 1] - R[1, 2]) / (4 * w)
        qy = (R[0, 2] - R[2, 0]) / (4 * w)
        qz = (R[1, 0] - R[0, 1]) / (4 * w)
    else:
        k = int(np.argmax(np.diag(R)))
        i, j = (k + 1) % 3, (k + 2) % 3
        q = np.zeros(3)
        q[k] = 0.5 * np.sqrt(max(1.0 + R[k, k] - R[i, i] - R[j, j], 0.0))
        w = (R[j, i] - R[i, j]) / (4 * q[k])
        q[i] = (R[i, k] + R[k, i]) / (4 * q[k])
        q[j] = (R[j, k] + R[k, j]) / (4 * q[k])
        qx, qy, qz = q
    # exp(theta * u-hat) = cos(theta/2) I + 2 sin(theta/2) u-hat, u-hat = u . e
    return w * I2 + 2.0 * vec_to_su2([qx, qy, qz])


def cross(u, v):
    return np.cross(np.asarray(u, dtype=float), np.asarray(v, dtype=float))


def bracket(X, Y):
    return X @ Y - Y @ X


def exp_su2(v):
    """exp of vec_to_su2(v): cos(|v|/2) I + 2 sin(|v|/2) v-hat."""
    v = np.asarray(v, dtype=float)
    th = np.linalg.norm(v, axis=-1)
    c = np.cos(th / 2)
    s = np.where(th > 0, 2 * np.sin(th / 2) / np.where(th > 0, th, 1), 1.0)
    return c[..., None, None] * I2 + s[..., None, None] * vec_to_su2(v)
