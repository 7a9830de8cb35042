"""OBJ / PLY mesh output with per-vertex sigma and orientation sign."""
import csv

import numpy as np

from . import fd

FMT = "%.17g"


def _g(x):
    return FMT % float(x)


def orientation(s):
    """sign <N, f_x x f_y>, the side of the singular set a vertex lies on."""
    g = s.grid
    fx = fd.d1(s.f, g.hx, 0)
    fy = fd.d1(s.f, g.hy, 1)
    o = np.sign(np.einsum("...i,...i", s.N, np.cross(fx, fy)))
    return o.astype(int)


def triangles(nx, ny):
    """Two triangles per grid cell, 0-based vertex ids in row-major order."""
    i, j = np.meshgrid(np.arange(nx - 1), np.arange(ny - 1), indexing="ij")
    v00 = (i * ny + j).ravel()
    v10 = ((i + 1) * ny + j).ravel()
    v01 = (i * ny + j + 1).ravel()
    v11 = ((i + 1) * ny + j + 1).ravel()
    return np.concatenate([np.stack([v00, v10, v11], 1), np.stack([v00, v11, v01], 1)])


def _vertex_table(s):
    X, Y = s.grid.mesh()
    f = s.f.reshape(-1, 3)
    N = s.N.reshape(-1, 3)
    sig = np.nan_to_num(np.asarray(s.sigma, float)).ravel()
    return X.ravel(), Y.ravel(), f, N, sig, orientation(s).ravel()


def export_mesh(s, path, fmt="obj", binary=False, polylines=None):
    """Write the mesh; returns the list of files written.

    OBJ gets a sidecar ``<path>.csv`` with x,y,fx,fy,fz,Nx,Ny,Nz,sigma,orient.
    If ``polylines`` is given they go to ``<path>.polylines.csv``.
    """
    path = str(path)
    nx, ny = s.grid.shape
    X, Y, f, N, sig, ori = _vertex_table(s)
    tri = triangles(nx, ny)
    written = [path]
    if fmt == "obj":
        with open(path, "w") as fh:
            for p in f:
                fh.write(f"v {_g(p[0])} {_g(p[1])} {_g(p[2])}\n")
            for t in tri + 1:
                fh.write(f"f {t[0]} {t[1]} {t[2]}\n")
        side = path + ".csv"
        with open(side, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["x", "y", "fx", "fy", "fz", "Nx", "Ny", "Nz", "sigma", "orient"])
            for k in range(len(X)):
                w.writerow([_g(X[k]), _g(Y[k]), *map(_g, f[k]), *map(_g, N[k]), _g(sig[k]), int(ori[k])])
        written.append(side)
    elif fmt == "ply":
        _write_ply(path, f, N, sig, ori, tri, binary)
    else:
        raise ValueError(f"unknown mesh format {fmt!r}")
    if polylines is not None:
        pl = path + ".polylines.csv"
        write_polylines(polylines, pl)
        written.append(pl)
    return written


def _write_ply(path, f, N, sig, ori, tri, binary):
    head = ["ply", "format " + ("binary_little_endian" if binary else "ascii") + " 1.0",
            f"element vertex {len(f)}",
            "property float x", "property float y", "property float z",
            "property float nx", "property float ny", "property float nz",
            "property float sigma", "property char orient",
            f"element face {len(tri)}", "property list uchar int vertex_indices", "end_header"]
    if binary:
        with open(path, "wb") as fh:
            fh.write(("\n".join(head) + "\n").encode("ascii"))
            vt = np.zeros(len(f), dtype=[("p", "<f4", 3), ("n", "<f4", 3), ("s", "<f4"), ("o", "i1")])
            vt["p"], vt["n"], vt["s"], vt["o"] = f, N, sig, ori
            fh.write(vt.tobytes())
            ft = np.zeros(len(tri), dtype=[("c", "u1"), ("v", "<i4", 3)])
            ft["c"], ft["v"] = 3, tri
            fh.write(ft.tobytes())
    else:
        with open(path, "w") as fh:
            fh.write("\n".join(head) + "\n")
            for k in range(len(f)):
                fh.write(" ".join(map(_g, (*f[k], *N[k], sig[k]))) + f" {int(ori[k])}\n")
            for t in tri:
                fh.write(f"3 {t[0]} {t[1]} {t[2]}\n")


def write_polylines(polylines, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["curve_id", "x", "y", "fx", "fy", "fz"])
        for cid, pl in enumerate(polylines):
            for (x, y), p in zip(pl.xy, pl.f):
                w.writerow([cid, _g(x), _g(y), *map(_g, p)])


def read_ply_header(path):
    """Parse a PLY header into (format, {element: count}, [vertex property names])."""
    with open(path, "rb") as fh:
        lines = []
        while True:
            line = fh.readline().decode("ascii").strip()
            lines.append(line)
            if line == "end_header":
                break
    fmt = lines[1].split()[1]
    counts, props, cur = {}, [], None
    for ln in lines:
        parts = ln.split()
        if parts and parts[0] == "element":
            cur = parts[1]
            counts[cur] = int(parts[2])
        elif parts and parts[0] == "property" and cur == "vertex":
            props.append(parts[-1])
    return fmt, counts, props
