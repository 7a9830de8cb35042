"""TOML build configuration.

Sections: [cauchy] (exactly one of ``jet``, ``abc``, ``samples``), [grid],
[numerics], [output] and an optional [family].  abc functions are
coefficient lists in increasing powers of t.
"""
import csv
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
from numpy.polynomial import Polynomial

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .builder import Grid
from .cauchy import AbcData, GeometricCauchyData, abc_to_potential, geometric_to_abc, jet_to_potential
from .errors import DegenerateData
from .jets import JetCoeffs
from .loops import DEFAULT_M, DEFAULT_SAMPLES, DEFAULT_STEPS_PER_UNIT


class ConfigError(ValueError):
    """Bad or missing configuration entry; ``key`` names the offender."""

    def __init__(self, key, msg):
        super().__init__(f"[{key}] {msg}")
        self.key = key


SOURCES = ("jet", "abc", "samples")


@dataclass
class BuildConfig:
    source: str
    jet: JetCoeffs = None
    abc: dict = None          # name -> coefficient list
    samples: str = None
    t0: float = 0.0
    interval: tuple = (-1.0, 1.0)
    jet_order: int = 6
    x: tuple = (-1.0, 1.0)
    y: tuple = (-1.0, 1.0)
    nx: int = 101
    ny: int = 101
    M: int = DEFAULT_M
    circle_samples: int = DEFAULT_SAMPLES
    steps_per_unit: int = DEFAULT_STEPS_PER_UNIT
    threads: int = 0
    out_dir: str = "out"
    prefix: str = "surface"
    mesh_format: str = "obj"
    binary: bool = False
    family: dict = None
    base_dir: Path = field(default_factory=Path.cwd)

    @property
    def grid(self):
        return Grid(np.linspace(*self.x, self.nx), np.linspace(*self.y, self.ny))

    def abc_data(self):
        if self.source == "abc":
            p = {k: Polynomial(np.asarray(v, float)) for k, v in self.abc.items()}
            d = AbcData(p["a"], p["b"], p["c"], p.get("A"), interval=self.interval)
            ts = np.linspace(*self.interval, 41)
            if np.all(np.abs(d.A(ts)) < 1e-12):
                raise DegenerateData("A vanishes identically")
            if np.any(np.abs(d.A(ts)) < 1e-12):
                raise DegenerateData("A vanishes on the interval")
            return d
        if self.source == "samples":
            return geometric_to_abc(_load_samples(self.base_dir / self.samples, self.interval))
        return None

    def potential(self):
        if self.source == "jet":
            lo, hi = min(self.x[0], self.y[0]), max(self.x[1], self.y[1])
            return jet_to_potential(self.jet, self.jet_order, (lo, hi))
        return abc_to_potential(self.abc_data(), self.t0)

    def with_param(self, target, value):
        """Copy with one coefficient replaced, e.g. 'a[0]' (abc) or 'b33' (jet)."""
        if self.source == "abc":
            try:
                name, idx = target.rstrip("]").split("[")
                idx = int(idx)
                coeffs = list(self.abc[name])
            except (ValueError, KeyError):
                raise ConfigError("family.target", f"cannot address {target!r} in [cauchy.abc]")
            coeffs += [0.0] * (idx + 1 - len(coeffs))
            coeffs[idx] = float(value)
            return replace(self, abc={**self.abc, name: coeffs})
        if self.source == "jet":
            if len(target) != 3 or target[0] not in "ab" or not target[1:].isdigit():
                raise ConfigError("family.target", f"jet target must look like 'a20', got {target!r}")
            k, i = int(target[1]), int(target[2])
            if i not in (0, k) or k < 1:
                raise ConfigError("family.target", f"{target!r} is not a free coefficient")
            n = max(self.jet.order, k)
            c = self.jet.padded(n)
            attr = ("a1" if i == 0 else "a2") if target[0] == "a" else ("b1" if i == 0 else "b2")
            vals = list(getattr(c, attr))
            vals[k - 1] = value
            kw = dict(a1=c.a1, a2=c.a2, b1=c.b1, b2=c.b2)
            kw[attr] = vals
            return replace(self, jet=JetCoeffs(**kw, exact=c.exact))
        raise ConfigError("family.target", "families need a jet or abc source")


def _load_samples(path, interval):
    """CSV with columns t, N0x, N0y, N0z, Vx, Vy, Vz; spline-interpolated."""
    from scipy.interpolate import CubicSpline
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    except OSError as e:
        raise ConfigError("cauchy.samples", f"cannot read {path}: {e}")
    try:
        head = [h.strip() for h in rows[0]]
        data = np.array(rows[1:], float) if head[0] == "t" else np.array(rows, float)
    except (ValueError, IndexError):
        raise ConfigError("cauchy.samples", f"{path} is not a numeric CSV")
    if data.ndim != 2 or data.shape[1] != 7 or len(data) < 4:
        raise ConfigError("cauchy.samples", "need >= 4 rows of t, N0x, N0y, N0z, Vx, Vy, Vz")
    t = data[:, 0]
    sN, sV = CubicSpline(t, data[:, 1:4]), CubicSpline(t, data[:, 4:7])
    lo, hi = max(interval[0], t[0]), min(interval[1], t[-1])
    return GeometricCauchyData(sN, sV, (lo, hi), sN.derivative(), sV.derivative())


def _get(tbl, key, kind, default, section):
    if key not in tbl:
        return default
    v = tbl[key]
    try:
        if kind is bool:
            if not isinstance(v, bool):
                raise TypeError
            return v
        if kind == "pair":
            a, b = (float(x) for x in v)
            if not a < b:
                raise ValueError
            return (a, b)
        if kind is int:
            if isinstance(v, bool) or int(v) != v:
                raise TypeError
            return int(v)
        return kind(v)
    except (TypeError, ValueError):
        raise ConfigError(f"{section}.{key}", f"invalid value {v!r}")


def load_config(path):
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as e:
        raise ConfigError("file", f"cannot read {path}: {e}")
    except tomllib.TOMLDecodeError as e:
        raise ConfigError("file", f"TOML parse error: {e}")
    return parse_config(raw, path.parent)


def parse_config(raw, base_dir=Path(".")):
    known = {"cauchy", "grid", "numerics", "output", "family"}
    for k in raw:
        if k not in known:
            raise ConfigError(k, "unknown section")
    if "cauchy" not in raw:
        raise ConfigError("cauchy", "missing section")
    ca = raw["cauchy"]
    present = [s for s in SOURCES if s in ca]
    if len(present) != 1:
        raise ConfigError("cauchy", f"need exactly one of {', '.join(SOURCES)}; got {present or 'none'}")
    cfg = BuildConfig(source=present[0], base_dir=Path(base_dir))
    cfg.t0 = _get(ca, "t0", float, 0.0, "cauchy")
    cfg.interval = _get(ca, "interval", "pair", (-1.0, 1.0), "cauchy")
    cfg.jet_order = _get(ca, "jet_order", int, 6, "cauchy")
    if cfg.source == "jet":
        row = ca["jet"]
        try:
            vals = [x if isinstance(x, (int, str)) else float(x) for x in row]
            cfg.jet = JetCoeffs.from_table(vals)
        except (TypeError, ValueError) as e:
            raise ConfigError("cauchy.jet", f"expected 4k numbers (a_i0; a_ii; b_i0; b_ii): {e}")
    elif cfg.source == "abc":
        tbl = ca["abc"]
        if not isinstance(tbl, dict):
            raise ConfigError("cauchy.abc", "expected a table with a, b, c (and optional A)")
        for k in tbl:
            if k not in ("a", "b", "c", "A"):
                raise ConfigError(f"cauchy.abc.{k}", "unknown function name")
        for k in ("a", "b", "c"):
            if k not in tbl:
                raise ConfigError(f"cauchy.abc.{k}", "missing coefficient list")
        out = {}
        for k, v in tbl.items():
            try:
                out[k] = [float(x) for x in (v if isinstance(v, list) else [v])]
            except (TypeError, ValueError):
                raise ConfigError(f"cauchy.abc.{k}", f"invalid coefficient list {v!r}")
            if not out[k]:
                raise ConfigError(f"cauchy.abc.{k}", "empty coefficient list")
        cfg.abc = out
    else:
        cfg.samples = str(ca["samples"])

    g = raw.get("grid", {})
    rng = _get(g, "range", "pair", None, "grid")
    cfg.x = _get(g, "x", "pair", rng or (-1.0, 1.0), "grid")
    cfg.y = _get(g, "y", "pair", rng or cfg.x, "grid")
    n = _get(g, "n", int, 101, "grid")
    cfg.nx = _get(g, "nx", int, n, "grid")
    cfg.ny = _get(g, "ny", int, n, "grid")
    if cfg.nx < 2 or cfg.ny < 2:
        raise ConfigError("grid.n", "resolution must be at least 2")
    if not (cfg.x[0] <= cfg.t0 <= cfg.x[1] and cfg.y[0] <= cfg.t0 <= cfg.y[1]):
        raise ConfigError("cauchy.t0", "base point (t0, t0) must lie in the grid")

    nu = raw.get("numerics", {})
    cfg.M = _get(nu, "M", int, DEFAULT_M, "numerics")
    cfg.circle_samples = _get(nu, "samples", int, DEFAULT_SAMPLES, "numerics")
    cfg.steps_per_unit = _get(nu, "steps_per_unit", int, DEFAULT_STEPS_PER_UNIT, "numerics")
    cfg.threads = _get(nu, "threads", int, 0, "numerics")
    if cfg.M < 1:
        raise ConfigError("numerics.M", "must be positive")
    if cfg.circle_samples < 2 * cfg.M + 2:
        raise ConfigError("numerics.samples", "need at least 2M + 2 circle samples")

    o = raw.get("output", {})
    cfg.out_dir = str(o.get("dir", "out"))
    cfg.prefix = str(o.get("prefix", "surface"))
    cfg.mesh_format = str(o.get("mesh_format", "obj"))
    if cfg.mesh_format not in ("obj", "ply"):
        raise ConfigError("output.mesh_format", "must be 'obj' or 'ply'")
    cfg.binary = _get(o, "binary", bool, False, "output")

    if "family" in raw:
        fam = raw["family"]
        for k in ("target", "values"):
            if k not in fam:
                raise ConfigError(f"family.{k}", "missing")
        try:
            vals = [float(v) for v in fam["values"]]
        except (TypeError, ValueError):
            raise ConfigError("family.values", "expected a list of numbers")
        cfg.family = {"name": str(fam.get("name", "s")), "target": str(fam["target"]),
                      "values": vals}
        cfg.with_param(cfg.family["target"], vals[0] if vals else 0.0)  # validate target
    return cfg
