"""Codimension-one transitions seen through one-parameter families.

Lips:      (a, b, c) = (t^2 + r, -1, -t).  For r > 0 there is no singular
           curve near the origin; at r = 0 a lips point appears; for r < 0
           a closed singular curve with two swallowtails is born.
Shcherbak: (a, b, c) = (t^2 + zeta, t, -1).  Two swallowtails appear on
           one side of zeta = 0 only.
2/5 edge:  (a, b, c) = (t, zeta + t, 0.1).  The base point is a 2/5
           cuspidal edge at zeta = 0 and an ordinary cuspidal edge nearby.
"""
import sys

from numpy.polynomial import Polynomial as P

from _common import OUT, plot_surface, quiet
from loopfront.builder import Grid, dalembert_solve, singular_contour
from loopfront.cauchy import AbcData, abc_to_potential
from loopfront.classify import classify_abc, find_swallowtails

SWEEPS = {
    "lips": (lambda r: ([r, 0, 1], [-1], [0, -1]), [0.1, 0.0, -0.06], 201),
    "shcherbak": (lambda z: ([z, 0, 1], [0, 1], [-1]), [-0.014, 0.0, 0.015], 201),
    "twofive": (lambda z: ([0, 1], [z, 1], [0.1]), [0.035, 0.0, -0.035], 101),
}


def run(name, render=True):
    make, values, n = SWEEPS[name]
    grid = Grid.rect(-0.5, 0.5, n)
    print(f"-- {name}")
    for v in values:
        a, b, c = make(v)
        d = AbcData(P(a), P(b), P(c))
        s = quiet(dalembert_solve, abc_to_potential(d), grid)
        cs = singular_contour(s)
        sw = find_swallowtails(s)
        print(f"  parameter {v:+.3f}: base point {classify_abc(d, 0.0).label:20s} "
              f"curves {len(cs)} (closed {sum(x.closed for x in cs)}) swallowtails {len(sw)}")
        if render:
            try:
                plot_surface(s, cs, OUT / f"{name}_{v:+.3f}.png", f"{name} {v:+.3f}")
            except ImportError:
                render = False


if __name__ == "__main__":
    names = [a for a in sys.argv[1:] if not a.startswith("-")] or list(SWEEPS)
    for nm in names:
        run(nm, "--no-render" not in sys.argv)
