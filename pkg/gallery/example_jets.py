"""The five example 3-jets: classify each one, build its surface and look.

Every jet is classified twice, once from its coefficients in exact
arithmetic and once from the built grid surface.  The two labels should
agree.  Renders go to gallery/out/jet_<label>.png when matplotlib is
available.
"""
import sys

from _common import OUT, plot_surface, quiet
from loopfront.builder import Grid, dalembert_solve, singular_contour
from loopfront.cauchy import jet_to_potential
from loopfront.classify import classify_grid, classify_jet
from loopfront.jets import JetCoeffs

ROWS = [
    (1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0),
    (1, 1, 0, 1, 2, 0, 1, 0, 0, 1, 1, 0),
    (1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0),
    (1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1),
    (1, 0, 1, 3, 0, 0, 1, 0, 0, 3, 0, -1),
]


def main(render=True):
    grid = Grid.rect(-0.5, 0.5, 101)
    for row in ROWS:
        c = JetCoeffs.from_table(row)
        jet = classify_jet(c)
        s = quiet(dalembert_solve, jet_to_potential(c), grid)
        contours = singular_contour(s)
        g = classify_grid(s, (0.0, 0.0))
        print(f"{str(row):42s} jet: {jet.label:18s} grid: {g.label:18s} "
              f"singular curves: {len(contours)}")
        if render:
            try:
                plot_surface(s, contours, OUT / f"jet_{jet.label}.png", jet.label)
            except ImportError:
                render = False


if __name__ == "__main__":
    main("--no-render" not in sys.argv)
