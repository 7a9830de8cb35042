"""Singularities of the Gauss map N itself.

For the example jets the front classifier and the Gauss-map classifier are
run side by side.  A cuspidal lips or beaks of the front sits over a lips
or beaks of N.  The last example is a cusp-series germ (x, xy + y^k)
whose index depends on a single cubic coefficient.
"""
from loopfront.classify import classify_gauss_map_jet, classify_jet
from loopfront.jets import JetCoeffs

EXAMPLES = {
    "cuspidal edge": (1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0),
    "swallowtail": (1, 1, 0, 1, 2, 0, 1, 0, 0, 1, 1, 0),
    "cuspidal lips": (1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1),
    "cuspidal beaks": (1, 0, 1, 3, 0, 0, 1, 0, 0, 3, 0, -1),
    "cusp series": (1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 2, 0),
}


def main():
    for name, row in EXAMPLES.items():
        c = JetCoeffs.from_table(row)
        g = classify_gauss_map_jet(c)
        extra = ""
        if g.label in ("Lips", "Beaks"):
            extra = f"  l = ({g.value('l1')}, {g.value('l2')}, {g.value('l3')})"
        if g.index:
            extra = f"  index {g.index}"
        print(f"{name:15s} front: {classify_jet(c).label:18s} Gauss map: {g.label}{extra}")


if __name__ == "__main__":
    main()
