"""Wave maps into the plane, N = (f1(x) + g1(y), f2(x) + g2(y)).

The singular set is the zero set of lambda = f1' g2' - f2' g1'.  Three
small examples show a regular fold line, a point where the singular set
fails to be Morse, and a rank-zero point.
"""
from numpy.polynomial import Polynomial as P

from loopfront.planar import PlanarWaveMap, planar_stratum

EXAMPLES = {
    "fold along the diagonal": ([0, 1], [0, 0, 1], [0, 1], [0, 0, 1]),
    "Morse crossing": ([0, 1], [0, 0, 0, 1 / 3], [0, 1], [0, 0, 0, 1 / 3]),
    "non-Morse": ([0, 1], [0], [0], [0, 0, 0, 1]),
    "rank zero": ([0, 0, 1], [0], [0], [0, 0, 1]),
}


def main():
    for name, polys in EXAMPLES.items():
        st = planar_stratum(PlanarWaveMap.from_polys(*map(P, polys)))
        print(f"{name:24s} {st['label']:8s} critical={st['critical']!s:5s} "
              f"morse_fails={st['morse_fails']!s:5s} finitely_determined={st['finitely_determined']}")


if __name__ == "__main__":
    main()
