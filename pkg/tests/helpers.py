"""Shared oracles for the test suite."""
import numpy as np

from loopfront.algebra import I2, e1
from loopfront.loops import TwistedLaurentLoop, loop_inverse

M = 12
TAIL_MAX = 1e-12


def exp_e1(s):
    """exp(s e1) for complex s; e1^2 = -I/4."""
    s = np.asarray(s, complex)[..., None, None]
    return np.cos(s / 2) * I2 + 2 * np.sin(s / 2) * e1


def _rand(rng, sc):
    return sc * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))


def planted_split(rng, width=2, scale=0.02, M=M, tail_max=TAIL_MAX):
    """(g, H_-, H_+) with g = H_- H_+ supported in |n| <= 2 width.

    Draws are repeated until the truncation tail of H_+^{-1} is below
    ``tail_max``, so the factorization is representable at order M.
    """
    while True:
        Hm = TwistedLaurentLoop.from_terms({0: I2, **{-n: _rand(rng, scale) for n in range(1, width + 1)}}, M)
        Hp = TwistedLaurentLoop.from_terms({0: I2 + _rand(rng, scale),
                                            **{n: _rand(rng, scale) for n in range(1, width + 1)}}, M)
        if loop_inverse(Hp).tail_mass() < tail_max:
            return Hm @ Hp, Hm, Hp
