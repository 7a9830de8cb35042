"""Pseudospherical fronts from Cauchy data via loop groups, and their singularities."""
__version__ = "0.1.0"

from .algebra import adjoint_rotate, cross, su2_to_vec, vec_to_su2
from .cauchy import (AbcData, GeometricCauchyData, PotentialPair, abc_to_potential,
                     geometric_to_abc, jet_abc, jet_to_potential)
from .errors import *  # noqa: F401,F403
from .jets import BivariateJet, JetCoeffs, PolyCauchyData, expand_jet
from .loops import TwistedLaurentLoop, birkhoff_split
