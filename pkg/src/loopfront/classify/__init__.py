"""Singularity detection and classification."""
from .abc import classify_abc
from .family import FamilyJet, GenericityReport, family_genericity, monge_taylor_tangent
from .gauss import GaussReport, classify_gauss_map_jet
from .grid import classify_grid, find_swallowtails, refine_eta_root
from .jet import classify_jet, eta_derivatives, rotate_jet, swap_xy
from .report import LABELS, SingularityReport

__all__ = [
    "LABELS", "SingularityReport", "classify_jet", "classify_abc", "classify_grid",
    "find_swallowtails", "refine_eta_root", "eta_derivatives", "rotate_jet", "swap_xy",
    "FamilyJet", "GenericityReport", "family_genericity", "monge_taylor_tangent",
    "GaussReport", "classify_gauss_map_jet",
]
