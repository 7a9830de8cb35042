"""Gridded surfaces from potentials, plus the direct PDE oracle."""
from .contour import Polyline, null_direction_field, singular_contour
from .dalembert import dalembert_solve, sigma_field
from .export import export_mesh, write_polylines
from .geometry import (FundamentalForms, ParallelData, fundamental_forms,
                       fundamental_forms_at, integrate_frontal, parallel_surface)
from .grid import Grid, SurfaceData
from .march import DiagonalCauchy, MarchResult, pde_march

__all__ = [
    "Grid", "SurfaceData", "Polyline", "FundamentalForms", "ParallelData",
    "DiagonalCauchy", "MarchResult", "dalembert_solve", "sigma_field",
    "integrate_frontal", "fundamental_forms", "fundamental_forms_at",
    "parallel_surface", "pde_march", "singular_contour", "null_direction_field",
    "export_mesh", "write_polylines",
]
