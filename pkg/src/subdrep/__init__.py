"""Exact polynomial-reproduction analysis of multivariate subdivision schemes.

The package decides zero conditions of mask symbols at roots of unity,
computes the reproduction parametrization and the maximal degree of
polynomial reproduction, constructs schemes as affine combinations of given
symbols, and cross-validates every algebraic verdict with an exact
subdivision-iteration oracle.
"""

from .analysis import (
    ReproductionReport,
    analyze,
    compute_tau,
    moment_condition_check,
    reproduction_degree,
    sum_rules_check,
    zero_condition_order,
)
from .constructors import (
    AffineSolution,
    affine_solver,
    box_spline_symbol,
    builtin_symbols,
    tile_symbol,
)
from .cyclotomic import CycloValue, cyclotomic_polynomial
from .lattice import (
    CosetReps,
    DilationMatrix,
    UnityPoint,
    dual_coset_points,
    is_expanding,
    primal_cosets,
    smith_normal_form,
)
from .laurent import Box, LaurentPoly, falling_factorial
from .subdivision import (
    GridData,
    PolySpec,
    export_refinement,
    parameter_grid,
    reproduction_oracle,
    subdivide_step,
)

__all__ = [
    "AffineSolution",
    "Box",
    "CosetReps",
    "CycloValue",
    "DilationMatrix",
    "GridData",
    "LaurentPoly",
    "PolySpec",
    "ReproductionReport",
    "UnityPoint",
    "affine_solver",
    "analyze",
    "box_spline_symbol",
    "builtin_symbols",
    "compute_tau",
    "cyclotomic_polynomial",
    "dual_coset_points",
    "export_refinement",
    "falling_factorial",
    "is_expanding",
    "moment_condition_check",
    "parameter_grid",
    "primal_cosets",
    "reproduction_degree",
    "reproduction_oracle",
    "smith_normal_form",
    "subdivide_step",
    "sum_rules_check",
    "tile_symbol",
    "zero_condition_order",
]
