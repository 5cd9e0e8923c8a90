"""Folded ribbonlength bounds for twisted torus knots, with exact certificates."""

from __future__ import annotations

from .braid import (
    BraidWord,
    GarsideNormalForm,
    StrandPermutation,
    braid_equal,
    braid_permutation,
    closure_component_count,
    full_twist_word,
    garside_normal_form,
    mirror_braid,
    torus_braid,
    torus_decomposition_identity,
    twisted_torus_braid,
)
from .geometry import (
    RibbonLayout,
    assemble_layout,
    diagram_from_plan,
    layout_fold_type,
    render_svg,
    validate_layout,
)
from .invariants import (
    PlanarDiagram,
    alexander_from_braid,
    alexander_from_diagram,
    alexander_torus_oracle,
    normalize_alexander,
    reduced_burau,
)
from .laurent import LaurentPolynomial
from .planner import (
    FoldPlan,
    TwistParams,
    WeightedBandDiagram,
    assign_fold_types,
    band_decomposition,
    build_plan,
    case_branch,
    normalize_params,
    plan_length,
    ribbonlength_upper_bound,
)

__version__ = "0.1.0"
