"""Exact calculator for pure Tate motives of classical groups and their
homogeneous spaces: direct-sum decompositions, Hopf-algebra coactions over
Z[eps]/(2 eps), spectral-sequence page bookkeeping, and topological rank
checks.  Everything is integer arithmetic; there are no tolerances.
"""

from .tate import (
    Bidegree,
    NotASubmotive,
    Poly2,
    TateMotive,
    Tridegree,
    bidegree_d,
    chow_height,
    cone_of_inclusion,
    height_filter,
    poincare,
    tensor,
    total_chow_height,
    twist,
)
from .hopf import (
    Coefficient,
    CoactionFormula,
    DualExterior,
    Element,
    IndexOutOfRange,
    RingPresentation,
    Tensor,
    antipode,
    comultiply,
    derive_adjoint_coaction,
    dual_algebra,
    multiply,
    render_element,
    render_tensor,
    stiefel_coaction,
)
from .catalog import (
    height_bijection,
    motive_a,
    motive_fl,
    motive_gl,
    motive_gr,
    motive_v,
    reduced_motive_x,
    verify_splitting,
)
from .spectral import (
    E2Page,
    build_e2,
    candidate_pages,
    chart_svg,
    check_ss_description,
    differential_targets,
    einfty_rank_check,
    tch,
)
from .realization import (
    gaussian_binomial,
    grassmannian_betti,
    q_series_identity,
    realize_motive,
    thom_decomposition_check,
    unitary_word_length_ranks,
)

__version__ = "0.1.0"

__all__ = [
    "Bidegree",
    "Tridegree",
    "TateMotive",
    "Poly2",
    "NotASubmotive",
    "bidegree_d",
    "chow_height",
    "total_chow_height",
    "tensor",
    "twist",
    "height_filter",
    "cone_of_inclusion",
    "poincare",
    "Coefficient",
    "Element",
    "Tensor",
    "RingPresentation",
    "IndexOutOfRange",
    "CoactionFormula",
    "DualExterior",
    "multiply",
    "comultiply",
    "antipode",
    "derive_adjoint_coaction",
    "stiefel_coaction",
    "dual_algebra",
    "render_element",
    "render_tensor",
    "motive_gl",
    "motive_gr",
    "motive_fl",
    "motive_v",
    "motive_a",
    "reduced_motive_x",
    "height_bijection",
    "verify_splitting",
    "E2Page",
    "build_e2",
    "tch",
    "differential_targets",
    "candidate_pages",
    "check_ss_description",
    "einfty_rank_check",
    "chart_svg",
    "unitary_word_length_ranks",
    "grassmannian_betti",
    "gaussian_binomial",
    "thom_decomposition_check",
    "realize_motive",
    "q_series_identity",
    "__version__",
]
