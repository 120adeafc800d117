"""Landing iteration for optimization under orthogonality constraints.

The tangent term is the constrained Riemannian gradient in the ambient
beta-metric; beta = 1/2 is the canonical metric, beta = 1 the Euclidean one.
"""

from ._core import (
    DimensionError,
    IllConditionedError,
    SingularLayerError,
    constraint_h,
    eigen_reference,
    first_order_feasibility_drift,
    grad_canonical,
    grad_constrained,
    grad_infeasibility,
    grad_unconstrained,
    gradient_via_gram,
    gram_matrix,
    infeasibility,
    is_normal,
    is_tangent,
    landing_step,
    metric_eval,
    metric_eval_stiefel,
    ortho_complement,
    phi_map,
    project_tangent,
    projection_via_lsq,
    solve,
    solve_instance,
    tangent_basis,
)

__all__ = [
    "DimensionError",
    "IllConditionedError",
    "SingularLayerError",
    "constraint_h",
    "eigen_reference",
    "first_order_feasibility_drift",
    "grad_canonical",
    "grad_constrained",
    "grad_infeasibility",
    "grad_unconstrained",
    "gradient_via_gram",
    "gram_matrix",
    "infeasibility",
    "is_normal",
    "is_tangent",
    "landing_step",
    "metric_eval",
    "metric_eval_stiefel",
    "ortho_complement",
    "phi_map",
    "project_tangent",
    "projection_via_lsq",
    "solve",
    "solve_instance",
    "tangent_basis",
]
