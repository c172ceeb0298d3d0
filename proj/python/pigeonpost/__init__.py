"""Pigeon-post network design: plan, verify and bound pigeon flights."""

from ._core import (
    Certificate,
    DemandGraph,
    InputError,
    PlannerResult,
    certify,
    component_lower_bound,
    components,
    export_lp,
    generate,
    lower_bound,
    min_vertex_cover,
    optimal_multihop,
    optimal_twohop,
    plan_coordinator,
    plan_cycle,
    plan_singlehop,
    reduce_3sat,
    reduce_vertex_cover,
    solve_ilp,
    verify,
    verify_report,
)

__all__ = [
    "Certificate",
    "DemandGraph",
    "InputError",
    "PlannerResult",
    "certify",
    "component_lower_bound",
    "components",
    "export_lp",
    "generate",
    "lower_bound",
    "min_vertex_cover",
    "optimal_multihop",
    "optimal_twohop",
    "plan_coordinator",
    "plan_cycle",
    "plan_singlehop",
    "reduce_3sat",
    "reduce_vertex_cover",
    "solve_ilp",
    "verify",
    "verify_report",
]
