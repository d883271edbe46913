"""Exact solvers for set cover with demands or capacities.

The package covers the plain, multiset, and priced problem variants, a
complement transform linking the two modes, brute-force reference solvers,
and an application to consent-rule bribery in group identification.
"""

from .branch import (
    solve_capacities,
    solve_capacities_multi,
    solve_capacities_priced,
    solve_demands,
    solve_demands_multi,
    solve_demands_priced,
    solve_priced_anyk,
)
from .bribery import (
    BriberyInstance,
    QualificationProfile,
    apply_bribe,
    brute_bribery,
    delta,
    disqualifiers,
    qualifiers,
    reduce_to_demands,
    socially_qualified,
    solve_bribery_general,
    solve_bribery_t1,
)
from .core import (
    InstanceStats,
    Mode,
    MultiSolution,
    SearchStats,
    SetCoverInstance,
    SetSolution,
    Solution,
    Verdict,
    coverage,
    extremal_stats,
    neighborhood,
    occurrences,
    total_price,
    verify,
)
from .formats import (
    ParseError,
    parse_bribery,
    parse_bribes,
    parse_setcover,
    parse_solution,
    serialize_bribery,
    serialize_bribes,
    serialize_setcover,
    serialize_solution,
)
from .generate import generate_bribery, generate_setcover
from .oracle import EnumerationLimitError, brute_decision, brute_setcover
from .threshold import (
    greedy_construct,
    solve_capacities_threshold,
    solve_demands_threshold,
)
from .transform import TriviallyInfeasible, complement, map_solution

__all__ = [
    "BriberyInstance",
    "EnumerationLimitError",
    "InstanceStats",
    "Mode",
    "MultiSolution",
    "ParseError",
    "QualificationProfile",
    "SearchStats",
    "SetCoverInstance",
    "SetSolution",
    "Solution",
    "TriviallyInfeasible",
    "Verdict",
    "apply_bribe",
    "brute_bribery",
    "brute_decision",
    "brute_setcover",
    "complement",
    "coverage",
    "delta",
    "disqualifiers",
    "extremal_stats",
    "generate_bribery",
    "generate_setcover",
    "greedy_construct",
    "map_solution",
    "neighborhood",
    "occurrences",
    "parse_bribery",
    "parse_bribes",
    "parse_setcover",
    "parse_solution",
    "qualifiers",
    "reduce_to_demands",
    "serialize_bribery",
    "serialize_bribes",
    "serialize_setcover",
    "serialize_solution",
    "socially_qualified",
    "solve_bribery_general",
    "solve_bribery_t1",
    "solve_capacities",
    "solve_capacities_multi",
    "solve_capacities_priced",
    "solve_capacities_threshold",
    "solve_demands",
    "solve_demands_multi",
    "solve_demands_priced",
    "solve_demands_threshold",
    "solve_priced_anyk",
    "total_price",
    "verify",
]
