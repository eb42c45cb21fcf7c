"""pebblekit: DAG constructions, transformations and attacks under the
parallel black pebbling game, with exact desk-scale oracles."""

from .attacks import (
    AttackResult,
    AttackSchedule,
    generic_attack,
    natural_svensson_pebbling,
    overlay_attack,
)
from .bounds import (
    BoundReport,
    GapAnalysis,
    bound_depth_robust_lower,
    bound_generic,
    bound_overlay_improved,
    bound_overlay_improved_measured,
    bound_overlay_lower,
    bound_overlay_naive,
    gap_analysis,
    generic_attack_slack,
    overlay_attack_slack,
    reducibility_gap_parameters,
)
from .extreme_dr import (
    ExtremeReport,
    SampleReport,
    complete_dag,
    extreme_frontier,
    sample_extreme_dr,
    verify_extreme_dr,
)
from .graph import (
    ROLE_BIT,
    ROLE_TEST,
    CycleError,
    Dag,
    LayeredDag,
    delete,
    depth,
    depth_counted,
    depth_profile,
    disjoint_union,
    longest_path,
)
from .idr import block_size, idr, lift_reducing_set
from .oracle import OracleResult, exact_pcc
from .pebbling import (
    LegalityReport,
    PebblingCost,
    Transcript,
    cost,
    pebble_everything,
    validate,
)
from .robustness import (
    ReducibilityCertificate,
    ReductionSearch,
    RobustnessReport,
    coloring_to_set,
    is_depth_robust,
    min_depth_reducing_set,
    set_to_coloring,
    verify_certificate,
)
from .superconc import (
    Superconcentrator,
    SuperconcOverlay,
    VerificationReport,
    build_superconcentrator,
    superconc_overlay,
    verify_superconcentrator,
)
from .svensson import (
    SimplifiedSvensson,
    SvenssonGraph,
    SvenssonParams,
    auto_layer_count,
    build_svensson,
    layer_shift_invariant,
    layered_matching_graph,
    simplify,
    sparsify,
)
from .unique_games import UniqueGamesInstance, satisfied_fraction, toy_instance

__all__ = [
    "AttackResult",
    "AttackSchedule",
    "BoundReport",
    "CycleError",
    "Dag",
    "ExtremeReport",
    "GapAnalysis",
    "LayeredDag",
    "LegalityReport",
    "OracleResult",
    "PebblingCost",
    "ROLE_BIT",
    "ROLE_TEST",
    "ReducibilityCertificate",
    "ReductionSearch",
    "RobustnessReport",
    "SampleReport",
    "SimplifiedSvensson",
    "Superconcentrator",
    "SuperconcOverlay",
    "SvenssonGraph",
    "SvenssonParams",
    "Transcript",
    "UniqueGamesInstance",
    "VerificationReport",
    "auto_layer_count",
    "block_size",
    "bound_depth_robust_lower",
    "bound_generic",
    "bound_overlay_improved",
    "bound_overlay_improved_measured",
    "bound_overlay_lower",
    "bound_overlay_naive",
    "build_superconcentrator",
    "build_svensson",
    "coloring_to_set",
    "complete_dag",
    "cost",
    "delete",
    "depth",
    "depth_counted",
    "depth_profile",
    "disjoint_union",
    "exact_pcc",
    "extreme_frontier",
    "gap_analysis",
    "generic_attack",
    "generic_attack_slack",
    "idr",
    "is_depth_robust",
    "layer_shift_invariant",
    "layered_matching_graph",
    "lift_reducing_set",
    "longest_path",
    "min_depth_reducing_set",
    "natural_svensson_pebbling",
    "overlay_attack",
    "overlay_attack_slack",
    "pebble_everything",
    "reducibility_gap_parameters",
    "sample_extreme_dr",
    "satisfied_fraction",
    "set_to_coloring",
    "simplify",
    "sparsify",
    "superconc_overlay",
    "toy_instance",
    "validate",
    "verify_certificate",
    "verify_extreme_dr",
    "verify_superconcentrator",
]
