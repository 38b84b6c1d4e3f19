"""Exact arithmetic for Schur partitions.

Enumeration under Schur's gap conditions, the canonical pairing into
1-mod-3 / 2-mod-3 pairs and singletons, the forward/backward move calculus
with its collision adjustments, base partitions and the resulting
decomposition correspondences, and truncated multivariate q-series for the
associated multiple-sum generating functions.
"""

from .bijection import (
    Decomposition,
    Mode,
    Shape,
    base_partition,
    base_weight,
    decompose,
    decomposition_from_dict,
    decomposition_to_dict,
    iter_decompositions,
    iter_shapes,
    mod3_primitive,
    recompose,
)
from .moves import (
    Direction,
    IllegalMove,
    InvariantViolation,
    Move,
    MoveStep,
    MoveTrace,
    move_pair,
    move_singleton,
)
from .oracle import (
    CountTable,
    count_by_length,
    count_product_side,
    count_schur,
    count_tables,
    enumerate_schur,
)
from .partitions import (
    Block,
    BlockKind,
    PairedPartition,
    Partition,
    ResidueStats,
    is_schur,
    pair_up,
    residue_stats,
    schur_violation,
)
from .series import (
    Series,
    SeriesComparison,
    SummationBounds,
    poch_inverse_factor,
    product_alladi,
    product_schur,
    series_equal,
    sum_main,
    sum_mod2,
    sum_mod3,
)

__all__ = [
    "Block",
    "BlockKind",
    "CountTable",
    "Decomposition",
    "Direction",
    "IllegalMove",
    "InvariantViolation",
    "Mode",
    "Move",
    "MoveStep",
    "MoveTrace",
    "PairedPartition",
    "Partition",
    "ResidueStats",
    "Series",
    "SeriesComparison",
    "Shape",
    "SummationBounds",
    "base_partition",
    "base_weight",
    "count_by_length",
    "count_product_side",
    "count_schur",
    "count_tables",
    "decompose",
    "decomposition_from_dict",
    "decomposition_to_dict",
    "enumerate_schur",
    "is_schur",
    "iter_decompositions",
    "iter_shapes",
    "mod3_primitive",
    "move_pair",
    "move_singleton",
    "pair_up",
    "poch_inverse_factor",
    "product_alladi",
    "product_schur",
    "recompose",
    "residue_stats",
    "schur_violation",
    "series_equal",
    "sum_main",
    "sum_mod2",
    "sum_mod3",
]
