"""Arc-space invariants of Schubert varieties in the Grassmannian.

Exact combinatorial and power-series computations: contact profiles of arcs,
plane-partition strata and their containment tests, log canonical thresholds
via exact rational linear programming, and the planar networks that
parametrize generic arcs.
"""

__version__ = "0.1.0"

from .partitions import (
    GrassmannShape,
    Partition,
    all_partitions,
    bruhat_leq,
    multi_index_from_partition,
    outside_corners,
    partition_from_multi_index,
    rim_size,
    schubert_conditions,
    singular_components,
)
from .plane_partitions import (
    INF,
    ExtNat,
    Infinity,
    InvalidPlanePartition,
    PlanePartition,
    all_plane_partitions,
    contact_profile,
    essential_profile,
    floors,
    from_essential,
    from_floors,
    home_center,
    ord_schubert,
    plateaux,
    weight_exponents,
)
from .series import (
    NotAnArc,
    NotInBigCell,
    OrderValue,
    PrecisionExceeded,
    SeriesMatrix,
    TruncatedSeries,
    borel_translate,
    invariant_factor_profile,
    is_generic_form,
    plucker_order_of_arc,
)
from .networks import (
    PlanarNetwork,
    essential_weighting,
    gamma0,
    generic_arc,
    lindstrom_minor,
    plucker_ord,
    tropical_minor_order,
    weight_matrix,
)
from .nash import (
    ContainmentVerdict,
    codim,
    codim_chain,
    compare,
    discrepancy_data,
    g24_containment,
    nash_valuations,
    necessary_containment,
    plucker_leq,
    sufficient_by_plateau,
    sufficient_by_weight_exponents,
)
from .simplex import LPSolution, RationalLP, solve_max
from .lct import (
    arnold_multiplicity,
    arnold_witness,
    brute_force_arnold,
    build_lp,
    integer_witness,
    lct,
    lct_equals_codim,
    lct_rectangular,
    sv_extremal_points,
)

__all__ = [
    "ContainmentVerdict",
    "ExtNat",
    "GrassmannShape",
    "INF",
    "Infinity",
    "InvalidPlanePartition",
    "LPSolution",
    "NotAnArc",
    "NotInBigCell",
    "OrderValue",
    "Partition",
    "PlanarNetwork",
    "PlanePartition",
    "PrecisionExceeded",
    "RationalLP",
    "SeriesMatrix",
    "TruncatedSeries",
    "all_partitions",
    "all_plane_partitions",
    "arnold_multiplicity",
    "arnold_witness",
    "borel_translate",
    "bruhat_leq",
    "brute_force_arnold",
    "build_lp",
    "codim",
    "codim_chain",
    "compare",
    "contact_profile",
    "discrepancy_data",
    "essential_profile",
    "essential_weighting",
    "floors",
    "from_essential",
    "from_floors",
    "g24_containment",
    "gamma0",
    "generic_arc",
    "home_center",
    "integer_witness",
    "invariant_factor_profile",
    "is_generic_form",
    "lct",
    "lct_equals_codim",
    "lct_rectangular",
    "lindstrom_minor",
    "multi_index_from_partition",
    "nash_valuations",
    "necessary_containment",
    "ord_schubert",
    "outside_corners",
    "partition_from_multi_index",
    "plateaux",
    "plucker_leq",
    "plucker_ord",
    "plucker_order_of_arc",
    "rim_size",
    "schubert_conditions",
    "singular_components",
    "solve_max",
    "sufficient_by_plateau",
    "sufficient_by_weight_exponents",
    "sv_extremal_points",
    "tropical_minor_order",
    "weight_exponents",
    "weight_matrix",
]
