"""Exact enumerative geometry for lines and conics on hypersurfaces.

Two independent integration backends over the same intersection rings:

* a symbolic one, multiplying Schubert classes through Littlewood-Richardson
  coefficients and reducing projective-bundle towers against the tautological
  relation, and
* a fixed-point one, summing torus weights over the finitely many fixed
  points (Bott's residue formula).

Every quantity is an exact :class:`fractions.Fraction`.
"""

from .bott import UnsupportedExpressionError, WeightCollisionError, bott_integrate
from .bundles import (
    BundleExpr,
    Dual,
    InvalidBundleError,
    RelO,
    Sym,
    TautQuot,
    TautSub,
    TensorLine,
    Trivial,
    WhitneyQuotient,
    rank,
)
from .chern import chern_classes, euler_class, segre_classes, total_chern
from .chow import (
    ChowElement,
    Grassmannian,
    ProjBundle,
    Space,
    SpaceMismatchError,
    basis,
    grassmannian,
    integrate,
    pullback,
    pushforward,
    sigma,
    unit,
    zero,
    zeta,
)
from .counts import (
    DEGENERATE_CONIC_ASSUMPTION,
    DegreeMismatchError,
    HypersurfaceProblem,
    LedgerEntry,
    conic_obstruction,
    conic_space,
    count_conics,
    count_curves,
    count_lines,
    dimension_ledger,
    incidence_class,
    line_obstruction,
    line_space,
)
from .gwdt import (
    InvariantTable,
    MissingDivisorError,
    am_localization_verify,
    aspinwall_morrison_factor,
    cover_component_contribution,
    dt_from_gw,
    gw_from_dt,
)
from .symfunc import (
    Partition,
    enumerate_partitions,
    lr_coefficient,
    partition,
    pieri_multiply,
)

__version__ = "0.1.0"

__all__ = [
    "BundleExpr",
    "ChowElement",
    "DEGENERATE_CONIC_ASSUMPTION",
    "DegreeMismatchError",
    "Dual",
    "Grassmannian",
    "HypersurfaceProblem",
    "InvalidBundleError",
    "InvariantTable",
    "LedgerEntry",
    "MissingDivisorError",
    "Partition",
    "ProjBundle",
    "RelO",
    "Space",
    "SpaceMismatchError",
    "Sym",
    "TautQuot",
    "TautSub",
    "TensorLine",
    "Trivial",
    "UnsupportedExpressionError",
    "WeightCollisionError",
    "WhitneyQuotient",
    "am_localization_verify",
    "aspinwall_morrison_factor",
    "basis",
    "bott_integrate",
    "chern_classes",
    "conic_obstruction",
    "conic_space",
    "count_conics",
    "count_curves",
    "count_lines",
    "cover_component_contribution",
    "dimension_ledger",
    "dt_from_gw",
    "enumerate_partitions",
    "euler_class",
    "grassmannian",
    "gw_from_dt",
    "incidence_class",
    "integrate",
    "line_obstruction",
    "line_space",
    "lr_coefficient",
    "partition",
    "pieri_multiply",
    "pullback",
    "pushforward",
    "rank",
    "segre_classes",
    "sigma",
    "total_chern",
    "unit",
    "zero",
    "zeta",
]
