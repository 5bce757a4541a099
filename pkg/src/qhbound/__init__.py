"""Exact checks of the quantum Hamming bound against Bacon-Shor subsystem codes."""

from .bounds import (
    Bound,
    BoundReport,
    CodeParams,
    InvalidParameters,
    hamming_check,
    singleton_check,
)
from .combinatorics import binomial, log2_margin, power, sphere_volume
from .distance import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DistanceResult,
    Purity,
    low_weight_gauge_element,
    min_distance,
    min_stabilizer_weight,
    purity,
    workload_estimate,
)
from .families import odd_family, rect_family, square_family
from .lattice import SubsystemCode, build_bacon_shor, certify_parameters
from .proof import (
    ChainReport,
    check_suffices,
    lemma_binomial,
    lemma_power,
    lemma_quadratic,
    margins_strictly_increasing,
    verify_chain,
)
from .scan import ScanRecord, scan
from .symplectic import (
    GeneratorSet,
    PauliVector,
    center,
    gf2_rank,
    in_span,
    symplectic_product,
    weight,
)

__version__ = "0.1.0"
