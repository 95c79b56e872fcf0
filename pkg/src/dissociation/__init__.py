"""Dissociation number: exact solvers, the n - (m + k + c1)/3 lower bound,
a constructive certificate, and recognition of the graphs meeting it."""

from __future__ import annotations

from .bounds import (
    BoundReport,
    InequalityCheck,
    bound_e1,
    bound_e1_packing,
    bounds_report,
    check_inequality,
)
from .constructive import cactus_exact, certify_bound_set, find_dense_block_vertex
from .cycles import (
    c1_count,
    c1_cycles,
    enumerate_induced_cycles,
    is_cactus_forest,
    is_cycle_disjoint,
    max_disjoint_c1_packing,
)
from .errors import (
    BudgetExceeded,
    CycleCapExceeded,
    DissociationError,
    GraphFormatError,
    InvariantViolation,
    NotApplicableError,
    PackingLimitExceeded,
)
from .extremal import (
    Base,
    ConstructionTrace,
    SpikedCycleSpec,
    Step,
    apply_operation,
    build_spiked_cycle,
    generate_member,
    has_avoiding_maximum_set,
    is_extremal_tree,
    is_good,
    is_very_good,
    membership_in_C,
    membership_in_T,
    random_member,
)
from .graph import (
    BlockDecomposition,
    Graph,
    block_decomposition,
    components,
    parse_graph,
    write_graph,
)
from .solver import (
    DissociationCertificate,
    SearchLimits,
    diss_exact,
    diss_exact_avoiding,
    diss_forest_dp,
    is_dissociation_set,
)

__version__ = "0.1.0"
