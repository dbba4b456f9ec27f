"""Exact arithmetic for signed permutations, signed graphs, and edge orderings."""

from .census import (
    CountResult,
    FactorizationQuery,
    chapuy_stump_count,
    count_factorizations,
    count_odd_full_cycles,
    enumerate_signed_trees_one_loop,
    even_cycle_factorization_check,
    odd_cycle_factorization_check,
    z_count,
)
from .decide import (
    DEFAULT_EDGE_CAP,
    FcpoReport,
    Universality,
    connected_even_betti,
    fixed_point_ordering,
    has_fcpo_unsigned,
    has_signed_fcpo,
    has_signed_fcpo_brute,
    universal_full_cyclic,
)
from .errors import (
    AcyclicGraphError,
    BudgetExceededError,
    DegreeMismatchError,
    EdgeCapExceededError,
)
from .graphs import Edge, Multigraph, SignedGraph
from .orderings import (
    Decomposition,
    EdgeOrdering,
    UnderlyingOrdering,
    decompose,
    phi,
    phi_fiber,
    phi_fiber_count,
)
from .permutations import (
    MAX_DEGREE,
    CycleType,
    Fullness,
    NormalForm,
    SignedCycle,
    SignedPermutation,
    SignedTransposition,
    all_elements,
    all_transpositions,
    compose,
    compose_word,
    cycle_permutation,
    from_transposition,
    parse_transposition,
    positive_transpositions,
)

__version__ = "0.1.0"

__all__ = [
    "AcyclicGraphError",
    "BudgetExceededError",
    "CountResult",
    "CycleType",
    "DEFAULT_EDGE_CAP",
    "Decomposition",
    "DegreeMismatchError",
    "Edge",
    "EdgeCapExceededError",
    "EdgeOrdering",
    "FactorizationQuery",
    "FcpoReport",
    "Fullness",
    "MAX_DEGREE",
    "Multigraph",
    "NormalForm",
    "SignedCycle",
    "SignedGraph",
    "SignedPermutation",
    "SignedTransposition",
    "UnderlyingOrdering",
    "Universality",
    "all_elements",
    "all_transpositions",
    "chapuy_stump_count",
    "compose",
    "compose_word",
    "connected_even_betti",
    "count_factorizations",
    "count_odd_full_cycles",
    "cycle_permutation",
    "decompose",
    "enumerate_signed_trees_one_loop",
    "even_cycle_factorization_check",
    "fixed_point_ordering",
    "from_transposition",
    "has_fcpo_unsigned",
    "has_signed_fcpo",
    "has_signed_fcpo_brute",
    "odd_cycle_factorization_check",
    "parse_transposition",
    "phi",
    "phi_fiber",
    "phi_fiber_count",
    "positive_transpositions",
    "universal_full_cyclic",
    "z_count",
]
