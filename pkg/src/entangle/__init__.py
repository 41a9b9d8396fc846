"""Local-unitary invariants of multipartite states, conjugation orbits of
permutation tuples, double cosets, and graph covers."""

from ._errors import BudgetExceededError, PermutationParseError
from .combinatorics import Partition, partitions_of, stable_hilbert, tensor_invariant_dim_bound, z_lambda
from .coverings import (
    CoveringMap,
    Multigraph,
    VoltageAssignment,
    assign_voltages,
    betti,
    build_cover,
    covers_isomorphic,
    enumerate_cover_classes,
    to_dot,
    verify_cover,
)
from .estimator import LocalUnitaryInvariants
from .invariants import (
    MonomialVector,
    apply_group_element,
    evaluate_invariant,
    exact_rank,
    expand_invariant,
    hilbert_coefficient,
    random_unitary,
)
from .permgroup import (
    OrbitClass,
    Permutation,
    canonicalize,
    compose,
    conjugate,
    cycle_type,
    double_cosets,
    orbits,
    parse_permutation,
    theta,
)

__version__ = "0.1.0"
