"""Controllability analysis of permutation-symmetric qudit networks.

Exact su(d) representation bookkeeping (i-weights, Gelfand-Tsetlin patterns,
Clebsch-Gordan multiplicities), Casimir operators and isotypic projection,
and a numerical Lie-closure engine with subspace-controllability verdicts.
"""

from .linalg import (
    CLUSTER_TOL,
    RANK_TOL,
    EigenClustering,
    OrthonormalSpan,
    anticommutator,
    cluster_eigenvalues,
    commutator,
    frobenius_inner,
    hermitian_eig,
    is_hermitian,
    is_skew_hermitian,
    kron,
    matrix_from_json,
    matrix_to_json,
    orthonormal_extend,
    real_span_dim,
    span_of,
)
from .reptheory import (
    GTPattern,
    SSYT,
    admissible_reps,
    algorithm1_decompose,
    ambient_commutant_dim,
    cg_decompose,
    center_dimension,
    enumerate_gt_patterns,
    gt_to_ssyt,
    irrep_dimension,
    normalize_iweight,
    quantum_numbers,
    ssyt_to_gt,
    sz_eigenvalue,
    tensor_with_standard,
    weight_vector,
)
from .generators import (
    HermitianBasis,
    StructureConstants,
    collective,
    dicke_basis,
    gell_mann_basis,
    hat_f,
    multi_indices,
    pauli_matrices,
    perm_from_cycles,
    permutation_operator,
    standard_spin_ops,
    structure_constants,
    symmetric_sum,
    two_body_hamiltonian,
    young_projector_21,
)
from .casimir import (
    CasimirSet,
    CenterBasis,
    IsotypicBlock,
    build_C2,
    build_C3,
    c2_eigenvalue,
    casimir_set,
    center_basis,
    center_project,
    degeneracy_search,
    isotypic_blocks,
    qubit_center_element,
)
from .closure import (
    ControllabilityReport,
    GeneratorSet,
    LieClosureResult,
    levi_split,
    lie_closure,
    membership,
    preset,
    restrict_to_block,
    subspace_controllability,
)

__version__ = "0.1.0"
