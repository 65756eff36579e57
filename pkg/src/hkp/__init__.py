"""Workbench for the hidden kernel problem on powers of 2-element algebras."""

from .bitvec import (
    AND,
    AND_OR3,
    CONST0,
    CONST1,
    IFF,
    MAJ,
    NOT,
    OR,
    OR_AND3,
    XOR,
    XOR3,
    BitVec,
    Call,
    ContractViolation,
    Term,
    TruthTable,
    Var,
    eval_op,
    eval_term,
    lift_pointwise,
    term_table,
)
from .clones import (
    ClassificationCase,
    GeneratorSet,
    NAMED_CLONE_IDS,
    Tractability,
    UnclassifiedCloneError,
    classify,
    clone_leq,
    jonsson_terms,
    named_clone,
    term_closure,
    verify_jonsson,
)
from .congruence import (
    Congruence,
    cg,
    congruence_of_subspace,
    enumerate_congruences,
    is_congruence,
    is_xor_congruence,
    join,
    min_generating_pairs,
    subspace_of_congruence,
    zero_block,
)
from .gf2 import (
    Gf2Subspace,
    all_subspaces,
    character_sum,
    nullspace,
    perp_involution_check,
    random_subspace,
    row_reduce,
)
from .hardness import (
    Antichain,
    CollisionStats,
    collision_experiment,
    middle_layer,
    negation_pairing,
    speedup_table,
    sum_distinct_probes,
    theta_Y_neg,
    theta_Z,
    theta_z_xor,
)
from .oracle import (
    HiddenOracle,
    export_transcript_csv,
    hidden_congruence_for_verification,
    make_hidden_oracle,
)
from .quantum import (
    OutcomeDistribution,
    QuantumState,
    apply_hadamard_first_register,
    apply_oracle_unitary,
    simon_distribution,
    simon_sample,
    uniform_on_dual,
)
from .solvers import SolveReport, solve_cd, solve_exhaustive, solve_hkp, solve_simon

__version__ = "0.1.0"
