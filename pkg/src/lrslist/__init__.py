"""Linearized Reed-Solomon codes in the sum-rank metric: exhaustive oracles and list-size bounds."""

from .bounds import (
    BoundReport,
    FamilyParams,
    SparseSetParams,
    WitnessList,
    build_structured_beta,
    construction1_instance,
    corollary1_radius,
    corollary2_radius,
    corollary3_params,
    corollary4_bound,
    emit_region_data,
    lemma2_bound,
    lift_sparse,
    minimize_rate,
    pigeonhole_witness,
    sparse_set_enumerate,
    theorem1_bound,
    theorem2_bound,
    twist_evaluators,
    weight_scaling_check,
)
from .gf import Automorphism, FElem, FieldTower, build_tower, conjugacy_classes, hilbert90_witness, norm
from .lrs import (
    LrsCode,
    ListOracleResult,
    code_from_spec,
    code_to_spec,
    encode,
    list_size_oracle,
    make_code,
    min_distance_exhaustive,
    validate_code,
)
from .skewpoly import EvalPair, SkewPoly, make_eval_pair, multi_eval, op_eval, skew_mul
from .sumrank import (
    BlockVector,
    count_rank_matrices,
    gamma_q,
    rank_over_subfield,
    sphere_size,
    sum_rank_dist,
    sum_rank_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
