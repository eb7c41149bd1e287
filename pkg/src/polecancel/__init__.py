"""Exact pole cancellation functions for matrix generalized Nevanlinna functions."""

from .field import (
    ORDER_INF,
    BiPoly,
    BiRatFunc,
    PoleAtPoint,
    Poly,
    QQi,
    RatFunc,
    SingularAtPoint,
    ZeroDenominator,
    rational_real_roots,
)
from .matrices import (
    ConstMatrix,
    NotHermitian,
    RatMatrix,
    ShapeMismatch,
    SingularMatrixFunction,
    resolvent,
)
from .realization import (
    QFunction,
    Realization,
    RealizationError,
    RelationReport,
    as_full,
    build_q,
    choose_base_point,
    hat_q,
    hat_realization,
    kappa,
    kappa_sample,
    minimality,
    sample_upper_half_points,
    validate,
)
from .spectral import (
    JordanChain,
    chain_freedom,
    chain_validate,
    classify_point,
    eigenvalues_rational,
    generalized_zeros_rational,
    jordan_chains,
)
from .pcf import (
    PcfCandidate,
    PcfReport,
    RootCandidate,
    RootReport,
    construct_pcf,
    construct_pcf_regularized,
    construct_root_function,
    cororder_probe,
    gram_products,
    hat_chains_at,
    recover_chain,
    root_to_pcf,
    verify_pcf,
    verify_root_function,
)
from .sampling import random_family, random_realization
from .identities import run_identity_suite

__all__ = [
    "ORDER_INF",
    "BiPoly",
    "BiRatFunc",
    "ConstMatrix",
    "NotHermitian",
    "PoleAtPoint",
    "Poly",
    "QQi",
    "RatFunc",
    "RatMatrix",
    "ShapeMismatch",
    "SingularAtPoint",
    "SingularMatrixFunction",
    "ZeroDenominator",
    "rational_real_roots",
    "resolvent",
    "QFunction",
    "Realization",
    "RealizationError",
    "RelationReport",
    "as_full",
    "build_q",
    "choose_base_point",
    "hat_q",
    "hat_realization",
    "kappa",
    "kappa_sample",
    "minimality",
    "sample_upper_half_points",
    "validate",
    "JordanChain",
    "chain_freedom",
    "chain_validate",
    "classify_point",
    "eigenvalues_rational",
    "generalized_zeros_rational",
    "jordan_chains",
    "PcfCandidate",
    "PcfReport",
    "RootCandidate",
    "RootReport",
    "construct_pcf",
    "construct_pcf_regularized",
    "construct_root_function",
    "cororder_probe",
    "gram_products",
    "hat_chains_at",
    "recover_chain",
    "root_to_pcf",
    "verify_pcf",
    "verify_root_function",
    "random_family",
    "random_realization",
    "run_identity_suite",
]
