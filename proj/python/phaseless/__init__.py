"""Exact phaseless polynomial interpolation over the rationals."""

from ._phaseless import (
    PhaselessError,
    ReductionInstance,
    counterexample_pair,
    decode_solution,
    feasibility_residual,
    groebner_basis,
    is_ambiguous,
    oracle_enumerate,
    rational_roots,
    reduce_partition,
    select_next_point,
    solve,
    zero_residual_signs,
)

__all__ = [
    "PhaselessError",
    "ReductionInstance",
    "counterexample_pair",
    "decode_solution",
    "feasibility_residual",
    "groebner_basis",
    "is_ambiguous",
    "oracle_enumerate",
    "rational_roots",
    "reduce_partition",
    "select_next_point",
    "solve",
    "zero_residual_signs",
]
