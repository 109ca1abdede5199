"""Exact weight enumerators and t-values of digital nets over finite abelian groups.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._dignet import (
    DignetError,
    GroupSpec,
    Net,
    dual_minimum_weight,
    load_net,
    lower_bound,
    net_from_generators,
    net_from_matrices,
    oracle_t,
    sobol_net,
    t_value,
    weight_enumerator,
    worst_projection,
)

__all__ = [
    "DignetError",
    "GroupSpec",
    "Net",
    "dual_minimum_weight",
    "load_net",
    "lower_bound",
    "net_from_generators",
    "net_from_matrices",
    "oracle_t",
    "sobol_net",
    "t_value",
    "weight_enumerator",
    "worst_projection",
]
