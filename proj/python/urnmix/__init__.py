"""Exact urn-walk distributions, mixing curves, and cutoff bounds.

The heavy lifting happens in the C++ extension; this package just re-exports
it under a stable name.
"""

from ._core import (
    Composition,
    CutoffEstimate,
    DenseKernel,
    EmpiricalDistribution,
    GroupElement,
    Parity,
    PowerDistribution,
    ShuffleKind,
    TvBound,
    TypeDistribution,
    UrnConfiguration,
    ZonalTable,
    __version__,
    act,
    build_kernel,
    composition_rank,
    compositions,
    configuration_from_index,
    configuration_index,
    cutoff_threshold,
    distribution_after,
    distribution_after_elementary,
    elementary_symmetric,
    empirical_tv,
    fourier_coefficient,
    fourier_coefficient_numeric,
    group_element_type,
    hamming_distance,
    limit_distribution,
    monomial_symmetric_at_type,
    multinomial,
    parse_shuffle,
    power_distribution,
    shuffle_name,
    simulate,
    transition_probability,
    tv_curve_csv,
    tv_distance,
    tv_upper_bound,
    zonal_table,
    zonal_value,
)

__all__ = [
    "Composition",
    "CutoffEstimate",
    "DenseKernel",
    "EmpiricalDistribution",
    "GroupElement",
    "Parity",
    "PowerDistribution",
    "ShuffleKind",
    "TvBound",
    "TypeDistribution",
    "UrnConfiguration",
    "ZonalTable",
    "__version__",
    "act",
    "build_kernel",
    "composition_rank",
    "compositions",
    "configuration_from_index",
    "configuration_index",
    "cutoff_threshold",
    "distribution_after",
    "distribution_after_elementary",
    "elementary_symmetric",
    "empirical_tv",
    "fourier_coefficient",
    "fourier_coefficient_numeric",
    "group_element_type",
    "hamming_distance",
    "limit_distribution",
    "monomial_symmetric_at_type",
    "multinomial",
    "parse_shuffle",
    "power_distribution",
    "shuffle_name",
    "simulate",
    "transition_probability",
    "tv_curve_csv",
    "tv_distance",
    "tv_upper_bound",
    "zonal_table",
    "zonal_value",
]
