"""RIS-aided radar detection.

Thin wrapper over the C++ core. Experiment functions take a configuration
document as text, in the same `[section] key = value` format the CLI reads.
"""

from ._core import (
    ConfigError,
    DomainError,
    UnsupportedError,
    closely_table,
    fill_distance,
    half_power_beamwidth,
    marcum_q,
    optimal_split_closely,
    pd_dual_exponential,
    pd_single,
    pfa_from_threshold,
    scenario_report,
    threshold_from_pfa,
    validate,
    widely_curves,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "UnsupportedError",
    "closely_table",
    "fill_distance",
    "half_power_beamwidth",
    "marcum_q",
    "optimal_split_closely",
    "pd_dual_exponential",
    "pd_single",
    "pfa_from_threshold",
    "scenario_report",
    "threshold_from_pfa",
    "validate",
    "widely_curves",
]
