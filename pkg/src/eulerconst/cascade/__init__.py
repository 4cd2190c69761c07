from .diagnostics import CltReport, RecursionPoint, clt_report, normal_cdf, recursion_check
from .distributions import (
    SurvivalFn,
    cdf_y_closed,
    cdf_z_gil_pelaez,
    char_fn_z,
    gil_pelaez_integrand,
    omega_cutoff,
    survival_z,
)
from .probabilities import (
    TABLE1,
    TABLE1_NOTES,
    TABLE2,
    PiEstimate,
    PiMethod,
    pi7_closed,
    pi_eval,
    pi_monte_carlo,
)
from .sampling import count_below_one, sample_y, sample_z

__all__ = [
    "CltReport",
    "RecursionPoint",
    "clt_report",
    "normal_cdf",
    "recursion_check",
    "SurvivalFn",
    "cdf_y_closed",
    "cdf_z_gil_pelaez",
    "char_fn_z",
    "gil_pelaez_integrand",
    "omega_cutoff",
    "survival_z",
    "TABLE1",
    "TABLE1_NOTES",
    "TABLE2",
    "PiEstimate",
    "PiMethod",
    "pi7_closed",
    "pi_eval",
    "pi_monte_carlo",
    "count_below_one",
    "sample_y",
    "sample_z",
]
