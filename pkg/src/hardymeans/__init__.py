"""Means, their Hardy property, and numeric falsification tools.

The package evaluates power means, Gini means and Gaussian compound means
on finite positive samples; classifies each family's Hardy property by
closed-form criteria; traces the prefix-mean ratio diagnostic whose
divergence rules Hardiness out; builds finite witness certificates refuting
specific Hardy constants; and reproduces the slow-growth constants of the
compound ratio lower bound in extended precision.
"""

from .compound import (
    DEFAULT_SETTINGS,
    BoundCheck,
    BoundParams,
    CompoundResult,
    CompoundSettings,
    check_compound_lower_bound,
    compound_iterate,
    compound_mean,
    compound_two_point,
    evaluate_mean,
    invariant_mean,
    prefix_value,
    rescale_monotone,
    rescale_step,
)
from .errors import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
    HardyMeansError,
    UnsupportedParametersError,
    WitnessNotFoundError,
    WitnessValidationError,
)
from .hardy import (
    ChainLedger,
    HardyVerdict,
    RatioTrace,
    SequenceSpec,
    TraceRecord,
    Witness,
    WitnessCheck,
    build_witness,
    chain_check,
    classify,
    classify_gauss,
    classify_gini,
    classify_power,
    compound_ratio_lower_bound,
    custom_sequence,
    explicit_sequence,
    gini_ratio_lower_bound,
    harmonic_sequence,
    iter_ratio_trace,
    ratio_trace,
    reduce_gini,
    verify_witness,
)
from .means import (
    GaussCompound,
    GiniMean,
    MeanDescriptor,
    PowerMean,
    PrefixEvaluator,
    gini_mean,
    power_mean,
    required_exponents,
)
from .slow_growth import GrowthReport, growth_exponent, growth_report, threshold_log10

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # means
    "PowerMean",
    "GiniMean",
    "GaussCompound",
    "MeanDescriptor",
    "PrefixEvaluator",
    "power_mean",
    "gini_mean",
    "required_exponents",
    # compound
    "CompoundSettings",
    "CompoundResult",
    "DEFAULT_SETTINGS",
    "compound_iterate",
    "compound_mean",
    "evaluate_mean",
    "prefix_value",
    "BoundParams",
    "BoundCheck",
    "compound_two_point",
    "rescale_step",
    "invariant_mean",
    "check_compound_lower_bound",
    "rescale_monotone",
    # hardy
    "HardyVerdict",
    "classify",
    "classify_power",
    "classify_gauss",
    "classify_gini",
    "reduce_gini",
    "SequenceSpec",
    "harmonic_sequence",
    "explicit_sequence",
    "custom_sequence",
    "TraceRecord",
    "RatioTrace",
    "ratio_trace",
    "iter_ratio_trace",
    "gini_ratio_lower_bound",
    "compound_ratio_lower_bound",
    "ChainLedger",
    "chain_check",
    "Witness",
    "WitnessCheck",
    "build_witness",
    "verify_witness",
    # slow growth
    "GrowthReport",
    "growth_exponent",
    "growth_report",
    "threshold_log10",
    # errors
    "HardyMeansError",
    "DomainError",
    "UnsupportedParametersError",
    "ConfigurationError",
    "ConvergenceError",
    "WitnessNotFoundError",
    "WitnessValidationError",
]
