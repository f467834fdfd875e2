"""seqlab: balanced sequences from Fibonacci-word colourings.

Construction of d-ary balanced sequences by colouring the Fibonacci word
with constant-gap sequences, analysis of their repetition structure (return
words, bispecial factors, fractional powers), and exact golden-mean bounds
on asymptotic repetition exponents.
"""

from .analysis import (
    BalanceReport,
    BalanceWitness,
    FibonacciBispecial,
    OccurrenceList,
    RepetitionRecord,
    ReturnWordSet,
    bispecial_factors,
    derived_sequence,
    fibonacci_bispecial,
    fibonacci_bispecial_lengths,
    is_balanced,
    max_fractional_power,
    occurrences,
    parikh_is_fib_factor,
    return_words,
    sufficiently_coloured,
)
from .exponents import (
    BoundResult,
    CoefficientBoundCertificate,
    ExponentEstimate,
    ThresholdRow,
    coefficient_lower_bounds,
    colouring_coefficient_certificate,
    colouring_exponent_bound,
    empirical_asymptotic_estimate,
    fibonacci_asymptotic_estimate,
    repetitive_threshold_bound,
    shortest_return_lower_bound,
    split_letter,
    threshold_table,
)
from .golden import (
    ONE,
    TAU,
    ZERO,
    FibPropertyReport,
    GoldenNumber,
    fib,
    sqrt5_sign,
    tau_pow,
    verify_fib_properties,
)
from .words import (
    FIBONACCI_MORPHISM,
    ColouringGenerator,
    ConstantGapSequence,
    FixedPointGenerator,
    Morphism,
    PeriodicGenerator,
    SequenceGenerator,
    Word,
    colour,
    colouring,
    constant_gap,
    discolour,
    fibonacci_sequence,
    fixed_point,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "BalanceWitness",
    "BoundResult",
    "CoefficientBoundCertificate",
    "ColouringGenerator",
    "ConstantGapSequence",
    "ExponentEstimate",
    "FIBONACCI_MORPHISM",
    "FibPropertyReport",
    "FibonacciBispecial",
    "FixedPointGenerator",
    "GoldenNumber",
    "Morphism",
    "ONE",
    "OccurrenceList",
    "PeriodicGenerator",
    "RepetitionRecord",
    "ReturnWordSet",
    "SequenceGenerator",
    "TAU",
    "ThresholdRow",
    "Word",
    "ZERO",
    "bispecial_factors",
    "coefficient_lower_bounds",
    "colour",
    "colouring",
    "colouring_coefficient_certificate",
    "colouring_exponent_bound",
    "constant_gap",
    "derived_sequence",
    "discolour",
    "empirical_asymptotic_estimate",
    "fib",
    "fibonacci_asymptotic_estimate",
    "fibonacci_bispecial",
    "fibonacci_bispecial_lengths",
    "fibonacci_sequence",
    "fixed_point",
    "is_balanced",
    "max_fractional_power",
    "occurrences",
    "parikh_is_fib_factor",
    "repetitive_threshold_bound",
    "return_words",
    "shortest_return_lower_bound",
    "split_letter",
    "sqrt5_sign",
    "sufficiently_coloured",
    "tau_pow",
    "threshold_table",
    "verify_fib_properties",
]
