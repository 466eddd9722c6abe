"""Word metrics on the integers from power generating sets.

For an integer base a >= 2, the powers {a**i} generate the integers under
addition, and every n has a word length: the least number of terms ±a**i
summing to it.  This package computes those lengths exactly (with witnesses
and an independent search oracle), the block structure of digit expansions
that bounds them from below, leading-digit searches over powers of a second
base, and explicit constants deciding when two such metrics are equivalent.
"""

__version__ = "0.1.0"

from .blocks import (
    BlockCertificate,
    block_certificate,
    certificate_from_representation,
    normalize_dominant,
    normalized_coefficients,
    perturbation_bound,
)
from .digits import (
    AdicExpansion,
    BlockDecomposition,
    LeadingString,
    block_count,
    block_decomposition,
    check_base,
    expand,
    leading_string,
    order,
)
from .equivalence import (
    DistortionTable,
    EquivalenceCertificate,
    decide_equivalence,
    distortion_table,
    equivalence_certificate,
    sampled_bilipschitz_check,
)
from .errors import (
    HypothesisViolation,
    LimitError,
    ScanLimitReached,
    SearchBudgetExceeded,
)
from .powersearch import (
    DensityReport,
    DependenceResult,
    block_growth_search,
    find_aligned_exponents,
    find_leading_exponents,
    integer_root,
    multiplicative_dependence,
    perfect_power_root,
)
from .wordlen import (
    LengthResult,
    SignedRepresentation,
    distance,
    minimal_length,
    oracle_length,
    oracle_length_many,
)

__all__ = [
    "AdicExpansion",
    "BlockCertificate",
    "BlockDecomposition",
    "DensityReport",
    "DependenceResult",
    "DistortionTable",
    "EquivalenceCertificate",
    "HypothesisViolation",
    "LeadingString",
    "LengthResult",
    "LimitError",
    "ScanLimitReached",
    "SearchBudgetExceeded",
    "SignedRepresentation",
    "block_certificate",
    "block_count",
    "block_decomposition",
    "block_growth_search",
    "certificate_from_representation",
    "check_base",
    "decide_equivalence",
    "distance",
    "distortion_table",
    "equivalence_certificate",
    "expand",
    "find_aligned_exponents",
    "find_leading_exponents",
    "integer_root",
    "leading_string",
    "minimal_length",
    "multiplicative_dependence",
    "normalize_dominant",
    "normalized_coefficients",
    "oracle_length",
    "oracle_length_many",
    "order",
    "perfect_power_root",
    "perturbation_bound",
    "sampled_bilipschitz_check",
    "__version__",
]
