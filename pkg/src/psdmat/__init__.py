"""Binary matrices with good aperiodic peak-sidelobe distances.

Construction of square binary matrices from difference sets, almost
difference sets and cyclotomy, with exact autocorrelation analysis,
bound checks and desk-scale exhaustive searches.
"""

from .bordering import (
    BorderedMatrix,
    BuildResult,
    border,
    build_good_matrix,
    choose_punctures,
    predicted_distance,
    puncture,
    s_sets,
)
from .constructions import ConstructionSpec, generate
from .cyclotomy import (
    CyclotomyContext,
    cyclotomic_classes,
    cyclotomic_number,
    primitive_root,
)
from .designs import (
    DesignClass,
    DifferenceSpectrum,
    ResidueSet,
    bv_bound,
    circulant,
    classify,
    complement,
    difference_spectrum,
    equality_condition,
    is_special,
    soptimality,
    special_bound,
)
from .errors import BudgetExceededError, ConsistencyError, DistanceMismatchError
from .matrix import (
    AutocorrelationTable,
    BinaryMatrix,
    CorrelationProfile,
    autocorrelation,
    autocorrelation_table,
    compare_profiles,
    crosscorrelation,
    naive_autocorrelation,
    profile,
    profile_less,
    skirlo_bound,
    unit_shift_distance,
    unit_shift_sidelobe,
)
from .search import SearchResult, SearchSpace, exhaustive_search, verify_observations

__all__ = [
    "AutocorrelationTable",
    "BinaryMatrix",
    "BorderedMatrix",
    "BudgetExceededError",
    "BuildResult",
    "ConsistencyError",
    "ConstructionSpec",
    "CorrelationProfile",
    "CyclotomyContext",
    "DesignClass",
    "DifferenceSpectrum",
    "DistanceMismatchError",
    "ResidueSet",
    "SearchResult",
    "SearchSpace",
    "autocorrelation",
    "autocorrelation_table",
    "border",
    "build_good_matrix",
    "bv_bound",
    "choose_punctures",
    "circulant",
    "classify",
    "compare_profiles",
    "complement",
    "crosscorrelation",
    "cyclotomic_classes",
    "cyclotomic_number",
    "difference_spectrum",
    "equality_condition",
    "exhaustive_search",
    "generate",
    "is_special",
    "naive_autocorrelation",
    "predicted_distance",
    "primitive_root",
    "profile",
    "profile_less",
    "puncture",
    "s_sets",
    "skirlo_bound",
    "soptimality",
    "special_bound",
    "unit_shift_distance",
    "unit_shift_sidelobe",
    "verify_observations",
]
