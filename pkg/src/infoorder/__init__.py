"""Information orderings on the probability simplex and on density matrices."""
from .errors import *  # noqa: F401,F403
from .simplex import (
    Distribution,
    MonotoneDistribution,
    Permutation,
    VALIDATION_TOL,
    bottom,
    canonical,
    common_sector_permutation,
    extrema,
    make_distribution,
    mix,
    monotone_retract,
    permute,
    shannon_entropy,
    support_subset,
    top,
)
from .orders import (
    EPS,
    Bayesian,
    ComparisonResult,
    LownerMinus,
    LownerPlus,
    Majorization,
    Meet,
    OrderSpec,
    PredicateOrder,
    Restricted,
    RestrictedParams,
    bayesian_leq,
    compare,
    feature_vector,
    graded_leq,
    leq,
    lowner_minus_leq,
    lowner_plus_leq,
    majorization_leq,
    max_graded_p,
    order_from_name,
    restricted_leq,
    validate_restricted_params,
)
from .measurements import Measurement, mu_minus, mu_plus

__version__ = "0.1.0"
