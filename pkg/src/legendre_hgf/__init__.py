"""Periods, finite-field hypergeometric point counts and Hasse-Witt data
for the genus-3 curves y^4 = x(x-1)(x-lambda)."""

from .characters import (
    MultChar,
    char_eval,
    generator_char,
    jacobi_sum,
    norm_binom,
    quadratic_char,
    quartic_char,
    trivial_char,
)
from .classical import (
    ClassicalParams,
    classical_2f1_partial,
    ode_recurrence_check,
    params_from_operator,
    period_params,
    pochhammer,
    series_terms,
    truncated_2f1_mod_p,
)
from .congruence import CongruenceReport, MatchRow, check_thm_congruence, match_table
from .curves import (
    HasseWittMatrix,
    LegendreCurve,
    brute_force_count,
    formula_count,
    hasse_witt,
    trace_frobenius,
)
from .errors import (
    BadFieldResidue,
    DenominatorVanishes,
    DivisionByZero,
    LegendreHGFError,
    MixedFields,
    NotPrime,
    PreconditionViolation,
    RoundingFailure,
    SingularCurve,
    TooLarge,
    ZeroArgument,
)
from .ffhyper import (
    FF2F1Spec,
    ff_2f1,
    ff_2f1_charsum,
    ff_2f1_pointsum,
    inversion_transform_residual,
    inversion_transform_sides,
)
from .field import FieldElement, PrimeField, make_field
from .survey import SurveyResult, SurveyRow, run_survey

__version__ = "0.1.0"
