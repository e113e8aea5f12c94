"""Real-valued Bessel-type basis functions of pure imaginary order.

Fast double-precision evaluation with guaranteed a-priori truncation
bounds, an independent extended-precision oracle for validation, a
classifier for generalized Bessel-form equations, and a CLI.
"""

from ._backend import BACKEND
from .errors import DomainError, ToleranceError
from .error_bounds import (
    BoundReport,
    MAX_TERMS,
    bound_report,
    derivative_tail_bound,
    factor_F,
    m_of_nu,
    majorant_bound,
    required_terms,
    tail_bound,
)
from .series_core import (
    CoeffPair,
    CoeffTable,
    Kind,
    PairResult,
    advance_modified,
    advance_oscillatory,
    build_table,
    eval_pair,
    gamma_modulus_imag,
    wronskian_residual,
)
from .lommel import ImaginaryOrder, LommelSolution, RealOrder, classify
from .oracle import (
    OracleValue,
    hp_bessel_imag,
    hp_bessel_j_int,
    hp_gamma,
    kl_macdonald,
    oracle_pair,
    oracle_pair_derivs_hp,
    oracle_pair_hp,
    truncated_pair_hp,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "CoeffPair",
    "CoeffTable",
    "DomainError",
    "ImaginaryOrder",
    "Kind",
    "LommelSolution",
    "MAX_TERMS",
    "OracleValue",
    "PairResult",
    "RealOrder",
    "ToleranceError",
    "advance_modified",
    "advance_oscillatory",
    "bound_report",
    "build_table",
    "classify",
    "derivative_tail_bound",
    "eval_pair",
    "factor_F",
    "gamma_modulus_imag",
    "hp_bessel_imag",
    "hp_bessel_j_int",
    "hp_gamma",
    "kl_macdonald",
    "m_of_nu",
    "majorant_bound",
    "oracle_pair",
    "oracle_pair_derivs_hp",
    "oracle_pair_hp",
    "required_terms",
    "tail_bound",
    "truncated_pair_hp",
    "wronskian_residual",
    "__version__",
]
