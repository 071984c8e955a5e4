"""Exact and numerical tools for value distribution of entire curves.

Layered bottom-up: exact scalar towers (fields), homogeneous forms (hpoly),
exponential polynomials (expfunc), resultants and general position
(resultant), graded filtrations (filtration), truncation-level bounds
(bounds), then the analytic side: circle quadrature, zero location, and the
Nevanlinna functionals with the main-inequality harness (nevanlinna).
"""

from .fields import GaussRat, RatFunc, ZPoly, zpoly_gcd
from .hpoly import HPoly, monomials
from .expfunc import ExpPoly
from .resultant import (AdmissibilityReport, HypersurfaceFamily,
                        NotAdmissibleError, PowerCertificate, is_admissible,
                        macaulay_resultant, power_certificate,
                        sylvester_resultant)
from .filtration import (FiltrationTable, PsiBasis, basis_is_independent,
                         build_filtration, construct_psi_basis,
                         filtration_tuples, quotient_dim, tuple_count)
from .bounds import (BoundReport, MarginViolation, a_lower_bound, bound_t,
                     compute_truncation_levels, verify_error_margin)
from .quadrature import QuadResult, circle_average, default_target
from .zeros import Divisor, disk_winding, exppoly_zeros, ratfunc_divisors, zpoly_zeros
from .nevanlinna import (AdmissibilityError, DegeneracyError, EntireCurve,
                         NevanlinnaProfile, SmtReport, build_profile,
                         characteristic, counting_function, defect_estimate,
                         divisor_bound_check, jensen_check,
                         log_derivative_diagnostic, nondegeneracy_check,
                         smt_verify, wronskian)
from .parsing import (InputError, ParseError, SchemaError, curve_from_json,
                      family_from_json, hpoly_from_json, load_json_file,
                      parse_ratfunc, parse_scalar, parse_zpoly)

__version__ = "0.1.0"

__all__ = [
    "GaussRat", "RatFunc", "ZPoly", "zpoly_gcd",
    "HPoly", "monomials",
    "ExpPoly",
    "AdmissibilityReport", "HypersurfaceFamily", "NotAdmissibleError",
    "PowerCertificate", "is_admissible", "macaulay_resultant",
    "power_certificate", "sylvester_resultant",
    "FiltrationTable", "PsiBasis", "basis_is_independent", "build_filtration",
    "construct_psi_basis", "filtration_tuples", "quotient_dim", "tuple_count",
    "BoundReport", "MarginViolation", "a_lower_bound", "bound_t",
    "compute_truncation_levels", "verify_error_margin",
    "QuadResult", "circle_average", "default_target",
    "Divisor", "disk_winding", "exppoly_zeros", "ratfunc_divisors",
    "zpoly_zeros",
    "AdmissibilityError", "DegeneracyError", "EntireCurve",
    "NevanlinnaProfile", "SmtReport", "build_profile", "characteristic",
    "counting_function", "defect_estimate", "divisor_bound_check",
    "jensen_check", "log_derivative_diagnostic", "nondegeneracy_check",
    "smt_verify", "wronskian",
    "InputError", "ParseError", "SchemaError", "curve_from_json",
    "family_from_json", "hpoly_from_json", "load_json_file", "parse_ratfunc",
    "parse_scalar", "parse_zpoly",
    "__version__",
]
