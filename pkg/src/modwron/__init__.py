"""Exact q-series arithmetic, Wronskians of modular forms, symmetric-power
differential operators, and supersingular polynomials."""

from .qseries import QSeries, first_mismatch, DEFAULT_PREC, LATTICE_CAP
from .etaprod import (ProductSpec, ThetaSpec, eta, named_series,
                      product_series, theta_sum)
from .modpoly import (DivisorData, MFPoly, E4, E6, DELTA, G4, G6, bernoulli,
                      decompose, delta_std, dim_modular, divisor_polynomial,
                      eisenstein, identify, j_series, theta_derivation,
                      theta_h, theta_power, to_qseries)
from .wronskian import (ModularBasis, VanishingReport, echelonize, normalize,
                        quotient_form, vanishing_check, wronskian,
                        wronskian_derived)
from .symmpow import (RatPoly, SymWronskianReport, ThetaOperator, apply,
                      d_operator, kz_coeff, r12_vanishing_roots, r_recursion,
                      sym_basis, sym_quotient_closed_form,
                      sym_wronskian_check)
from .ssing import (CongruenceReport, FpPoly, SupersingularReport,
                    congruence_constant_check, epsilon_factors, fp_gcd,
                    hasse_oracle, legendre_symbol, linear_quadratic_split,
                    reduce_mod_p, ss_poly_deligne, ss_poly_wronskian,
                    ss_tilde, supersingular_report)
from .partitions import (ColorSpec, RecurrenceReport, colored_count,
                         pab_count, partition_function, verify_recurrences)
from .cli import VerificationReport, run_all, verify

__version__ = "0.1.0"

__all__ = [
    "QSeries", "first_mismatch", "DEFAULT_PREC", "LATTICE_CAP",
    "ProductSpec", "ThetaSpec", "eta", "named_series", "product_series",
    "theta_sum",
    "DivisorData", "MFPoly", "E4", "E6", "DELTA", "G4", "G6", "bernoulli",
    "decompose", "delta_std", "dim_modular", "divisor_polynomial",
    "eisenstein", "identify", "j_series", "theta_derivation", "theta_h",
    "theta_power", "to_qseries",
    "ModularBasis", "VanishingReport", "echelonize", "normalize",
    "quotient_form", "vanishing_check", "wronskian", "wronskian_derived",
    "RatPoly", "SymWronskianReport", "ThetaOperator", "apply", "d_operator",
    "kz_coeff", "r12_vanishing_roots", "r_recursion", "sym_basis",
    "sym_quotient_closed_form", "sym_wronskian_check",
    "CongruenceReport", "FpPoly", "SupersingularReport",
    "congruence_constant_check", "epsilon_factors", "fp_gcd", "hasse_oracle",
    "legendre_symbol", "linear_quadratic_split", "reduce_mod_p",
    "ss_poly_deligne", "ss_poly_wronskian", "ss_tilde",
    "supersingular_report",
    "ColorSpec", "RecurrenceReport", "colored_count", "pab_count",
    "partition_function", "verify_recurrences",
    "VerificationReport", "run_all", "verify",
    "__version__",
]
