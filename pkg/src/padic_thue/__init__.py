"""Skolem's p-adic method for 2x^3 - y^3 = +-1, with certificates.

Applications: the P31-set {1, 2, 13} has no extension, and n = 1 is the only
n with n(n+1)/2 a perfect cube.
"""

from .integer_kernel import RationalInterval, cbrt_interval, icbrt, is_perfect_cube, mod_pow
from .padic import (
    PadicInt,
    PadicSeries,
    interpolation_series,
    padic_arith,
    padic_exp,
    padic_inv,
    padic_log,
    series_eval,
)
from .polynomial import THETA_POLY, IntPoly, discriminant_cubic, hensel_lift, poly_eval_mod, roots_mod_p
from .strassman import ValuationProfile, count_exact_roots, strassman_bound
from .skolem import (
    CompanionSequence,
    ThueCertificate,
    build_field_constants,
    build_split_data,
    companion_value,
    lambda_profile,
    residue_sieve,
    solve_thue,
    theta_power_coords,
    verify_fundamental_unit,
)
from .p31 import (
    P31Set,
    check_extension,
    family_claim1,
    family_claim2,
    prove_nonextendible,
    reduce_cubic_triangular,
    search_cubic_triangular,
    search_extensions,
    triangular,
    validate_p31,
)

__version__ = "0.1.0"
