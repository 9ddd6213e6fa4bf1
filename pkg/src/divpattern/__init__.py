"""Factorization patterns of division polynomials of elliptic curves
over finite fields: prediction from the Frobenius eigenstructure on the
l-torsion, empirical verification by actual factorization, and a
brute-force torsion-basis oracle."""

__version__ = "0.1.0"

from .curve import Curve, CurveOrderData, Point, count_points, make_curve, random_point
from .divpoly import DivisionPolynomial, psi, psi_x, torsion_abscissas
from .ff import (
    FieldElement,
    FieldError,
    embed,
    is_square,
    make_extension,
    make_prime_field,
    multiplicative_order,
    sqrt,
)
from .frobclass import FrobeniusClass, charpoly_roots_mod_l, classify
from .oracle import (
    FrobeniusMatrix,
    TorsionBasis,
    empirical_pattern_from_orbits,
    frobenius_matrix,
    minimal_pm_degree,
    oracle_report,
    splitting_degree,
    torsion_basis,
)
from .pattern import (
    Prediction,
    VerificationReport,
    h_func,
    i_func,
    i_func_uncorrected,
    predict,
    verify,
)
from .polyring import (
    Factorization,
    FactorPattern,
    Polynomial,
    factor,
    find_irreducible,
    gcd,
    is_irreducible,
    pattern_of,
    powmod,
    roots_in_field,
)
from .scan import ScanRecord, ScanResult, scan

__all__ = [name for name in dir() if not name.startswith("_")]
