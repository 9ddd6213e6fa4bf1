"""Division polynomials of a short Weierstrass curve.

Every psi_n is kept in (parity, x-part) form: for odd n the full division
polynomial equals f(x); for even n it equals y * f(x), all y^2 occurrences
having been folded through the curve equation y^2 = x^3 + ax + b.  With
w = x^3 + ax + b the recurrences become purely univariate:

    f_{2m}   = f_m (f_{m+2} f_{m-1}^2 - f_{m-2} f_{m+1}^2) / 2
    f_{2m+1} = w^2 f_{m+2} f_m^3 - f_{m-1} f_{m+1}^3        (m even)
    f_{2m+1} = f_{m+2} f_m^3 - w^2 f_{m-1} f_{m+1}^3        (m odd)

For odd n coprime to the characteristic, deg f = (n^2 - 1) / 2 with
leading coefficient n.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

from .curve import Curve
from .ff import Field, FieldElement
from .polyring import Polynomial, roots_in_field

DEFAULT_INDEX_CAP = 31


class DivisionPolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class DivisionPolynomial:
    index: int
    is_even: bool       # True when the full polynomial carries a factor y
    x_part: Polynomial


def _x_parts(curve: Curve, n: int) -> dict:
    field = curve.field
    a, b = curve.a.rep, curve.b.rep

    def poly(*coeffs):
        return Polynomial(field, coeffs)

    w = poly(b, a, 0, 1)
    w2 = w * w
    a2 = field.mul(a, a)
    a3 = field.mul(a2, a)
    b2 = field.mul(b, b)
    ab = field.mul(a, b)
    table = {
        0: Polynomial.zero(field),
        1: Polynomial.one(field),
        2: poly(2),
        3: poly(field.neg(a2), field.mul(field.coerce_rep(12), b),
                field.mul(field.coerce_rep(6), a), 0, 3),
        4: poly(
            field.neg(field.add(field.mul(field.coerce_rep(8), b2), a3)),
            field.neg(field.mul(field.coerce_rep(4), ab)),
            field.neg(field.mul(field.coerce_rep(5), a2)),
            field.mul(field.coerce_rep(20), b),
            field.mul(field.coerce_rep(5), a),
            0,
            1,
        ).scale(4),
    }
    inv2 = field.inv(field.coerce_rep(2))

    def f(k: int) -> Polynomial:
        got = table.get(k)
        if got is not None:
            return got
        m, r = divmod(k, 2)
        if r == 0:
            out = (f(m) * (f(m + 2) * f(m - 1) ** 2 - f(m - 2) * f(m + 1) ** 2)).scale(inv2)
        elif m % 2 == 0:
            out = w2 * f(m + 2) * f(m) ** 3 - f(m - 1) * f(m + 1) ** 3
        else:
            out = f(m + 2) * f(m) ** 3 - w2 * f(m - 1) * f(m + 1) ** 3
        table[k] = out
        return out

    f(n)
    return table


def psi(curve: Curve, n: int, index_cap: int = DEFAULT_INDEX_CAP) -> DivisionPolynomial:
    """The n-th division polynomial of the curve in (parity, x-part) form."""
    if n < 0:
        raise DivisionPolynomialError(f"division polynomial index must be >= 0, got {n}")
    if n > index_cap:
        raise DivisionPolynomialError(
            f"index {n} exceeds the cap {index_cap}; raise index_cap explicitly"
        )
    x_part = _x_parts(curve, n)[n]
    return DivisionPolynomial(n, n % 2 == 0, x_part)


def psi_x(curve: Curve, n: int, index_cap: int = DEFAULT_INDEX_CAP) -> Polynomial:
    return psi(curve, n, index_cap=index_cap).x_part


def torsion_abscissas(curve: Curve, l: int, in_field: Field, seed: int = 0):
    """Roots of psi_l's x-part in the given field: the x-coordinates of
    nonzero l-torsion points lying in (or quadratically above) that field."""
    if l % 2 == 0 or not isprime(l):
        raise DivisionPolynomialError(f"torsion index must be an odd prime, got {l}")
    if l == curve.field.characteristic:
        raise DivisionPolynomialError(
            "torsion index equal to the field characteristic is unsupported"
        )
    f = psi_x(curve, l).map_to(in_field)
    return roots_in_field(f, seed=seed)
