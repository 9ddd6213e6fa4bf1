"""Classification of the Frobenius action on the l-torsion subgroup.

The Frobenius endomorphism acts on E[l] as a 2x2 matrix over GF(l) with
characteristic polynomial x^2 - tx + q, t the trace over the base field.
Everything is derived from t mod l; the one case the trace cannot settle
(double eigenvalue: scalar action vs a nontrivial Jordan block) is decided
by a single gcd degree test against the division polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from sympy import isprime

from .curve import Curve, count_points
from .divpoly import psi_x
from .polyring import Polynomial, gcd, powmod

SPLIT_DISTINCT = "split_distinct"
JORDAN = "jordan"
SCALAR = "scalar"
SPLIT_EQUAL_ORDERS = "split_equal_orders"
IRREDUCIBLE = "irreducible"


class ClassifyError(ValueError):
    pass


class InvariantError(RuntimeError):
    """A relation the theory guarantees failed to hold; indicates a bug."""


@dataclass(frozen=True)
class FrobeniusClass:
    """Eigenstructure of Frobenius on E[l].

    kind is one of:
      split_distinct     -- eigenvalues rho, q/rho of different orders
                            alpha < beta (in scope for prediction)
      jordan             -- double eigenvalue rho, non-diagonalizable
                            (in scope for prediction)
      scalar             -- Frobenius acts as multiplication by rho
      split_equal_orders -- distinct eigenvalues of equal order alpha
      irreducible        -- eigenvalues live in GF(l^2), of order alpha

    alpha is always the degree of the minimal extension containing a
    nonzero l-torsion point; rho is the eigenvalue of order alpha when one
    exists in GF(l); beta is the order of the complementary eigenvalue in
    the split_distinct case.
    """

    kind: str
    l: int
    trace: int          # t mod l
    q_mod_l: int
    alpha: int
    rho: Optional[int] = None
    beta: Optional[int] = None

    @property
    def in_scope(self) -> bool:
        """Whether the pattern prediction covers this class (the torsion
        points generate several different extension fields)."""
        return self.kind in (SPLIT_DISTINCT, JORDAN)


@lru_cache(maxsize=None)
def _order_mod(x: int, l: int) -> int:
    """Multiplicative order of x mod a small prime l, by direct iteration."""
    v = x % l
    if v == 0:
        raise ClassifyError("order of zero mod l is undefined")
    o = 1
    while v != 1:
        v = v * x % l
        o += 1
    return o


def _sqrt_mod(a: int, l: int) -> Optional[int]:
    """Square root mod a small odd prime by exhaustive search."""
    a %= l
    for r in range((l + 1) // 2 + 1):
        if r * r % l == a:
            return r
    return None


def charpoly_roots_mod_l(t: int, q: int, l: int) -> Tuple[str, Optional[Tuple[int, ...]]]:
    """Roots of x^2 - tx + q in GF(l).

    Returns ("distinct", (r1, r2)), ("double", (r,)), or ("none", None).
    """
    if not isprime(l) or l == 2:
        raise ClassifyError(f"l must be an odd prime, got {l}")
    if q % l == 0:
        raise ClassifyError(f"l = {l} divides q = {q}; l must not be the characteristic")
    t %= l
    disc = (t * t - 4 * q) % l
    s = _sqrt_mod(disc, l)
    if s is None:
        return "none", None
    inv2 = pow(2, -1, l)
    if s == 0:
        return "double", ((t * inv2) % l,)
    r1 = (t + s) * inv2 % l
    r2 = (t - s) * inv2 % l
    return "distinct", (r1, r2)


def h_degree(x: int) -> int:
    """Irreducible-factor degree contributed by an eigenvector line whose
    points live in a degree-x extension: x when odd, x/2 when even."""
    return x if x % 2 else x // 2


def scalar_vs_jordan_test(
    curve: Curve,
    l: int,
    alpha: int,
    *,
    psi_xpart: Optional[Polynomial] = None,
) -> str:
    """Disambiguate the double-eigenvalue case by abscissa rationality.

    g = gcd(psi_l x-part, x^(q^h(alpha)) - x) has degree (l^2 - 1)/2 when
    Frobenius is scalar (every abscissa rational at degree h(alpha)) and
    (l - 1)/2 when it is a Jordan block (one eigenline only).
    """
    f = psi_xpart if psi_xpart is not None else psi_x(curve, l)
    field = curve.field
    q = field.cardinality
    x = Polynomial.x(field)
    fx = x % f
    h = fx
    for _ in range(h_degree(alpha)):
        h = powmod(h, q, f)
    g = gcd(h - fx, f) if h != fx else f.monic()
    if g.degree == (l * l - 1) // 2:
        return SCALAR
    if g.degree == (l - 1) // 2:
        return JORDAN
    raise InvariantError(
        f"gcd degree {g.degree} in the double-eigenvalue test for {curve!r}, "
        f"l={l}, alpha={alpha}: expected {(l * l - 1) // 2} or {(l - 1) // 2}"
    )


def classify(
    curve: Curve,
    l: int,
    *,
    trace: Optional[int] = None,
    psi_xpart: Optional[Polynomial] = None,
) -> FrobeniusClass:
    """Compute the Frobenius class of E[l] from the trace (plus one gcd
    test in the double-eigenvalue case)."""
    if not isprime(l) or l == 2:
        raise ClassifyError(f"l must be an odd prime, got {l}")
    p = curve.field.characteristic
    if l == p:
        raise ClassifyError(f"l = characteristic = {p} is unsupported")
    q = curve.field.cardinality
    if trace is None:
        trace = count_points(curve).trace
    t = trace % l
    qm = q % l
    shape, roots = charpoly_roots_mod_l(t, q, l)
    if shape == "distinct":
        r1, r2 = roots
        o1, o2 = _order_mod(r1, l), _order_mod(r2, l)
        if o1 == o2:
            rho = min(r1, r2)  # canonical pick; both eigenvalues share the order
            return FrobeniusClass(SPLIT_EQUAL_ORDERS, l, t, qm, o1, rho=rho)
        if o2 < o1:
            r1, r2, o1, o2 = r2, r1, o2, o1
        return FrobeniusClass(SPLIT_DISTINCT, l, t, qm, o1, rho=r1, beta=o2)
    if shape == "double":
        rho = roots[0]
        alpha = _order_mod(rho, l)
        kind = scalar_vs_jordan_test(curve, l, alpha, psi_xpart=psi_xpart)
        return FrobeniusClass(kind, l, t, qm, alpha, rho=rho)
    # irreducible characteristic polynomial: eigenvalues live in GF(l^2),
    # realised as Z_l[x]/(x^2 - t x + q) with the class of x as eigenvalue.
    # Conjugate roots share an order, so one orbit computation suffices.
    a, b = 0, 1  # a + b*x, starting at x
    alpha = 1
    while (a, b) != (1, 0):
        a, b = (-q * b) % l, (a + t * b) % l
        alpha += 1
        if alpha > l * l:
            raise InvariantError(
                f"eigenvalue order search failed for x^2 - {t}x + {q} mod {l}"
            )
    return FrobeniusClass(IRREDUCIBLE, l, t, qm, alpha)
