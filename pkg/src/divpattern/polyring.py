"""Dense univariate polynomials over a Field, with complete factorization.

Coefficients are stored as raw field representatives (constant term first,
no trailing zeros); the zero polynomial is the empty tuple and reports
degree -1.  Factorization runs squarefree decomposition, distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting with seeded
randomness, and is exact at any supported field size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Tuple

from sympy import factorint

from .ff import Field, FieldElement, PrimeField


class PolynomialError(ValueError):
    """Invalid polynomial operation (zero divisor, constant factor input...)."""


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs, *, _trusted=False):
        self.field = field
        if _trusted:
            self.coeffs = coeffs
            return
        zero = field.zero_rep
        reps = [field.coerce_rep(c) for c in coeffs]
        while reps and reps[-1] == zero:
            reps.pop()
        self.coeffs = tuple(reps)

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field, (), _trusted=True)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (field.one_rep,), _trusted=True)

    @classmethod
    def constant(cls, c: FieldElement) -> "Polynomial":
        return cls(c.field, [c])

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, (field.zero_rep, field.one_rep), _trusted=True)

    # -- basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def coeff(self, i: int) -> FieldElement:
        rep = self.coeffs[i] if i < len(self.coeffs) else self.field.zero_rep
        return FieldElement(self.field, rep)

    def _check_field(self, other: "Polynomial"):
        if other.field != self.field:
            raise PolynomialError("polynomials over different fields")

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        while out and out[-1] == f.zero_rep:
            out.pop()
        return Polynomial(f, tuple(out), _trusted=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        out = [f.neg(c) for c in b]
        out.extend(f.zero_rep for _ in range(len(a) - len(b)))
        for i, c in enumerate(a):
            out[i] = f.add(out[i], c)
        while out and out[-1] == f.zero_rep:
            out.pop()
        return Polynomial(f, tuple(out), _trusted=True)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, tuple(f.neg(c) for c in self.coeffs), _trusted=True)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(f)
        if isinstance(f, PrimeField):
            p = f.p
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return Polynomial(f, tuple(c % p for c in out), _trusted=True)
        out = [f.zero_rep] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai != f.zero_rep:
                for j, bj in enumerate(b):
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        while out and out[-1] == f.zero_rep:
            out.pop()
        return Polynomial(f, tuple(out), _trusted=True)

    def scale(self, c) -> "Polynomial":
        f = self.field
        rep = f.coerce_rep(c)
        if rep == f.zero_rep:
            return Polynomial.zero(f)
        return Polynomial(f, tuple(f.mul(rep, x) for x in self.coeffs), _trusted=True)

    def __divmod__(self, other: "Polynomial"):
        self._check_field(other)
        f = self.field
        if other.is_zero():
            raise PolynomialError("polynomial division by zero")
        zero = f.zero_rep
        b = other.coeffs
        r = list(self.coeffs)
        if len(r) < len(b):
            return Polynomial.zero(f), self
        q = [zero] * (len(r) - len(b) + 1)
        lead_inv = f.inv(b[-1])
        if isinstance(f, PrimeField):
            p = f.p
            for k in range(len(r) - len(b), -1, -1):
                c = (r[k + len(b) - 1] * lead_inv) % p
                if c:
                    q[k] = c
                    for j in range(len(b) - 1):
                        r[k + j] = (r[k + j] - c * b[j]) % p
                    r[k + len(b) - 1] = 0
        else:
            for k in range(len(r) - len(b), -1, -1):
                c = f.mul(r[k + len(b) - 1], lead_inv)
                if c != zero:
                    q[k] = c
                    for j in range(len(b) - 1):
                        r[k + j] = f.sub(r[k + j], f.mul(c, b[j]))
                    r[k + len(b) - 1] = zero
        del r[len(b) - 1 :]
        while r and r[-1] == zero:
            r.pop()
        while q and q[-1] == zero:
            q.pop()
        return (
            Polynomial(f, tuple(q), _trusted=True),
            Polynomial(f, tuple(r), _trusted=True),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- misc ---------------------------------------------------------------
    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        f = self.field
        lead = self.coeffs[-1]
        if lead == f.one_rep:
            return self
        return self.scale(f.inv(lead))

    def derivative(self) -> "Polynomial":
        f = self.field
        out = [f.mul(f.coerce_rep(i), c) for i, c in enumerate(self.coeffs) if i >= 1]
        while out and out[-1] == f.zero_rep:
            out.pop()
        return Polynomial(f, tuple(out), _trusted=True)

    def evaluate(self, x) -> FieldElement:
        f = self.field
        xr = f.coerce_rep(x)
        acc = f.zero_rep
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, xr), c)
        return FieldElement(f, acc)

    __call__ = evaluate

    def map_to(self, target: Field) -> "Polynomial":
        """Coefficient-wise embedding into an extension field."""
        from .ff import embed

        reps = tuple(
            embed(FieldElement(self.field, c), target).rep for c in self.coeffs
        )
        return Polynomial(target, reps, _trusted=True)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs,))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != self.field.zero_rep:
                if i == 0:
                    terms.append(f"{c}")
                elif i == 1:
                    terms.append(f"{c}*x")
                else:
                    terms.append(f"{c}*x^{i}")
        return "Poly(" + " + ".join(reversed(terms)) + f" over {self.field!r})"


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    """base**e mod modulus by square-and-multiply."""
    if modulus.degree < 1:
        raise PolynomialError("powmod modulus must have degree >= 1")
    if e < 0:
        raise PolynomialError("powmod exponent must be non-negative")
    result = Polynomial.one(base.field)
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


def _frobenius_power(h: Polynomial, q: int, modulus: Polynomial) -> Polynomial:
    """h**q mod modulus (one q-power Frobenius step)."""
    return powmod(h, q, modulus)


def is_irreducible(f: Polynomial) -> bool:
    """Rabin's criterion: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1
    for every prime r dividing n."""
    n = f.degree
    if n < 1:
        raise PolynomialError("irreducibility is undefined for constants")
    if n == 1:
        return True
    field = f.field
    q = field.cardinality
    x = Polynomial.x(field)
    fm = f.monic()
    for r in factorint(n):
        h = powmod(x, q ** (n // r), fm)
        if gcd(h - x, fm).degree != 0:
            return False
    return powmod(x, q**n, fm) == x % fm


def find_irreducible(field: Field, degree: int) -> Polynomial:
    """First monic irreducible of the given degree, scanning coefficient
    vectors (constant term most significant) in lexicographic order."""
    if degree < 1:
        raise PolynomialError("irreducible degree must be >= 1")
    q = field.cardinality
    # constant term is the most significant digit, so the whole zero-constant
    # (x-divisible) block is idx < q**(degree-1) and can be skipped outright
    start = q ** (degree - 1) if degree > 1 else 0
    for idx in range(start, q**degree):
        digits = []
        rest = idx
        for _ in range(degree):
            rest, d = divmod(rest, q)
            digits.append(d)
        # digits, most significant first, give (c_0, ..., c_{degree-1})
        coeffs = [field.rep_from_index(d) for d in reversed(digits)]
        coeffs.append(field.one_rep)
        cand = Polynomial(field, tuple(coeffs), _trusted=True)
        if is_irreducible(cand):
            return cand
    raise PolynomialError(f"no irreducible of degree {degree} found")  # unreachable


@dataclass
class Factorization:
    """lead * prod(factor**multiplicity) with monic irreducible factors."""

    lead: FieldElement
    factors: List[Tuple[Polynomial, int]]

    def product(self) -> Polynomial:
        out = Polynomial.constant(self.lead)
        for poly, mult in self.factors:
            out = out * poly**mult
        return out


@dataclass(frozen=True)
class FactorPattern:
    """Multiset of (irreducible-factor degree, count) pairs, degree-sorted."""

    entries: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "FactorPattern":
        merged = {}
        for deg, count in pairs:
            merged[deg] = merged.get(deg, 0) + count
        return cls(tuple(sorted(merged.items())))

    @property
    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.entries)

    def as_lists(self) -> List[List[int]]:
        return [[d, c] for d, c in self.entries]

    def __str__(self):
        return "(" + ",".join(f"({d},{c})" for d, c in self.entries) + ")"


def _squarefree_decomposition(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Monic squarefree parts with multiplicities; handles f' = 0 by exact
    p-th root extraction (coefficients to the power q/p at indices i*p)."""
    field = f.field
    p = field.characteristic
    out = []

    def pth_root(g: Polynomial) -> Polynomial:
        e = field.cardinality // p
        reps = tuple(field.pow(g.coeffs[i], e) for i in range(0, len(g.coeffs), p))
        return Polynomial(field, reps, _trusted=True)

    def recurse(g: Polynomial, mult: int):
        if g.degree < 1:
            return
        dg = g.derivative()
        if dg.is_zero():
            recurse(pth_root(g), mult * p)
            return
        c = gcd(g, dg)
        w = g // c
        # w holds the squarefree part of multiplicities coprime to p
        i = 1
        while w.degree >= 1:
            y = gcd(w, c)
            part = w // y
            if part.degree >= 1:
                out.append((part, mult * i))
            w = y
            c = c // y
            i += 1
        recurse(c, mult)  # leftover is a p-th power

    recurse(f.monic(), 1)
    return out


def _distinct_degree(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Split a monic squarefree f into products of same-degree irreducibles."""
    field = f.field
    q = field.cardinality
    x = Polynomial.x(field)
    out = []
    h = x
    d = 0
    while f.degree > 2 * (d + 1) - 1:
        d += 1
        h = _frobenius_power(h, q, f)
        g = gcd(h - x, f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree_split(f: Polynomial, d: int, rng: random.Random) -> List[Polynomial]:
    """Cantor-Zassenhaus for odd q: factor a monic product of deg-d irreducibles."""
    if f.degree == d:
        return [f]
    field = f.field
    q = field.cardinality
    e = (q**d - 1) // 2
    one = Polynomial.one(field)
    attempts = 0
    cap = 64 * f.degree
    while True:
        attempts += 1
        if attempts > cap:
            raise PolynomialError(
                f"equal-degree splitting failed after {cap} attempts (degree {f.degree})"
            )
        a = Polynomial(
            field,
            tuple(field.rep_from_index(rng.randrange(q)) for _ in range(f.degree)),
        )
        if a.degree < 1:
            continue
        g = gcd(a, f)
        if 0 < g.degree < f.degree:
            pass  # lucky split
        else:
            b = powmod(a, e, f) - one
            g = gcd(b, f) if not b.is_zero() else Polynomial.zero(field)
            if g.is_zero() or not (0 < g.degree < f.degree):
                continue
        return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor(f: Polynomial, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles over the owning field."""
    if f.degree < 1:
        raise PolynomialError("cannot factor a constant polynomial")
    rng = random.Random(seed)
    lead = f.leading()
    result = []
    for sqfree, mult in _squarefree_decomposition(f):
        for prod, d in _distinct_degree(sqfree):
            for irr in _equal_degree_split(prod, d, rng):
                result.append((irr, mult))
    result.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return Factorization(lead, result)


def pattern_of(fz: Factorization) -> FactorPattern:
    """Group factor degrees, counting multiplicity."""
    return FactorPattern.from_pairs((poly.degree, mult) for poly, mult in fz.factors)


def roots_in_field(f: Polynomial, seed: int = 0) -> List[FieldElement]:
    """All roots of f in its owning field, from the degree-1 factors."""
    if f.degree < 1:
        raise PolynomialError("root finding needs degree >= 1")
    field = f.field
    roots = []
    for poly, _mult in factor(f, seed=seed).factors:
        if poly.degree == 1:
            roots.append(FieldElement(field, field.neg(poly.coeffs[0])))
    return roots
