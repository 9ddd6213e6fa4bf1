"""Exact arithmetic in prime fields GF(p) and extension fields GF(p^m).

Fields are immutable descriptors; elements carry a reference to their field
and a canonical reduced representative:

 - prime field: an integer residue in [0, p)
 - extension field of degree n over its base: a tuple of n base-field
   representatives, constant coefficient first

Extensions may be stacked (towers), which is how splitting fields of
torsion points are built.  Construction of a degree-n extension picks the
lexicographically first monic irreducible modulus, so two constructions
with equal inputs are bit-identical.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional

from sympy import factorint, isprime


class FieldError(ValueError):
    """Invalid field construction or cross-field operand."""


class Field:
    """Common interface for PrimeField and ExtensionField.

    Subclasses implement arithmetic directly on representatives (``rep``
    values); FieldElement is a thin wrapper used at API boundaries.
    """

    characteristic: int
    degree: int          # absolute degree over the prime field
    cardinality: int
    base: Optional["Field"]
    ext_degree: int      # degree over self.base (1 for prime fields)

    # -- representative arithmetic, provided by subclasses ----------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, e: int):
        """a**e by square-and-multiply; e may be any integer (negative uses inv)."""
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one_rep
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- element construction ---------------------------------------------
    def elem(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce_rep(value))

    def coerce_rep(self, value):
        raise NotImplementedError

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.zero_rep)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.one_rep)

    # -- canonical enumeration (index <-> representative) -------------------
    def rep_from_index(self, i: int):
        raise NotImplementedError

    def index_of_rep(self, rep) -> int:
        raise NotImplementedError

    def iter_reps(self) -> Iterator:
        for i in range(self.cardinality):
            yield self.rep_from_index(i)

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.degree})"


class PrimeField(Field):
    def __init__(self, p: int):
        self.characteristic = p
        self.degree = 1
        self.ext_degree = 1
        self.cardinality = p
        self.base = None
        self.modulus = None
        self.zero_rep = 0
        self.one_rep = 1
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self!r}")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def coerce_rep(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"element of {value.field!r} used in {self!r}")
            return value.rep
        return int(value) % self.p

    def rep_from_index(self, i: int):
        return i

    def index_of_rep(self, rep) -> int:
        return rep

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


class ExtensionField(Field):
    """Degree-n extension base[t]/(g) with g monic irreducible of degree n.

    ``modulus`` is the coefficient tuple of g (constant first, length n+1,
    leading coefficient one).  Irreducibility is the caller's
    responsibility; use make_extension for the checked, deterministic path.
    """

    def __init__(self, base: Field, modulus: tuple):
        n = len(modulus) - 1
        if n < 2:
            raise FieldError("extension degree must be at least 2")
        if modulus[-1] != base.one_rep:
            raise FieldError("extension modulus must be monic")
        self.base = base
        self.ext_degree = n
        self.modulus = tuple(modulus)
        self.characteristic = base.characteristic
        self.degree = base.degree * n
        self.cardinality = base.cardinality ** n
        self.zero_rep = (base.zero_rep,) * n
        self.one_rep = (base.one_rep,) + (base.zero_rep,) * (n - 1)
        self._prime_base = isinstance(base, PrimeField)
        # rows of x^(n+i) mod g for i in 0..n-2, used to fold products back
        self._red_rows = self._reduction_rows()

    def _reduction_rows(self):
        base, n = self.base, self.ext_degree
        # x^n mod g = -(g_0 + g_1 x + ... + g_{n-1} x^{n-1})
        row = [base.neg(c) for c in self.modulus[:-1]]
        rows = [tuple(row)]
        for _ in range(n - 2):
            top = row[-1]
            row = [base.zero_rep] + row[:-1]
            if top != base.zero_rep:
                first = rows[0]
                row = [base.add(row[j], base.mul(top, first[j])) for j in range(n)]
            rows.append(tuple(row))
        return rows

    def add(self, a, b):
        if self._prime_base:
            p = self.characteristic
            return tuple((x + y) % p for x, y in zip(a, b))
        badd = self.base.add
        return tuple(badd(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if self._prime_base:
            p = self.characteristic
            return tuple((x - y) % p for x, y in zip(a, b))
        bsub = self.base.sub
        return tuple(bsub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self._prime_base:
            p = self.characteristic
            return tuple((-x) % p for x in a)
        bneg = self.base.neg
        return tuple(bneg(x) for x in a)

    def mul(self, a, b):
        n = self.ext_degree
        if self._prime_base:
            p = self.characteristic
            prod = [0] * (2 * n - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            out = prod[:n]
            for i in range(n - 1):
                c = prod[n + i] % p
                if c:
                    row = self._red_rows[i]
                    for j in range(n):
                        out[j] += c * row[j]
            return tuple(x % p for x in out)
        base = self.base
        prod = [base.zero_rep] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai != base.zero_rep:
                for j, bj in enumerate(b):
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        out = prod[:n]
        for i in range(n - 1):
            c = prod[n + i]
            if c != base.zero_rep:
                row = self._red_rows[i]
                for j in range(n):
                    out[j] = base.add(out[j], base.mul(c, row[j]))
        return tuple(out)

    def inv(self, a):
        """Inverse by extended Euclid on coefficient polynomials over base."""
        if a == self.zero_rep:
            raise ZeroDivisionError(f"division by zero in {self!r}")
        base = self.base
        zero = base.zero_rep

        def trim(v):
            while v and v[-1] == zero:
                v.pop()
            return v

        r0 = trim(list(self.modulus))
        r1 = trim(list(a))
        s0, s1 = [], [base.one_rep]
        while len(r1) > 1:
            # divide r0 by r1
            q = [zero] * (len(r0) - len(r1) + 1)
            r = list(r0)
            lead_inv = base.inv(r1[-1])
            for k in range(len(r) - len(r1), -1, -1):
                c = base.mul(r[k + len(r1) - 1], lead_inv)
                if c != zero:
                    q[k] = c
                    for j in range(len(r1)):
                        r[k + j] = base.sub(r[k + j], base.mul(c, r1[j]))
            trim(r)
            # s = s0 - q * s1
            s = list(s0) + [zero] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q):
                if qi != zero:
                    for j, sj in enumerate(s1):
                        s[i + j] = base.sub(s[i + j], base.mul(qi, sj))
            trim(s)
            r0, r1, s0, s1 = r1, r, s1, s
        if not r1:
            raise ZeroDivisionError("non-invertible element (modulus not irreducible?)")
        c = base.inv(r1[0])
        out = [base.mul(c, x) for x in s1]
        out += [zero] * (self.ext_degree - len(out))
        return tuple(out[: self.ext_degree])

    def coerce_rep(self, value):
        base = self.base
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.rep
            raise FieldError(f"element of {value.field!r} used in {self!r}")
        if isinstance(value, (tuple, list)):
            if len(value) > self.ext_degree:
                raise FieldError("coefficient vector longer than extension degree")
            reps = [base.coerce_rep(v) for v in value]
            reps += [base.zero_rep] * (self.ext_degree - len(reps))
            return tuple(reps)
        # plain integers land in the prime subfield
        return (base.coerce_rep(value),) + (base.zero_rep,) * (self.ext_degree - 1)

    def rep_from_index(self, i: int):
        base = self.base
        q = base.cardinality
        out = []
        for _ in range(self.ext_degree):
            i, d = divmod(i, q)
            out.append(base.rep_from_index(d))
        return tuple(out)

    def index_of_rep(self, rep) -> int:
        base = self.base
        q = base.cardinality
        i = 0
        for c in reversed(rep):
            i = i * q + base.index_of_rep(c)
        return i

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.modulus == self.modulus
            and other.base == self.base
        )

    def __hash__(self):
        return hash(("ExtensionField", self.modulus, self.base))


class FieldElement:
    """An element of a Field, stored as (field, canonical representative)."""

    __slots__ = ("field", "rep")

    def __init__(self, field: Field, rep):
        self.field = field
        self.rep = rep

    def _rep_of(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(
                    f"cross-field operation: {self.field!r} vs {other.field!r}"
                )
            return other.rep
        return self.field.coerce_rep(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.rep, self._rep_of(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.rep, self._rep_of(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._rep_of(other), self.rep))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.rep, self._rep_of(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.rep, self._rep_of(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._rep_of(other), self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def is_zero(self) -> bool:
        return self.rep == self.field.zero_rep

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.field.coerce_rep(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rep,))

    def __repr__(self):
        return f"{self.rep!r} in {self.field!r}"


def make_prime_field(p: int) -> PrimeField:
    """The prime field GF(p) for an odd prime p > 3."""
    p = int(p)
    if p > 3 and not isprime(p):
        raise FieldError(f"characteristic {p} is composite")
    if p % 2 == 0:
        raise FieldError(f"characteristic {p} is even")
    if p <= 3:
        raise FieldError(f"characteristic must exceed 3, got {p}")
    return PrimeField(p)


def make_extension(base: Field, n: int) -> ExtensionField:
    """The degree-n extension of base with a deterministic modulus.

    The modulus is the first monic irreducible polynomial of degree n in
    lexicographic order of coefficient vectors, so repeated calls with the
    same inputs agree exactly.
    """
    if n < 2:
        raise FieldError(f"extension degree must be >= 2, got {n}")
    from . import polyring

    modulus = polyring.find_irreducible(base, n)
    return ExtensionField(base, modulus.coeffs)


def extension_with_modulus(base: Field, modulus) -> ExtensionField:
    """Extension of base by a given monic irreducible modulus.

    ``modulus`` is a polyring.Polynomial over base or a coefficient tuple.
    Used to build quotient fields base[t]/(g) out of known irreducible
    factors; the caller vouches for irreducibility.
    """
    coeffs = getattr(modulus, "coeffs", None)
    if coeffs is None:
        coeffs = tuple(base.coerce_rep(c) for c in modulus)
    return ExtensionField(base, coeffs)


def _tower_path(target: Field, source: Field):
    """Chain of fields from source up to target, or None if unrelated."""
    path = []
    f = target
    while f is not None:
        path.append(f)
        if f == source:
            return list(reversed(path))
        f = f.base
    return None


def embed(x: FieldElement, target: Field) -> FieldElement:
    """Canonical inclusion of x into an extension tower built over its field."""
    if x.field == target:
        return FieldElement(target, x.rep)
    path = _tower_path(target, x.field)
    if path is None:
        raise FieldError(f"{target!r} is not an extension of {x.field!r}")
    rep = x.rep
    for f in path[1:]:
        rep = (rep,) + (f.base.zero_rep,) * (f.ext_degree - 1)
    return FieldElement(target, rep)


def multiplicative_order(x: FieldElement) -> int:
    """Smallest n >= 1 with x**n = 1, via the factored group order."""
    if x.is_zero():
        raise ZeroDivisionError("multiplicative order of zero is undefined")
    field = x.field
    n = field.cardinality - 1
    for prime in factorint(n):
        while n % prime == 0 and field.pow(x.rep, n // prime) == field.one_rep:
            n //= prime
    return n


def _resultant_mod_p(f: list, g: list, p: int) -> int:
    """res(f, g) mod p for coefficient lists (constant term first), f monic."""
    result = 1
    while True:
        while g and g[-1] % p == 0:
            g.pop()
        if not g:
            return 0
        if len(g) == 1:
            return result * pow(g[0], len(f) - 1, p) % p
        # fold in lc(g)^(deg f - deg(f mod g)) and the sign (-1)^(deg f * deg g)
        df, dg = len(f) - 1, len(g) - 1
        inv_lead = pow(g[-1], p - 2, p)
        r = f[:]
        for i in range(df, dg - 1, -1):
            c = r[i] * inv_lead % p
            if c:
                for j, gj in enumerate(g):
                    r[i - dg + j] = (r[i - dg + j] - c * gj) % p
        while r and r[-1] % p == 0:
            r.pop()
        dr = len(r) - 1
        result = result * pow(g[-1], df - dr, p) % p
        if df % 2 and dg % 2:
            result = (-result) % p
        f, g = g, r


def is_square(x: FieldElement) -> bool:
    """Quadratic-character test; zero counts as a square."""
    if x.is_zero():
        return True
    field = x.field
    if isinstance(field, ExtensionField) and isinstance(field.base, PrimeField):
        # x is a square iff its norm down to the prime field is: raising the
        # norm to (p-1)/2 gives x^((p^n-1)/2).  The norm is the resultant of
        # the (monic) field modulus with x's rep polynomial, which a single
        # Euclidean remainder cascade computes without extension-field mults.
        p = field.base.p
        norm = _resultant_mod_p(list(field.modulus), list(x.rep), p)
        return pow(norm, (p - 1) // 2, p) == 1
    return field.pow(x.rep, (field.cardinality - 1) // 2) == field.one_rep


def sqrt(x: FieldElement, seed: int = 0) -> Optional[FieldElement]:
    """A square root of x, or None for non-residues (Tonelli-Shanks).

    The non-residue needed in the 1 mod 4 case is found by a seeded random
    search, so results are deterministic given the seed.
    """
    field = x.field
    if x.is_zero():
        return field.zero
    Q = field.cardinality
    if not is_square(x):
        return None
    if Q % 4 == 3:
        return FieldElement(field, field.pow(x.rep, (Q + 1) // 4))
    # Q = s * 2^e + 1 with s odd
    s, e = Q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    rng = random.Random(seed)
    while True:
        z = field.rep_from_index(rng.randrange(1, Q))
        if field.pow(z, (Q - 1) // 2) != field.one_rep:
            break
    c = field.pow(z, s)
    r = field.pow(x.rep, (s + 1) // 2)
    t = field.pow(x.rep, s)
    m = e
    while t != field.one_rep:
        t2, i = t, 0
        while t2 != field.one_rep:
            t2 = field.mul(t2, t2)
            i += 1
        b = field.pow(c, 1 << (m - i - 1))
        r = field.mul(r, b)
        c = field.mul(b, b)
        t = field.mul(t, c)
        m = i
    return FieldElement(field, r)
