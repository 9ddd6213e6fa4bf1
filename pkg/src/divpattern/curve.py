"""Short Weierstrass curves y^2 = x^3 + ax + b with affine arithmetic.

Points are immutable; the point at infinity is the group identity and is
represented by a shared sentinel.  Point counting over the base field is a
direct quadratic-character sweep (the supported base fields are small), and
random point sampling works over any extension of the base field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .ff import Field, FieldElement, embed, is_square, sqrt

POINT_COUNT_BOUND = 10**6


class CurveError(ValueError):
    """Singular curve, off-curve point, or an out-of-bounds request."""


class Point:
    """Affine point (x, y) or the point at infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x: Optional[FieldElement], y: Optional[FieldElement]):
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def key(self):
        """Hashable identity for tables of points."""
        if self.is_infinity:
            return None
        return (self.x.rep, self.y.rep)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.is_infinity:
            return "Point(infinity)"
        return f"Point({self.x.rep!r}, {self.y.rep!r})"


INFINITY = Point(None, None)


@dataclass(frozen=True)
class CurveOrderData:
    count: int  # number of rational points including infinity
    trace: int  # q + 1 - count


class Curve:
    """Nonsingular curve y^2 = x^3 + ax + b over a field of characteristic > 3."""

    def __init__(self, field: Field, a, b):
        if field.characteristic <= 3:
            raise CurveError("curve arithmetic requires characteristic > 3")
        self.field = field
        self.a = field.elem(a)
        self.b = field.elem(b)
        disc = 4 * self.a**3 + 27 * self.b**2
        if disc.is_zero():
            raise CurveError(
                f"singular curve: 4a^3 + 27b^2 = {disc.rep!r} over {field!r}"
            )
        self._order: Optional[CurveOrderData] = None

    def rhs(self, x: FieldElement) -> FieldElement:
        return x * x * x + self.a * x + self.b

    def contains(self, pt: Point) -> bool:
        if pt.is_infinity:
            return True
        return pt.y * pt.y == self.rhs(pt.x)

    def point(self, x, y, check: bool = True) -> Point:
        pt = Point(self.field.elem(x), self.field.elem(y))
        if check and not self.contains(pt):
            raise CurveError(f"({pt.x.rep!r}, {pt.y.rep!r}) is not on the curve")
        return pt

    def base_change(self, target: Field) -> "Curve":
        """The same curve with coefficients embedded in an extension field."""
        return Curve(target, embed(self.a, target), embed(self.b, target))

    # -- group law ----------------------------------------------------------
    def negate(self, pt: Point) -> Point:
        if pt.is_infinity:
            return pt
        return Point(pt.x, -pt.y)

    def add(self, p1: Point, p2: Point) -> Point:
        if p1.is_infinity:
            return p2
        if p2.is_infinity:
            return p1
        f = self.field
        x1, y1, x2, y2 = p1.x.rep, p1.y.rep, p2.x.rep, p2.y.rep
        if x1 == x2:
            if f.add(y1, y2) == f.zero_rep:
                return INFINITY
            # tangent: s = (3x^2 + a) / 2y
            num = f.add(f.mul(f.coerce_rep(3), f.mul(x1, x1)), self.a.rep)
            den = f.add(y1, y1)
        else:
            num = f.sub(y2, y1)
            den = f.sub(x2, x1)
        s = f.mul(num, f.inv(den))
        x3 = f.sub(f.sub(f.mul(s, s), x1), x2)
        y3 = f.sub(f.mul(s, f.sub(x1, x3)), y1)
        return Point(FieldElement(f, x3), FieldElement(f, y3))

    def sub(self, p1: Point, p2: Point) -> Point:
        return self.add(p1, self.negate(p2))

    def double(self, pt: Point) -> Point:
        return self.add(pt, pt)

    def scalar_mul(self, k: int, pt: Point) -> Point:
        if k < 0:
            k, pt = -k, self.negate(pt)
        acc = INFINITY
        while k:
            if k & 1:
                acc = self.add(acc, pt)
            pt = self.double(pt)
            k >>= 1
        return acc

    def frobenius(self, pt: Point, q: Optional[int] = None) -> Point:
        """(x, y) -> (x^q, y^q); q defaults to the cardinality of the field
        the curve is written over (pass the base-field cardinality when the
        curve has been base-changed to an extension)."""
        if pt.is_infinity:
            return pt
        if q is None:
            q = self.field.cardinality
        return Point(pt.x**q, pt.y**q)

    def __repr__(self):
        return f"Curve(y^2 = x^3 + {self.a.rep!r}x + {self.b.rep!r} over {self.field!r})"


def make_curve(field: Field, a, b) -> Curve:
    return Curve(field, a, b)


_chi_cache: dict = {}


def _chi_table(field: Field):
    """Quadratic character by element index: chi[i] in {-1, 0, 1}."""
    key = field
    table = _chi_cache.get(key)
    if table is None:
        q = field.cardinality
        table = [-1] * q
        for i in range(q):
            rep = field.rep_from_index(i)
            table[field.index_of_rep(field.mul(rep, rep))] = 1
        table[field.index_of_rep(field.zero_rep)] = 0
        _chi_cache[key] = table
    return table


def count_points(curve: Curve) -> CurveOrderData:
    """Exact point count by quadratic-character enumeration over the base field."""
    if curve._order is not None:
        return curve._order
    field = curve.field
    q = field.cardinality
    if q > POINT_COUNT_BOUND:
        raise CurveError(
            f"point counting by enumeration is capped at q <= {POINT_COUNT_BOUND}; "
            f"got q = {q} (use a smaller base field)"
        )
    chi = _chi_table(field)
    idx = field.index_of_rep
    count = 1 + q
    if isinstance(field.zero_rep, int):
        p = field.cardinality if field.base is None else None
        if p is not None:
            a, b = curve.a.rep, curve.b.rep
            count += sum(chi[(x * x * x + a * x + b) % p] for x in range(p))
        else:
            count += _chi_sum_generic(curve, chi, idx)
    else:
        count += _chi_sum_generic(curve, chi, idx)
    trace = q + 1 - count
    if trace * trace > 4 * q:
        raise CurveError(f"Hasse bound violated: trace {trace} for q = {q}")
    data = CurveOrderData(count, trace)
    curve._order = data
    return data


def _chi_sum_generic(curve: Curve, chi, idx):
    field = curve.field
    total = 0
    for i in range(field.cardinality):
        x = field.rep_from_index(i)
        rhs = field.add(
            field.mul(field.mul(x, x), x),
            field.add(field.mul(curve.a.rep, x), curve.b.rep),
        )
        total += chi[idx(rhs)]
    return total


def random_point(curve: Curve, in_field: Optional[Field] = None, seed: int = 0) -> Point:
    """Deterministic pseudo-random affine point over the given extension field."""
    field = curve.field if in_field is None else in_field
    work = curve if field == curve.field else curve.base_change(field)
    rng = random.Random(seed)
    for _ in range(10**4):
        x = FieldElement(field, field.rep_from_index(rng.randrange(field.cardinality)))
        z = work.rhs(x)
        if not is_square(z):
            continue
        y = sqrt(z, seed=seed)
        if rng.randrange(2):
            y = -y
        return Point(x, y)
    raise CurveError("random point sampling exhausted its attempt budget")
