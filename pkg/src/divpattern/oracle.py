"""Brute-force ground truth for the Frobenius action on l-torsion.

This module never trusts the trace-based classification: it constructs an
explicit basis (P, Q) of E[l] over an extension field, measures the matrix
of Frobenius on that basis by exhaustive decomposition, and rebuilds the
factorization pattern of psi_l from the orbit lengths of the matrix.

Basis construction lifts a root of an irreducible factor g of psi_l's
x-part into the quotient field F_q[u]/(g) (plus a quadratic step when the
y-coordinate needs one).  When the lifted point P is not an eigenvector,
phi(P) is already independent of P and serves as Q; only scalar Frobenius
action forces a second root lift.  Everything is deterministic given the
seed and hard-capped to desk scale: the oracle exists for trust, not
throughput.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .curve import INFINITY, Curve, Point, count_points
from .divpoly import psi_x
from .ff import (
    ExtensionField,
    Field,
    FieldElement,
    embed,
    is_square,
    sqrt,
)
from .frobclass import (
    IRREDUCIBLE,
    JORDAN,
    SCALAR,
    SPLIT_DISTINCT,
    SPLIT_EQUAL_ORDERS,
    InvariantError,
    _order_mod,
)
from .polyring import Factorization, FactorPattern, Polynomial, factor

ORACLE_L_CAP = 7
ORACLE_Q_CAP = 200


class OracleError(ValueError):
    pass


def _check_caps(curve: Curve, l: int):
    if l > ORACLE_L_CAP:
        raise OracleError(f"oracle is capped at l <= {ORACLE_L_CAP}, got {l}")
    if curve.field.cardinality > ORACLE_Q_CAP:
        raise OracleError(
            f"oracle is capped at base cardinality <= {ORACLE_Q_CAP}, "
            f"got {curve.field.cardinality}"
        )


def _quotient_square(curve: Curve, g: Polynomial) -> bool:
    """Is x^3 + ax + b a square in F_q[u]/(g), u the class of x?

    Conjugate roots agree on squareness, so the answer is uniform over the
    roots of g.
    """
    field = curve.field
    if g.degree == 1:
        r = FieldElement(field, field.neg(g.coeffs[0]))
        return is_square(curve.rhs(r))
    quotient = ExtensionField(field, g.coeffs)
    w = Polynomial(field, (curve.b.rep, curve.a.rep, field.zero_rep, field.one_rep))
    z = w % g
    rep = tuple(z.coeffs) + (field.zero_rep,) * (g.degree - len(z.coeffs))
    return is_square(FieldElement(quotient, rep))


def splitting_degree(
    curve: Curve, l: int, *, factorization: Optional[Factorization] = None
) -> int:
    """Smallest N with all l-torsion rational over the degree-N extension.

    Each irreducible factor of psi_l's x-part pins its points to an
    extension of degree equal to the factor degree, doubled when the
    y-coordinate needs a quadratic step; N is the first integer every such
    degree divides.
    """
    _check_caps(curve, l)
    fz = factorization if factorization is not None else factor(psi_x(curve, l))
    point_degrees = set()
    for g, _mult in fz.factors:
        d = g.degree
        point_degrees.add(d if _quotient_square(curve, g) else 2 * d)
    bound = l * l - 1
    for n in range(1, bound + 1):
        if all(n % d == 0 for d in point_degrees):
            return n
    raise InvariantError(
        f"no splitting degree below {bound} for {curve!r}, l={l}: "
        f"point degrees {sorted(point_degrees)}"
    )


@dataclass
class TorsionBasis:
    """Basis (P, Q) of E[l] over an extension of the curve's base field."""

    base_curve: Curve
    ext_curve: Curve       # the same curve with coefficients in `field`
    field: Field
    l: int
    P: Point
    Q: Point
    splitting_n: int       # minimal N with E[l] rational at degree N
    field_degree: int      # degree of `field` over the base (may exceed N)


def _first_nonsquare(field: Field) -> FieldElement:
    """Deterministic scan for a quadratic non-residue (index order)."""
    for i in range(1, field.cardinality):
        x = FieldElement(field, field.rep_from_index(i))
        if not is_square(x):
            return x
    raise InvariantError(f"no non-residue in {field!r}")


def _lift_root(curve: Curve, g: Polynomial, seed: int) -> Tuple[Field, Point]:
    """A point of the curve whose abscissa is a root of the irreducible g,
    over F_q[u]/(g) extended quadratically if the ordinate requires it."""
    field = curve.field
    if g.degree == 1:
        K = field
        x = FieldElement(field, field.neg(g.coeffs[0]))
    else:
        K = ExtensionField(field, g.coeffs)
        x = FieldElement(K, K.rep_from_index(field.cardinality))  # the class of u
    work = curve if K == field else curve.base_change(K)
    z = work.rhs(x)
    if is_square(z):
        y = sqrt(z, seed=seed)
        return K, Point(x, y)
    nu = _first_nonsquare(K)
    L = ExtensionField(K, (K.neg(nu.rep), K.zero_rep, K.one_rep))  # K[s]/(s^2 - nu)
    c = sqrt(z / nu, seed=seed)
    if c is None:
        raise InvariantError("z/nu must be a square when z is not")
    s = FieldElement(L, L.rep_from_index(K.cardinality))  # the class of s
    y = s * embed(c, L)
    return L, Point(embed(x, L), y)


def _multiples(curve: Curve, pt: Point, l: int) -> List[Point]:
    """[0*pt, 1*pt, ..., (l-1)*pt]."""
    out = [INFINITY]
    acc = INFINITY
    for _ in range(l - 1):
        acc = curve.add(acc, pt)
        out.append(acc)
    return out


def _assert_order_l(curve: Curve, pt: Point, l: int):
    if pt.is_infinity:
        raise InvariantError("torsion basis point is the identity")
    if not curve.scalar_mul(l, pt).is_infinity:
        raise InvariantError(f"basis point is not {l}-torsion on {curve!r}")


def torsion_basis(
    curve: Curve,
    l: int,
    seed: int = 0,
    *,
    factorization: Optional[Factorization] = None,
) -> TorsionBasis:
    """An explicit basis of E[l], deterministic given the seed."""
    _check_caps(curve, l)
    fz = factorization if factorization is not None else factor(psi_x(curve, l))
    n = splitting_degree(curve, l, factorization=fz)
    rng = random.Random(seed)
    candidates = [g for g, _ in fz.factors]
    rng.shuffle(candidates)
    candidates.sort(key=lambda g: -g.degree)  # mixed-line factors first
    trial_fields = []
    for g in candidates:
        K, P = _lift_root(curve, g, seed)
        work = curve.base_change(K) if K != curve.field else curve
        _assert_order_l(work, P, l)
        pow_line = {pt.key() for pt in _multiples(work, P, l)}
        Q = work.frobenius(P, curve.field.cardinality)
        if Q.key() not in pow_line:
            return TorsionBasis(
                curve, work, K, l, P, Q, n, K.degree // curve.field.degree
            )
        trial_fields.append((g, K, P, work, pow_line))
    # Frobenius fixes every line: scalar action.  The lift field of any
    # point already contains all of E[l]; take a root of a second factor.
    for g1, K, P, work, pow_line in trial_fields:
        for g2 in candidates:
            if g2 == g1:
                continue
            g2_ext = g2.map_to(K)
            for root in _roots_over(g2_ext, seed):
                z = work.rhs(root)
                y = sqrt(z, seed=seed)
                if y is None:
                    continue
                for cand_y in (y, -y):
                    Q = Point(root, cand_y)
                    if not work.contains(Q):
                        continue
                    if Q.key() in pow_line:
                        continue
                    _assert_order_l(work, Q, l)
                    return TorsionBasis(
                        curve, work, K, l, P, Q, n, K.degree // curve.field.degree
                    )
    raise InvariantError(
        f"no independent second basis point found for {curve!r}, l={l}"
    )


def _roots_over(f: Polynomial, seed: int):
    from .polyring import roots_in_field

    if f.degree < 1:
        return []
    return roots_in_field(f, seed=seed)


@dataclass(frozen=True)
class FrobeniusMatrix:
    """Column-action matrix of Frobenius on the basis (P, Q) mod l:
    phi(P) = m00*P + m10*Q, phi(Q) = m01*P + m11*Q."""

    rows: Tuple[Tuple[int, int], Tuple[int, int]]
    l: int

    @property
    def trace(self) -> int:
        return (self.rows[0][0] + self.rows[1][1]) % self.l

    @property
    def det(self) -> int:
        return (
            self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
        ) % self.l

    def apply(self, vec: Tuple[int, int]) -> Tuple[int, int]:
        a, b = vec
        return (
            (self.rows[0][0] * a + self.rows[0][1] * b) % self.l,
            (self.rows[1][0] * a + self.rows[1][1] * b) % self.l,
        )


def _combo_table(work: Curve, P: Point, Q: Point, l: int) -> dict:
    """point-key -> (a, b) for all a*P + b*Q."""
    table = {}
    aP = INFINITY
    for a in range(l):
        pt = aP
        for b in range(l):
            table.setdefault(pt.key(), (a, b))
            pt = work.add(pt, Q)
        aP = work.add(aP, P)
    return table


def frobenius_matrix(tb: TorsionBasis) -> FrobeniusMatrix:
    """Measure the matrix of Frobenius on (P, Q) by exhaustive decomposition
    of phi(P) and phi(Q) over all l^2 combinations."""
    work, l = tb.ext_curve, tb.l
    table = _combo_table(work, tb.P, tb.Q, l)
    if len(table) != l * l:
        raise InvariantError("basis points do not generate l^2 distinct combinations")
    q_base = tb.base_curve.field.cardinality
    cols = []
    for pt in (tb.P, tb.Q):
        image = work.frobenius(pt, q_base)
        coords = table.get(image.key())
        if coords is None:
            raise InvariantError("Frobenius image escaped the span of the basis")
        cols.append(coords)
    m = FrobeniusMatrix(((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])), l)
    order = count_points(tb.base_curve)
    q = tb.base_curve.field.cardinality
    if m.det != q % l:
        raise InvariantError(f"matrix determinant {m.det} != q mod l = {q % l}")
    if m.trace != order.trace % l:
        raise InvariantError(
            f"matrix trace {m.trace} != curve trace mod l = {order.trace % l}"
        )
    return m


def minimal_pm_degree(m: FrobeniusMatrix, vec: Tuple[int, int]) -> int:
    """Minimal n >= 1 with m^n * vec = +-vec: the degree of the irreducible
    factor of psi_l attached to the point with these basis coordinates."""
    l = m.l
    if vec == (0, 0):
        raise OracleError("the zero vector has no attached factor")
    neg = ((-vec[0]) % l, (-vec[1]) % l)
    current = vec
    for n in range(1, l * l):
        current = m.apply(current)
        if current == vec or current == neg:
            return n
    raise InvariantError(f"no power of the matrix fixes {vec} up to sign")


def empirical_pattern_from_orbits(
    tb: TorsionBasis, m: Optional[FrobeniusMatrix] = None
) -> FactorPattern:
    """Pattern of psi_l rebuilt from orbit lengths of all l^2 - 1 nonzero
    coordinate vectors; {R, -R} pairs share an abscissa, so each degree-d
    factor accounts for 2d vectors."""
    if m is None:
        m = frobenius_matrix(tb)
    l = tb.l
    counts = {}
    for a in range(l):
        for b in range(l):
            if a == 0 and b == 0:
                continue
            d = minimal_pm_degree(m, (a, b))
            counts[d] = counts.get(d, 0) + 1
    pairs = []
    for d, c in sorted(counts.items()):
        n, r = divmod(c, 2 * d)
        if r:
            raise InvariantError(
                f"{c} vectors of orbit degree {d} do not fill whole factors"
            )
        pairs.append((d, n))
    return FactorPattern.from_pairs(pairs)


def conjugacy_class(m: FrobeniusMatrix) -> dict:
    """Canonical form of the measured matrix over GF(l), with an explicit
    change of basis C satisfying M*C = C*J (mod l)."""
    l = m.l
    t, det = m.trace, m.det
    disc = (t * t - 4 * det) % l
    root = None
    for r in range((l + 1) // 2 + 1):
        if r * r % l == disc:
            root = r
            break
    rows = m.rows

    def mat_vec(mat, v):
        return (
            (mat[0][0] * v[0] + mat[0][1] * v[1]) % l,
            (mat[1][0] * v[0] + mat[1][1] * v[1]) % l,
        )

    def shifted(lam):
        return (
            ((rows[0][0] - lam) % l, rows[0][1]),
            (rows[1][0], (rows[1][1] - lam) % l),
        )

    def eigenvector(lam):
        mat = shifted(lam)
        for a in range(l):
            for b in range(l):
                if (a, b) != (0, 0) and mat_vec(mat, (a, b)) == (0, 0):
                    return (a, b)
        return None

    if root is None:
        # no eigenvalues in GF(l): canonical form is the companion matrix
        v = (1, 0)
        c2 = mat_vec(rows, v)
        canonical = ((0, (-det) % l), (1, t))
        transform = ((v[0], c2[0]), (v[1], c2[1]))
        kind = IRREDUCIBLE
        eigenvalues = []
    elif root == 0:
        rho = t * pow(2, -1, l) % l
        if rows == ((rho, 0), (0, rho)):
            canonical = ((rho, 0), (0, rho))
            transform = ((1, 0), (0, 1))
            kind = SCALAR
        else:
            v2 = (1, 0)
            if mat_vec(shifted(rho), v2) == (0, 0):
                v2 = (0, 1)
            v1 = mat_vec(shifted(rho), v2)
            canonical = ((rho, 1), (0, rho))
            transform = ((v1[0], v2[0]), (v1[1], v2[1]))
            kind = JORDAN
        eigenvalues = [rho]
    else:
        inv2 = pow(2, -1, l)
        lam1 = (t + root) * inv2 % l
        lam2 = (t - root) * inv2 % l
        v1 = eigenvector(lam1)
        v2 = eigenvector(lam2)
        canonical = ((lam1, 0), (0, lam2))
        transform = ((v1[0], v2[0]), (v1[1], v2[1]))
        o1, o2 = _order_mod(lam1, l), _order_mod(lam2, l)
        kind = SPLIT_EQUAL_ORDERS if o1 == o2 else SPLIT_DISTINCT
        eigenvalues = sorted((lam1, lam2))
    # verify M*C = C*J
    for j in range(2):
        col = (transform[0][j], transform[1][j])
        left = mat_vec(rows, col)
        right = (
            (transform[0][0] * canonical[0][j] + transform[0][1] * canonical[1][j]) % l,
            (transform[1][0] * canonical[0][j] + transform[1][1] * canonical[1][j]) % l,
        )
        if left != right:
            raise InvariantError("conjugacy reduction failed to verify")
    return {
        "kind": kind,
        "eigenvalues": eigenvalues,
        "canonical": canonical,
        "transform": transform,
    }


def oracle_report(
    curve: Curve,
    l: int,
    seed: int = 0,
    factorization: Optional[Factorization] = None,
) -> dict:
    """Full oracle run: basis, measured matrix, conjugacy reduction, orbit
    degrees of the basis vectors, and the orbit-derived pattern."""
    fz = (
        factorization
        if factorization is not None
        else factor(psi_x(curve, l), seed=seed)
    )
    tb = torsion_basis(curve, l, seed=seed, factorization=fz)
    m = frobenius_matrix(tb)
    pattern = empirical_pattern_from_orbits(tb, m)
    return {
        "l": l,
        "splitting_degree": tb.splitting_n,
        "basis_field_degree": tb.field_degree,
        "matrix": [list(m.rows[0]), list(m.rows[1])],
        "trace_mod_l": m.trace,
        "det_mod_l": m.det,
        "conjugacy": conjugacy_class(m),
        "basis_orbit_degrees": {
            "P": minimal_pm_degree(m, (1, 0)),
            "Q": minimal_pm_degree(m, (0, 1)),
            "P+Q": minimal_pm_degree(m, (1, 1)),
        },
        "orbit_pattern": pattern.as_lists(),
    }
