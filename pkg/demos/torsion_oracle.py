"""Ground truth the hard way: build an explicit basis of the 5-torsion of
the reference curve over an extension field, measure the Frobenius matrix
by decomposing images in that basis, and recover the factorization pattern
from orbit sizes alone -- no division-polynomial factoring involved.

Run:  python3 demos/torsion_oracle.py
"""

from divpattern.curve import make_curve
from divpattern.divpoly import psi_x
from divpattern.ff import make_prime_field
from divpattern.oracle import (
    conjugacy_class,
    empirical_pattern_from_orbits,
    frobenius_matrix,
    minimal_pm_degree,
    torsion_basis,
)
from divpattern.polyring import factor, pattern_of

field = make_prime_field(17)
curve = make_curve(field, field.elem(3), field.elem(6))
l = 5

tb = torsion_basis(curve, l, seed=0)
print(f"curve: y^2 = x^3 + 3x + 6 over GF(17), l = {l}")
print(f"full {l}-torsion splits over GF(17^{tb.splitting_n})")
print(f"basis lives over a field of degree {tb.field_degree}")
print(f"P = ({tb.P.x.rep}, {tb.P.y.rep})")
print(f"Q = ({tb.Q.x.rep}, {tb.Q.y.rep})")

m = frobenius_matrix(tb)
print(f"\nFrobenius matrix in basis (P, Q) mod {l}: {m.rows}")
print(f"trace = {m.trace} (= t mod l), det = {m.det} (= q mod l)")

conj = conjugacy_class(m)
print(f"conjugacy class: {conj['kind']}, canonical form {conj['canonical']}")
print(f"eigenvalues: {conj['eigenvalues']}")

c = conj["transform"]
v1, v2 = (c[0][0], c[1][0]), (c[0][1], c[1][1])
mixed = ((v1[0] + v2[0]) % l, (v1[1] + v2[1]) % l)
print("\nminimal n with phi^n(v) = +-v, per eigenbasis vector:")
for name, v in (("eigenvector 1", v1), ("eigenvector 2", v2), ("mixed", mixed)):
    print(f"  {name:14s} {v}: degree {minimal_pm_degree(m, v)}")

orbit_pattern = empirical_pattern_from_orbits(tb, m)
factored = pattern_of(factor(psi_x(curve, l), seed=0))
print(f"\npattern from orbit counting:  {orbit_pattern}")
print(f"pattern from factoring psi_5: {factored}")
print(f"agreement: {orbit_pattern == factored}")
