"""Walk through one complete instance: the curve y^2 = x^3 + 3x + 6 over
GF(17) with l = 5.

The script classifies the Frobenius action on the 5-torsion, predicts the
factorization pattern of the 5th division polynomial from the eigenvalue
orders alone, then factors the polynomial to confirm, and finally shows
why the naive halving rule for mixed-orbit factor degrees gets this curve
wrong.

Run:  python3 demos/worked_example.py
"""

from divpattern.curve import count_points, make_curve
from divpattern.divpoly import psi_x
from divpattern.ff import make_prime_field
from divpattern.frobclass import classify
from divpattern.pattern import predict
from divpattern.polyring import factor, pattern_of

field = make_prime_field(17)
curve = make_curve(field, field.elem(3), field.elem(6))
l = 5

order = count_points(curve)
print(f"curve: y^2 = x^3 + 3x + 6 over GF(17)")
print(f"points: {order.count}, trace t = {order.trace}")

fc = classify(curve, l)
print(f"\nFrobenius on E[{l}] has charpoly x^2 - {fc.trace}x + {fc.q_mod_l} mod {l}")
print(f"class: {fc.kind}")
print(f"eigenvalue rho = {fc.rho} of order alpha = {fc.alpha}")
print(f"complementary eigenvalue of order beta = {fc.beta}")

pred = predict(fc)
print(f"\npredicted pattern for psi_{l}: {pred.pattern}")
print("  - two linear factors from the order-2 eigenline (h(2) = 1)")
print("  - one quadratic from the order-4 eigenline (h(4) = 2)")
print("  - two quartics from the mixed orbits (i(2,4) = lcm = 4,")
print("    NOT lcm/2: the 2-adic valuations of 2 and 4 differ)")

f = psi_x(curve, l)
empirical = pattern_of(factor(f, seed=0))
print(f"\npsi_{l} x-part has degree {f.degree} = (l^2-1)/2")
print(f"actual factorization pattern: {empirical}")
print(f"match: {pred.pattern == empirical}")

print(f"\nhalving the lcm for every even pair instead would predict")
print(f"{pred.uncorrected_entries}  -- which the factorization refutes")
