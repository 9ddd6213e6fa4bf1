"""Sweep every curve over small prime fields and tally the five Frobenius
classes, verifying the pattern prediction on every in-scope instance.

Run:  python3 demos/class_scan.py
"""

from divpattern.scan import ALL_KINDS, scan

P_MIN, P_MAX = 5, 23
L_SET = (3, 5, 7)

print(f"sweeping all nonsingular curves over GF(p), p in [{P_MIN}, {P_MAX}], "
      f"l in {L_SET} ...")
result = scan(P_MIN, P_MAX, L_SET, quota=5, seed=0)

print(f"\n{result.attempted} (curve, l) instances classified")
for kind in ALL_KINDS:
    n = result.tallies.get(kind, 0)
    share = 100.0 * n / result.attempted if result.attempted else 0.0
    print(f"  {kind:20s} {n:6d}  ({share:.1f}%)")

print(f"\nprediction mismatches: {len(result.mismatches)}")
if result.missing_kinds:
    print(f"classes absent in this range: {', '.join(result.missing_kinds)}")

print("\none witness per class:")
for kind in sorted(result.witnesses):
    w = result.witnesses[kind]
    inst = (f"p={w.curve.field.characteristic} a={w.curve.a.rep} "
            f"b={w.curve.b.rep} l={w.l}")
    print(f"  {kind:20s} {inst:26s} psi pattern {w.empirical}")
