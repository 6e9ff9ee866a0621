"""Smallest rates reached by the code families, and the decoding-region curves.

Run: python3 demos/07_rate_table_and_regions.py
"""

from lrslist.bounds import FamilyParams, construction1_instance, emit_region_data, minimize_rate

print(" ell      rate      C  D")
for ell in range(1, 21):
    r = minimize_rate(ell)
    print(f"{ell:4d}  {float(r.rate):.6f}  {r.C:3d} {r.D:2d}   (scan stopped at C={r.last_C})")

inst = construction1_instance(FamilyParams(ell=2, C=6, D=2, g=2), q=3)
print("instance", inst.to_record(), "bound exponent", inst.bound().log_q_value)

for R, johnson, unique in emit_region_data([0.1, 0.25, 0.5, 0.75]):
    print(f"R={R:.2f}  1-sqrt(R)={johnson:.4f}  (1-R)/2={unique:.4f}")
