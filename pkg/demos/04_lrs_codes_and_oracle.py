"""Linearized Reed-Solomon codes, their distance, and exact list sizes.

Run: python3 demos/04_lrs_codes_and_oracle.py
"""

from lrslist.lrs import encode, list_size_profile, make_code, min_distance_exhaustive
from lrslist.skewpoly import SkewPoly

code = make_code(p=3, m=2, ell=2, eta=2, k=2)
print(code, "Singleton distance", code.d)
f = SkewPoly(code.sigma, [1, code.tower.z])
print("encode(1 + z x) =", encode(code, f).blocks())
print("exhaustive minimum distance:", min_distance_exhaustive(code))

# One scan over coset representatives gives the largest ball occupancy for every radius.
profile = list_size_profile(code, range(code.n + 1))
for tau, res in profile.items():
    print(f"tau={tau}: max list {res.max_list:3d}  self-check {res.verify()}")
best = profile[2]
print("a centre achieving it:", best.argmax_center.blocks())
