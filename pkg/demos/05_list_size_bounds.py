"""Lower bounds on list size next to the exact values, plus an explicit witness list.

Run: python3 demos/05_list_size_bounds.py
"""

from lrslist.bounds import (
    corollary1_radius,
    corollary2_radius,
    corollary3_params,
    dense_low_weight_set,
    pigeonhole_witness,
    theorem1_bound,
)
from lrslist.lrs import list_size_profile, make_code

for k in (1, 2, 3):
    code = make_code(5, 2, 2, 2, k)
    prof = list_size_profile(code, range(code.d))
    for tau, res in prof.items():
        b = theorem1_bound(code.ell, code.eta, code.tower.m, code.q, code.d, tau)
        print(f"k={k} tau={tau}: bound {b.value:8.3f}  exact {res.max_list:4d}  holds {b.holds_for(res.max_list)}")

# Pigeonhole: polynomials with low-weight images that agree on the top
# coefficients give a ball full of codewords around ev(f_1).
code = make_code(3, 2, 2, 2, 1)
S = dense_low_weight_set(code, 2)
w = pigeonhole_witness(code, S, 2)
print(f"|S| = {len(S)}, witness size {w.size} >= {w.guaranteed}; verified {w.verify()}")

print("corollary 1 radius:", corollary1_radius(ell=2, m=4, n=8, d=5, q=3, eps=0.1))
print("corollary 2 radius:", corollary2_radius(0.25, ell=1, n=100, eps=0.01))
print("corollary 3 (zeta, delta, b):", corollary3_params(R=0.5, a=0.1, q=2, eps=0.2))
