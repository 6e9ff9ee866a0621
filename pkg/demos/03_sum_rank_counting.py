"""Sum-rank weights and the counting of vectors by weight.

Run: python3 demos/03_sum_rank_counting.py
"""

import math

from lrslist.gf import build_tower
from lrslist.sumrank import (
    BlockVector,
    count_rank_matrices,
    gamma_q,
    sphere_lower_bound,
    sphere_sizes,
    sum_rank_weight,
)

t = build_tower(2, 2)
w = t.z
# Two blocks of length 2: the first has rank 2 over GF(2), the second rank 1.
x = BlockVector(t, 2, 2, (t.one, w, w, w))
print("blocks", x.blocks(), "sum-rank weight", sum_rank_weight(x), "over GF(4):", sum_rank_weight(x, 2))

print("binary 2x2 matrices by rank:", [count_rank_matrices(2, 2, r, 2) for r in range(3)])
print("gamma_2, gamma_3, gamma_4 =", [round(gamma_q(q), 4) for q in (2, 3, 4)])

# Vectors of GF(9)^4 split as 2 blocks of 2, by sum-rank weight, against the lower bound.
q, ell, eta, m = 3, 2, 2, 2
sizes = sphere_sizes(ell, eta, m, q)
print("total", sum(sizes), "= 9^4 =", 9 ** 4)
for t_, exact in enumerate(sizes):
    print(f"  weight {t_}: exact {exact:6d}   log_3 exact {math.log(exact, 3):6.3f}"
          f"   lower bound {sphere_lower_bound(t_, ell, eta, m, q):6.3f}")
