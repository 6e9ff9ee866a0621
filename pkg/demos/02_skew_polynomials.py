"""Skew polynomials and generalized operator evaluation.

Run: python3 demos/02_skew_polynomials.py
"""

import itertools

from lrslist.gf import Automorphism, build_tower
from lrslist.skewpoly import SkewPoly, make_eval_pair, multi_eval, op_eval
from lrslist.sumrank import BlockVector, sum_rank_weight

t = build_tower(2, 2)
sigma = Automorphism(t, 1)
w = t.z
x = SkewPoly.monomial(sigma, 1)

# Multiplication twists scalars passing x: x * w = sigma(w) x.
print("x * w =", x * SkewPoly(sigma, [w]), " w * x =", SkewPoly(sigma, [w]) * x)

# f(beta)_a = sum f_i sigma^i(beta) N_i(a); for f = x it is sigma(beta) * a.
print("x(w)_1 =", op_eval(x, w, t.one), "= sigma(w) =", sigma(w))

# Multi-point evaluation over an evaluation pair is a bijection on degree < n,
# and a nonzero f of degree t has image weight at least n - t.
t9 = build_tower(3, 2)
s9 = Automorphism(t9, 1)
pair = make_eval_pair(t9, s9, 2, 2)
print("evaluation pair a =", pair.a, "beta =", pair.beta, pair.certify())
worst = {}
for coeffs in itertools.product(range(9), repeat=3):
    f = SkewPoly(s9, coeffs)
    if f.is_zero():
        continue
    wt = sum_rank_weight(BlockVector(t9, 2, 2, tuple(multi_eval(f, pair))))
    worst[f.degree] = min(worst.get(f.degree, 99), wt)
print("smallest image weight by degree (n = 4):", dict(sorted(worst.items())))
