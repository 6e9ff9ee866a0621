"""Named property suites behind ``lrslist verify``.

Each suite returns a :class:`SuiteResult`; failures are collected as
messages rather than raised, so one run reports everything that broke.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .bounds import (
    FamilyParams,
    SparseSetParams,
    build_structured_beta,
    construction1_instance,
    corollary1_radius,
    corollary2_radius,
    corollary3_params,
    dense_low_weight_set,
    minimize_rate,
    pigeonhole_witness,
    sparse_set_enumerate,
    sparse_set_filter,
    theorem1_bound,
    theorem2_bound,
    theorem3_exponent,
    weight_scaling_rows,
)
from .errors import EnumerationTooLarge
from .gf import Automorphism, build_tower, conjugacy_classes, hilbert90_witness, norm_table
from .linalg import rank_mod_p
from .lrs import (
    DEFAULT_MAX_ENUM,
    LrsCode,
    code_from_spec,
    code_to_spec,
    evaluate_batch,
    iter_tuples,
    list_size_profile,
    make_code,
    min_distance_exhaustive,
    validate_code,
)
from .skewpoly import EvalPair, SkewPoly, make_eval_pair, skew_mul
from .sumrank import (
    count_rank_matrices,
    gamma_q,
    sphere_lower_bound,
    sphere_sizes,
    sum_rank_weights,
)

#: the desk-scale grid: (q, ell, m = eta)
GRID = [(q, ell, m) for q in (3, 5) for ell in (1, 2) for m in (1, 2)]

#: (q, m = eta, ell, g) points for the sparse-set suites
SPARSE_POINTS = [(2, 4, 1, 2), (3, 2, 2, 2)]


def grid_codes():
    for q, ell, m in GRID:
        for k in range(1, ell * m + 1):
            yield make_code(q, m, ell, m, k)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
        }


# -- naive references (deliberately independent of the vectorised kernels) --

def naive_rank(rows: list[list[int]], p: int) -> int:
    """Row reduction over F_p on plain lists."""
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- suites --

def suite_gf(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    towers = [(2, 2), (2, 3), (2, 4), (2, 5), (2, 10), (3, 2), (3, 3), (3, 6),
              (5, 2), (5, 4), (7, 3), (31, 2)]
    for p, m in towers:
        t = build_tower(p, m)
        res.check(t.to_record() == build_tower.__wrapped__(p, m).to_record(),
                  f"build_tower({p},{m}) not deterministic")
        for s in [s for s in range(1, m + 1) if math.gcd(s, m) == 1][:2]:
            sig = Automorphism(t, s)
            N = norm_table(sig)
            nz = np.arange(1, t.order)
            a = np.array([rng.randrange(1, t.order) for _ in range(200)])
            b = np.array([rng.randrange(1, t.order) for _ in range(200)])
            res.check(bool((N[t.mul_arr(a, b)] == t.mul_arr(N[a], N[b])).all()),
                      f"norm not multiplicative on GF({p}^{m}), s={s}")
            res.check(bool((N[sig.table[nz]] == N[nz]).all()),
                      f"norm not Galois invariant on GF({p}^{m}), s={s}")
            lam = rng.randrange(p)
            lhs = sig.table[t.add_arr(a, t.mul_arr(lam, b))]
            rhs = t.add_arr(sig.table[a], t.mul_arr(lam, sig.table[b]))
            res.check(bool((lhs == rhs).all()), f"automorphism not F_q-linear on GF({p}^{m})")
            # same norm <=> b = a c / sigma(c) for some c: checked for every pair
            ratio = t.mul_arr(nz, np.array([t.inv(int(x)) for x in sig.table[nz]]))
            ok = True
            for ac in nz.tolist():
                reach = np.zeros(t.order, dtype=bool)
                reach[t.mul_arr(ac, ratio)] = True
                same = np.zeros(t.order, dtype=bool)
                same[nz[N[nz] == N[ac]]] = True
                ok &= bool((reach == same).all())
            res.check(ok, f"conjugacy/Hilbert 90 mismatch on GF({p}^{m}), s={s}")
            classes = conjugacy_classes(sig)
            if t.order <= 64 and len(classes) > 1:
                x, y = classes[0][0], classes[1][0]
                res.check(hilbert90_witness(sig, x, y) is None,
                          "witness found across conjugacy classes")
                z = classes[1][-1]
                c = hilbert90_witness(sig, y, z)
                res.check(c is not None and y * c == z * sig(c), "witness missing within a class")


def _rand_poly(sig: Automorphism, deg: int, rng: random.Random) -> SkewPoly:
    return SkewPoly(sig, [rng.randrange(sig.tower.order) for _ in range(deg + 1)])


def suite_skewpoly(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for p, m, s in [(2, 4, 1), (2, 4, 3), (3, 2, 1), (5, 3, 2)]:
        sig = Automorphism(build_tower(p, m), s)
        for _ in range(30):
            f, g, h = (_rand_poly(sig, rng.randrange(4), rng) for _ in range(3))
            res.check((f * g) * h == f * (g * h), "skew_mul not associative")
            res.check(f * (g + h) == f * g + f * h, "left distributivity fails")
            res.check((f + g) * h == f * h + g * h, "right distributivity fails")
            if not f.is_zero() and not g.is_zero():
                res.check((f * g).degree == f.degree + g.degree, "degree not additive")
    for code in grid_codes():
        if code.k != code.n:
            continue
        evaluation_bijectivity_exhaustive(code, res, max_enum)
    for code in list(grid_codes())[:6]:
        rows = code.n
        f = np.array([[rng.randrange(code.tower.order) for _ in range(rows)] for _ in range(20)])
        g = np.array([[rng.randrange(code.tower.order) for _ in range(rows)] for _ in range(20)])
        t = code.tower
        res.check(bool((evaluate_batch(code, t.add_arr(f, g))
                        == t.add_arr(evaluate_batch(code, f), evaluate_batch(code, g))).all()),
                  f"evaluation not additive for {code}")


def evaluation_bijectivity_exhaustive(code: LrsCode, res: SuiteResult, max_enum: int = DEFAULT_MAX_ENUM) -> None:
    """Bijectivity of ``ev`` on degree < n and ``wt(ev f) >= n - deg f``."""
    t, n = code.tower, code.n
    total = t.order ** n
    if total > max_enum:
        res.notes.append(f"evaluation check skipped for {code}: {total} polynomials")
        return
    seen = np.zeros(total, dtype=bool)
    weights = t.order ** np.arange(n - 1, -1, -1, dtype=np.int64)
    ok_deg = True
    for F in iter_tuples(t.order, n):
        img = evaluate_batch(code, F)
        seen[img @ weights] = True
        nz = F.any(axis=1)
        deg = n - 1 - np.argmax(F[:, ::-1] != 0, axis=1)
        w = sum_rank_weights(t, img, code.ell, code.eta)
        ok_deg &= bool((w[nz] >= n - deg[nz]).all())
    res.check(bool(seen.all()), f"evaluation not bijective for {code}")
    res.check(ok_deg, f"weight-degree bound fails for {code}")


def rank_matrix_counts_exhaustive(q: int, m: int, eta: int) -> list[int]:
    """Number of m x eta matrices over F_q of each rank, by enumeration."""
    counts = [0] * (min(m, eta) + 1)
    for T in iter_tuples(q, m * eta, 1 << 15):
        # a 1 x 1 matrix has rank 1 exactly when its entry is nonzero
        r = (T[:, 0] != 0).astype(np.int64) if m * eta == 1 else rank_mod_p(T.reshape(-1, m, eta), q)
        for rk, c in zip(*np.unique(r, return_counts=True)):
            counts[int(rk)] += int(c)
    return counts


def counting_points(limit: int = 1 << 16):
    primes = [q for q in range(2, limit + 1) if all(q % d for d in range(2, math.isqrt(q) + 1))]
    for q in primes:
        for size in range(1, 17):
            if q ** size > limit:
                break
            for m in range(1, size + 1):
                if size % m == 0:
                    yield q, m, size // m


def suite_sumrank(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    from .sumrank import BlockVector, sum_rank_dist, sum_rank_weight

    for q, m, eta in counting_points():
        if q ** (m * eta) > max_enum:
            continue
        exact = rank_matrix_counts_exhaustive(q, m, eta)
        formula = [count_rank_matrices(m, eta, t, q) for t in range(min(m, eta) + 1)]
        res.check(exact == formula, f"rank counts differ at q={q}, m={m}, eta={eta}")
    for q in (2, 3, 5, 7):
        for ell in range(1, 4):
            for m in range(1, 4):
                for eta in range(1, 4):
                    sizes = sphere_sizes(ell, eta, m, q)
                    res.check(sum(sizes) == q ** (m * ell * eta), f"spheres do not partition ({q},{ell},{eta},{m})")
                    for t, exact in enumerate(sizes):
                        res.check(sphere_lower_bound(t, ell, eta, m, q) <= math.log(exact, q) + 1e-9,
                                  f"sphere lower bound exceeds exact size at t={t} ({q},{ell},{eta},{m})")
    for p, m in [(2, 4), (3, 2), (2, 6)]:
        t = build_tower(p, m)
        for ell, eta in [(1, m), (2, m), (m, 1)]:
            for _ in range(25):
                x, y, z = (BlockVector.from_codes(t, ell, eta, [rng.randrange(t.order) for _ in range(ell * eta)])
                           for _ in range(3))
                dxy, dyz, dxz = sum_rank_dist(x, y), sum_rank_dist(y, z), sum_rank_dist(x, z)
                res.check(sum_rank_dist(x, x) == 0 and dxy == sum_rank_dist(y, x), "identity/symmetry fails")
                res.check(dxz <= dxy + dyz, "triangle inequality fails")
                res.check((dxy == 0) == bool((x.codes == y.codes).all()), "distance 0 off the diagonal")
                w = sum_rank_weight(x)
                if eta == 1:
                    res.check(w == int((x.codes != 0).sum()), "eta = 1 is not the Hamming weight")
                naive = sum(naive_rank([list(t.decode(int(c))) for c in blk], p)
                            for blk in x.codes.reshape(ell, eta))
                res.check(w == naive, "block rank differs from naive rank")
                for g in [g for g in range(1, m + 1) if m % g == 0]:
                    wg = sum_rank_weight(x, g)
                    res.check(sum_rank_weight(x, m) <= wg <= w <= g * wg,
                              f"subfield rank ordering fails for g={g}")


def suite_lrs(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for code in grid_codes():
        res.check(all(validate_code(code).values()), f"{code} fails validation")
        res.check(min_distance_exhaustive(code, max_enum) == code.n - code.k + 1, f"{code} is not MSRD")
        prof = list_size_profile(code, range(code.d), max_enum=max_enum)
        res.check(prof[(code.d - 1) // 2].max_list == 1, f"{code}: unique decoding radius list > 1")
        res.check(all(r.verify() for r in prof.values()), f"{code}: oracle result not self-certifying")
        if code.tower.order ** code.n * code.num_codewords <= 1 << 22:
            allp = list_size_profile(code, range(code.d), strategy="all", max_enum=max_enum)
            res.check(all(allp[r].max_list == prof[r].max_list for r in prof),
                      f"{code}: coset and all-centre strategies disagree")
        spec = json.loads(json.dumps(code_to_spec(code)))
        res.check(code_from_spec(spec) == code, f"{code}: spec round trip changed the code")


def suite_list_bound(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for code in grid_codes():
        try:
            prof = list_size_profile(code, range(code.d), max_enum=max_enum)
        except EnumerationTooLarge as exc:
            res.notes.append(f"{code}: {exc}")
            continue
        for tau, r in prof.items():
            b = theorem1_bound(code.ell, code.eta, code.tower.m, code.q, code.d, tau)
            res.check(b.holds_for(r.max_list),
                      f"{code}, tau={tau}: bound {b.value:.4f} > list size {r.max_list}")


def suite_witness(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for code in grid_codes():
        for tau in range(code.d):
            S = dense_low_weight_set(code, tau, max_enum)
            w = pigeonhole_witness(code, S, tau)
            need = Fraction(len(S), code.tower.order ** (code.n - code.k))
            res.check(w.size >= need and w.verify(),
                      f"{code}, tau={tau}: witness {w.size} < {need} or fails re-verification")


def sparse_params(q: int, m: int, ell: int, g: int, tau: int) -> SparseSetParams:
    t = build_tower(q, m)
    sig = Automorphism(t, 1)
    a = make_eval_pair(t, sig, ell, 1).a
    return SparseSetParams(EvalPair(sig, a, tuple(build_structured_beta(t, g, m))), g, tau)


def sparse_taus(m: int, ell: int, g: int) -> list[int]:
    step = ell * g // math.gcd(ell, g)
    return list(range(0, ell * m + 1, step))


def suite_sparse(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for q, m, ell, g in SPARSE_POINTS:
        params = sparse_params(q, m, ell, g, 0)
        n_small = params.n // g
        count = params.tower.order ** n_small
        if count > max_enum:
            res.notes.append(f"weight scaling at {(q, m, ell, g)} limited by cap")
        ok = True
        for F in iter_tuples(params.tower.order, n_small) if count <= max_enum else ():
            ok &= bool(weight_scaling_rows(F, params).all())
        res.check(ok, f"weight scaling fails at q={q}, m={m}, ell={ell}, g={g}")
        for tau in sparse_taus(m, ell, g):
            p = sparse_params(q, m, ell, g, tau)
            E = sparse_set_enumerate(p, as_array=True, cap=max_enum)
            b = theorem2_bound(ell, m, m, q, g, tau)
            res.check(b.holds_for(len(E)),
                      f"q={q}, m={m}, ell={ell}, g={g}, tau={tau}: |R_g| = {len(E)} < bound {b.value:.4f}")
            if (q, m, ell, g) == SPARSE_POINTS[-1]:
                Fi = sparse_set_filter(p, max_enum)
                Fi = Fi[np.lexsort(Fi.T[::-1])]
                res.check(np.array_equal(E, Fi), f"filter and correspondence disagree at tau={tau}")
    # with g = 1 the sparse set is the full low-weight set
    for q, ell, m in GRID:
        for tau in range(0, ell * m + 1, ell):
            p = sparse_params(q, m, ell, 1, tau)
            E = sparse_set_enumerate(p, as_array=True, cap=max_enum)
            res.check(len(E) == sum(sphere_sizes(ell, m, m, q)[: tau + 1]),
                      f"g=1 sparse set size mismatch at ({q},{ell},{m}), tau={tau}")


CONSTRUCTION_CASES = [(FamilyParams(1, 5, 2, 1), 2), (FamilyParams(2, 6, 2, 2), 3),
                      (FamilyParams(3, 3, 1, 3), 5), (FamilyParams(4, 4, 1, 4), 5)]


def suite_construction(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for ell in range(1, 21):
        best = minimize_rate(ell)
        fp = FamilyParams(ell, best.C, best.D, ell)
        res.check(not fp.problems(), f"ell={ell}: optimum violates the family constraints")
        for C in range(ell, best.last_C + 1, ell):
            for D in range(1, C):
                if C > max(D * D, 2 * D):
                    R = 1 - Fraction(2 * D, C)
                    res.check(R > best.rate or (R == best.rate and (C, D) >= (best.C, best.D)),
                              f"ell={ell}: (C={C}, D={D}) beats the reported optimum")
    for fp, q in CONSTRUCTION_CASES:
        inst = construction1_instance(fp, q)
        code = inst.code()
        res.check(all(validate_code(code).values()), f"{fp}: code fails validation")
        try:
            inst.sparse_params().check()
            res.check(True, "")
        except Exception as exc:  # noqa: BLE001 - reported as a failure
            res.check(False, f"{fp}: sparse-set preconditions fail: {exc}")
        res.check(inst.bound().log_q_value == theorem3_exponent(fp),
                  f"{fp}: corollary exponent differs from (g/ell)(C - D^2)")


def bisect_radius(ell: int, m: int, n: int, d: int, q: int, eps: float) -> float:
    """Smallest real tau with the (real-extended) general list-size exponent >= eps n / ell."""
    lg = math.log(gamma_q(q), q)

    def excess(tau: float) -> float:
        return m + tau * (m + n / ell) - tau * tau / ell - m * d - ell * lg - ell / 4 - eps * n / ell

    lo, hi = 0.0, (ell * m + n) / 2
    if excess(lo) >= 0:
        return lo
    for _ in range(200):
        mid = (lo + hi) / 2
        if excess(mid) >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def suite_radii(res: SuiteResult, max_enum: int, rng: random.Random) -> None:
    for q, ell, m, k, eps in [(3, 2, 4, 4, 0.1), (2, 1, 6, 2, 0.05), (5, 2, 3, 2, 0.2), (7, 3, 4, 3, 0.3)]:
        n = ell * m
        d = n - k + 1
        tau = corollary1_radius(ell, m, n, d, q, eps)
        ref = bisect_radius(ell, m, n, d, q, eps)
        res.check(abs(tau - ref) <= 1e-6, f"closed-form radius {tau} vs bisection {ref}")
        c = math.ceil(tau - 1e-12)
        upper = (ell * m + n) - tau  # the other root of the quadratic
        if c < d and c <= upper:
            b = theorem1_bound(ell, m, m, q, d, c)
            res.check(b.log_q_total >= eps * n / ell - 1e-6,
                      f"list bound at the rounded radius {c} misses eps n / ell")
    for R in (0.1, 0.25, 0.5, 0.81, 0.9):
        for ell in (1, 2, 3, 7):
            for n in (10, 100, 1000):
                for eps in (0.0, 0.01, 0.05):
                    tau = corollary2_radius(R, ell, n, eps)
                    x = n * (1 - math.sqrt(R) + eps)
                    res.check(tau % ell == 0 and x < tau <= x + ell + 1e-9,
                              f"rounded radius {tau} for R={R}, ell={ell}, n={n}, eps={eps}")
    for q in (2, 3, 5):
        for a in (0.05, 0.1, 0.2):
            for R in (0.3, 0.5, 0.8):
                zeta = a * a * (0.25 + math.log(gamma_q(q), q))
                if zeta >= R:
                    continue
                lo = math.sqrt(R) - math.sqrt(R - zeta)
                for frac in (0.01, 0.5, 0.99):
                    eps = lo + frac * 2 * math.sqrt(R - zeta)
                    z, delta, b = corollary3_params(R, a, q, eps)
                    res.check(delta > 0 and abs(math.log(b, q) * a - delta) < 1e-9,
                              f"delta={delta} at q={q}, a={a}, R={R}, eps={eps}")


SUITES: dict[str, Callable[[SuiteResult, int, random.Random], None]] = {
    "gf": suite_gf,
    "skewpoly": suite_skewpoly,
    "sumrank": suite_sumrank,
    "lrs": suite_lrs,
    "list-bound": suite_list_bound,
    "witness": suite_witness,
    "sparse": suite_sparse,
    "construction": suite_construction,
    "radii": suite_radii,
}


def run_suite(name: str, max_enum: int = DEFAULT_MAX_ENUM, seed: int = 0) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    SUITES[name](res, max_enum, random.Random(seed))
    res.seconds = time.perf_counter() - t0
    return res


def run_suites(names, max_enum: int = DEFAULT_MAX_ENUM, seed: int = 0) -> list[SuiteResult]:
    if list(names) == ["all"]:
        names = list(SUITES)
    return [run_suite(n, max_enum, seed) for n in names]
