"""Acceptance criteria 1-9, one test each.

Every test records its criterion number, so the run ends with one
PASS/FAIL line per criterion (see conftest.py). The test also prints the
same line, which shows up under ``pytest -s``.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from lrslist.bounds import (
    FamilyParams,
    construction1_instance,
    corollary1_radius,
    corollary2_radius,
    corollary3_params,
    corollary4_bound,
    dense_low_weight_set,
    minimize_rate,
    pigeonhole_witness,
    sparse_set_enumerate,
    sparse_set_filter,
    theorem1_bound,
    theorem2_bound,
    weight_scaling_rows,
)
from lrslist.checks import (
    GRID,
    SuiteResult,
    bisect_radius,
    counting_points,
    grid_codes,
    evaluation_bijectivity_exhaustive,
    rank_matrix_counts_exhaustive,
    sparse_params,
    sparse_taus,
)
from lrslist.errors import EnumerationTooLarge
from lrslist.lrs import iter_tuples, list_size_profile, make_code, min_distance_exhaustive
from lrslist.sumrank import count_rank_matrices, gamma_q, sphere_lower_bound, sphere_sizes

# rows as printed in the source table: (ell, rate to 6 decimals, C, D)
RATE_TABLE = [
    (1, "0.200000", 5, 2), (2, "0.333333", 6, 2), (3, "0.333333", 3, 1), (4, "0.500000", 4, 1),
    (5, "0.200000", 5, 2), (6, "0.333333", 6, 2), (7, "0.428571", 7, 2), (8, "0.500000", 8, 2),
    (9, "0.555556", 9, 2), (10, "0.400000", 10, 3), (11, "0.454545", 11, 3), (12, "0.500000", 12, 3),
    (13, "0.538462", 13, 3), (14, "0.571429", 14, 3), (15, "0.600000", 15, 3), (16, "0.625000", 16, 3),
    (17, "0.529412", 17, 4), (18, "0.555556", 18, 4), (19, "0.578947", 19, 4), (20, "0.600000", 20, 4),
]


@pytest.fixture
def criterion(record_property):
    def mark(number, title):
        record_property("criterion", number)
        record_property("title", title)
    return mark


def report(number, ok, detail=""):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
    return ok


def test_c1_rate_table(criterion):
    criterion(1, "minimal family rates match the published table, ell = 1..20")
    t0 = time.perf_counter()
    got = []
    for ell, *_ in RATE_TABLE:
        row = minimize_rate(ell).to_row()
        got.append((row["ell"], row["rate_decimal_6dp"], row["C"], row["D"]))
    elapsed = time.perf_counter() - t0
    ok = got == RATE_TABLE and elapsed < 1.0
    assert report(1, ok, f"({elapsed:.3f}s)"), [(g, e) for g, e in zip(got, RATE_TABLE) if g != e]


def test_c2_gamma_constants(criterion):
    criterion(2, "gamma_q(2), gamma_q(3), gamma_q(4) within 0.001")
    vals = {q: gamma_q(q) for q in (2, 3, 4)}
    ok = all(abs(vals[q] - e) <= 1e-3 for q, e in [(2, 3.463), (3, 1.785), (4, 1.452)])
    assert report(2, ok, str({q: round(v, 5) for q, v in vals.items()}))


def test_c3_msrd_grid(criterion):
    criterion(3, "MSRD on the full grid in under a minute")
    t0 = time.perf_counter()
    bad = [repr(c) for c in grid_codes() if min_distance_exhaustive(c) != c.n - c.k + 1]
    elapsed = time.perf_counter() - t0
    assert report(3, not bad and elapsed < 60, f"({elapsed:.2f}s)"), bad


def test_c4_evaluation_bijective_grid(criterion):
    criterion(4, "evaluation bijectivity and weight-degree bound on the grid")
    res = SuiteResult("lemma1")
    for q, ell, m in GRID:
        code = make_code(q, m, ell, m, ell * m)
        evaluation_bijectivity_exhaustive(code, res, max_enum=1 << 20)
    ok = res.passed and not res.notes and res.checked == 2 * len(GRID)
    assert report(4, ok, f"({res.checked} checks)"), res.failures + res.notes


def test_c5_list_bound_validity(criterion):
    criterion(5, "general list bound <= exact list size on every feasible grid point")
    violations, points = [], 0
    for code in grid_codes():
        try:
            prof = list_size_profile(code, range(code.d))
        except EnumerationTooLarge:
            continue
        for tau, res in prof.items():
            points += 1
            b = theorem1_bound(code.ell, code.eta, code.tower.m, code.q, code.d, tau)
            if not b.holds_for(res.max_list):
                violations.append((repr(code), tau, b.value, res.max_list))
    assert report(5, not violations and points > 0, f"({points} (code, tau) points)"), violations


def test_c6_pigeonhole_witness(criterion):
    criterion(6, "pigeonhole witness meets |S| q^-m(n-k) and re-verifies")
    bad, points = [], 0
    for code in grid_codes():
        for tau in range(code.d):
            S = dense_low_weight_set(code, tau)
            w = pigeonhole_witness(code, S, tau)
            need = Fraction(len(S), code.tower.order ** (code.n - code.k))
            points += 1
            if not (w.size >= need and w.verify()):
                bad.append((repr(code), tau, w.size, need))
    assert report(6, not bad, f"({points} points)"), bad


def test_c7_sparse_sets(criterion):
    criterion(7, "weight scaling, sparse-set cardinality bound, filter = correspondence")
    t0 = time.perf_counter()
    problems = []
    for q, m, ell, g in [(2, 4, 1, 2), (3, 2, 2, 2)]:
        base = sparse_params(q, m, ell, g, 0)
        for F in iter_tuples(base.tower.order, base.n // g):
            if not weight_scaling_rows(F, base).all():
                problems.append(f"weight scaling fails at {(q, m, ell, g)}")
                break
        for tau in sparse_taus(m, ell, g):
            E = sparse_set_enumerate(sparse_params(q, m, ell, g, tau), as_array=True)
            b = theorem2_bound(ell, m, m, q, g, tau)
            if not b.holds_for(len(E)):
                problems.append(f"q={q} m=eta={m} ell={ell} g={g} tau={tau}: "
                                f"count {len(E)} < bound {b.value:.3f}")
    small = sparse_params(3, 2, 2, 2, 2)
    E = sparse_set_enumerate(small, as_array=True)
    Fi = sparse_set_filter(small)
    if {tuple(r) for r in E.tolist()} != {tuple(r) for r in Fi.tolist()}:
        problems.append("filter and correspondence enumerations differ")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 300
    assert report(7, ok, f"({elapsed:.2f}s) " + "; ".join(problems)), problems


def test_c8_counting(criterion):
    criterion(8, "matrix counts vs enumeration, sphere partition, sphere bound <= exact")
    problems, n_points = [], 0
    for q, m, eta in counting_points(1 << 16):
        n_points += 1
        exact = rank_matrix_counts_exhaustive(q, m, eta)
        if exact != [count_rank_matrices(m, eta, t, q) for t in range(min(m, eta) + 1)]:
            problems.append(("count", q, m, eta))
    for q, ell, m in GRID:
        sizes = sphere_sizes(ell, m, m, q)
        if sum(sizes) != q ** (m * ell * m):
            problems.append(("partition", q, ell, m))
        for t, exact in enumerate(sizes):
            if sphere_lower_bound(t, ell, m, m, q) > math.log(exact, q) + 1e-9:
                problems.append(("lemma2", q, ell, m, t))
    assert report(8, not problems, f"({n_points} (q, m, eta) triples enumerated)"), problems


def test_c9_radius_evaluators(criterion):
    criterion(9, "radius evaluators consistent; family exponent exact")
    problems = []
    for q, ell, m, k, eps in [(3, 2, 4, 4, 0.1), (2, 1, 6, 2, 0.05), (5, 2, 3, 2, 0.2)]:
        n = ell * m
        r = corollary1_radius(ell, m, n, n - k + 1, q, eps)
        ref = bisect_radius(ell, m, n, n - k + 1, q, eps)
        if abs(r - ref) > 1e-6:
            problems.append(("corollary1", r, ref))
    rng = random.Random(7)
    for _ in range(200):
        R, ell, n, eps = rng.uniform(0.01, 0.99), rng.randint(1, 10), rng.randint(1, 400), rng.uniform(0, 0.2)
        tau = corollary2_radius(R, ell, n, eps)
        x = n * (1 - math.sqrt(R) + eps)
        if tau % ell or not (x < tau <= x + ell + 1e-9):
            problems.append(("corollary2", R, ell, n, eps, tau))
    for q in (2, 3, 5):
        for a in (0.05, 0.1, 0.2):
            R = 0.5
            zeta = a * a * (0.25 + math.log(gamma_q(q), q))
            lo, span = math.sqrt(R) - math.sqrt(R - zeta), 2 * math.sqrt(R - zeta)
            for frac in (0.01, 0.5, 0.99):
                _, delta, _ = corollary3_params(R, a, q, lo + frac * span)
                if not delta > 0:
                    problems.append(("corollary3", q, a, frac, delta))
    for ell in range(1, 8):
        for D in range(1, 5):
            C = ell * (max(D * D, 2 * D) // ell + 1)
            for g in (ell, 2 * ell, 3 * ell):
                fp = FamilyParams(ell, C, D, g)
                inst = construction1_instance(fp, 101)
                b = corollary4_bound(ell, inst.eta, inst.m, inst.q, g, inst.tau, inst.k)
                if b.log_q_value != Fraction(g, ell) * (C - D * D):
                    problems.append(("construction", fp, b.log_q_value))
    assert report(9, not problems, f"({len(problems)} problems)"), problems
