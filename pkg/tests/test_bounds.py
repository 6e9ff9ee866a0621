import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from lrslist.bounds import (
    BoundReport,
    FamilyParams,
    SparseSetParams,
    build_structured_beta,
    construction1_instance,
    corollary1_radius,
    corollary2_radius,
    corollary3_params,
    corollary4_bound,
    dense_low_weight_set,
    emit_region_data,
    lemma2_bound,
    lift_rows,
    lift_sparse,
    minimize_rate,
    pigeonhole_witness,
    sparse_set_enumerate,
    sparse_set_filter,
    theorem1_bound,
    theorem2_bound,
    theorem3_exponent,
    twist_evaluators,
    weight_scaling_check,
    weight_scaling_rows,
)
from lrslist.checks import bisect_radius, sparse_params
from lrslist.errors import (
    DegreeTooLarge,
    EpsilonTooSmall,
    InvariantViolation,
    NegativeDiscriminant,
    NotADivisor,
    PreconditionViolation,
    RadiusNotLessThanD,
    WeightViolation,
    ZeroInput,
    ZetaTooLarge,
)
from lrslist.gf import Automorphism, build_tower, conjugacy_classes, norm, subfield_rank_codes
from lrslist.lrs import encode_batch, evaluate_batch, iter_tuples, list_size_oracle, make_code
from lrslist.skewpoly import SkewPoly, evaluation_matrix, op_eval
from lrslist.sumrank import gamma_q, sphere_sizes, sum_rank_weights

# -- general list-size bound --


def test_general_bound_small_example():
    b = theorem1_bound(1, 2, 2, 3, 2, 1)
    assert b.log_q_value == 1
    assert b.value == pytest.approx(3 / gamma_q(3))
    assert b.value == pytest.approx(1.681, abs=1e-3)
    code = make_code(3, 2, 1, 2, 1)
    assert list_size_oracle(code, 1).max_list >= 2
    assert b.holds_for(list_size_oracle(code, 1).max_list)


def test_general_bound_quarter_term():
    a = theorem1_bound(2, 2, 2, 3, 4, 2)   # ell | tau
    b = theorem1_bound(2, 2, 2, 3, 4, 3)   # ell does not divide tau
    assert a.correction - b.correction == pytest.approx(2 / 4)
    assert a.correction == pytest.approx(-2 * math.log(gamma_q(3), 3))


def test_general_bound_requires_tau_below_d():
    with pytest.raises(RadiusNotLessThanD):
        theorem1_bound(1, 2, 2, 3, 2, 2)


def test_bound_report_comparison():
    r = BoundReport(3, Fraction(2), 0.0, "theorem1")
    assert r.value == pytest.approx(9)
    assert r.holds_for(9) and not r.holds_for(8) and not r.holds_for(0)


def test_sphere_bound_report_matches():
    from lrslist.sumrank import sphere_lower_bound
    for t in range(5):
        assert lemma2_bound(t, 2, 2, 2, 3).log_q_total == pytest.approx(sphere_lower_bound(t, 2, 2, 2, 3))


# -- pigeonhole witness --


def brute_low_weight(code, tau):
    """Every coefficient row of degree < n with image weight <= tau, by enumeration."""
    rows = []
    for F in iter_tuples(code.tower.order, code.n):
        w = sum_rank_weights(code.tower, evaluate_batch(code, F), code.ell, code.eta)
        rows.append(F[w <= tau])
    return np.concatenate(rows)


def test_witness_of_zero_set():
    code = make_code(3, 2, 2, 2, 2)
    w = pigeonhole_witness(code, [SkewPoly(code.sigma)], 1)
    assert w.size == 1
    assert not w.center.codes.any()


def test_witness_q3_ell1_m2_k1():
    code = make_code(3, 2, 1, 2, 1)
    S = brute_low_weight(code, 1)
    assert len(S) == 1 + sphere_sizes(1, 2, 2, 3)[1] == 33
    S_gen = dense_low_weight_set(code, 1)
    assert {tuple(r) for r in S.tolist()} == {tuple(r) for r in S_gen.tolist()}
    w = pigeonhole_witness(code, S, 1)
    # one top monomial (n - k = 1), so the divisor is q^m = 9
    assert w.used_top_monomials == 1
    assert w.guaranteed == Fraction(33, 9)
    assert w.size >= math.ceil(len(S) / 9)
    assert w.verify()


def test_witness_accepts_polys_and_rows_alike():
    code = make_code(3, 2, 2, 2, 2)
    S = dense_low_weight_set(code, 2)
    w1 = pigeonhole_witness(code, S, 2)
    w2 = pigeonhole_witness(code, [SkewPoly(code.sigma, r) for r in S.tolist()], 2)
    assert np.array_equal(w1.messages, w2.messages)
    assert np.array_equal(w1.center.codes, w2.center.codes)


def test_witness_errors():
    code = make_code(3, 2, 2, 2, 2)
    with pytest.raises(RadiusNotLessThanD):
        pigeonhole_witness(code, [SkewPoly(code.sigma)], 3)
    with pytest.raises(WeightViolation):
        pigeonhole_witness(code, [SkewPoly(code.sigma, [1])], 1)
    with pytest.raises(DegreeTooLarge):
        pigeonhole_witness(code, [SkewPoly.monomial(code.sigma, 4)], 1)


@pytest.mark.parametrize("q,m,ell,k,tau", [(3, 2, 2, 1, 2), (3, 2, 2, 2, 2), (5, 2, 2, 1, 3), (3, 2, 1, 1, 1)])
def test_witness_never_exceeds_oracle(q, m, ell, k, tau):
    code = make_code(q, m, ell, m, k)
    w = pigeonhole_witness(code, dense_low_weight_set(code, tau), tau)
    assert w.verify()
    assert w.size <= list_size_oracle(code, tau).max_list


# -- radius evaluators --


@pytest.mark.parametrize("q,ell,m,k,eps", [(3, 2, 4, 4, 0.1), (2, 1, 5, 2, 0.2), (5, 3, 2, 2, 0.05)])
def test_corollary1_matches_bisection(q, ell, m, k, eps):
    n = ell * m
    d = n - k + 1
    r = corollary1_radius(ell, m, n, d, q, eps)
    assert abs(r - bisect_radius(ell, m, n, d, q, eps)) < 1e-6


def test_corollary1_named_example_and_rounding():
    r = corollary1_radius(2, 4, 8, 5, 3, 0.1)
    c = math.ceil(r)
    assert 0 < r < 5 and c < 5
    assert theorem1_bound(2, 4, 4, 3, 5, c).log_q_total >= 0.1 * 8 / 2 - 1e-9


def test_corollary1_negative_discriminant():
    with pytest.raises(NegativeDiscriminant):
        corollary1_radius(1, 1, 1, 1, 2, 5.0)


def test_corollary2_examples():
    assert corollary2_radius(0.25, 1, 100, 0.01) == 52
    assert corollary2_radius(1, 3, 100, 0.05) == 6


@given(st.floats(0.01, 0.99), st.integers(1, 12), st.integers(1, 500), st.floats(0, 0.2))
def test_corollary2_divisible_and_close(R, ell, n, eps):
    tau = corollary2_radius(R, ell, n, eps)
    x = n * (1 - math.sqrt(R) + eps)
    assert tau % ell == 0
    assert x < tau + 1e-9 and tau <= x + ell + 1e-9


def test_corollary3_example_and_errors():
    zeta, delta, b = corollary3_params(0.5, 0.1, 2, 0.2)
    assert zeta == pytest.approx(0.0204, abs=1e-4)
    assert delta == pytest.approx(-0.04 + 2 * math.sqrt(0.5) * 0.2 - zeta)
    assert math.log(b, 2) * 0.1 == pytest.approx(delta)
    with pytest.raises(ZetaTooLarge):
        corollary3_params(0.01, 0.5, 2, 0.1)
    with pytest.raises(EpsilonTooSmall):
        corollary3_params(0.5, 0.1, 2, 1e-6)


@given(st.sampled_from([2, 3, 5, 7]), st.floats(0.01, 0.3), st.floats(0.2, 0.95), st.floats(0.001, 0.999))
def test_corollary3_delta_positive(q, a, R, frac):
    zeta = a * a * (0.25 + math.log(gamma_q(q), q))
    assume(zeta < R)
    lo = math.sqrt(R) - math.sqrt(R - zeta)
    eps = lo + frac * 2 * math.sqrt(R - zeta)
    assume(lo + 1e-9 < eps < lo + 2 * math.sqrt(R - zeta) - 1e-9)
    _, delta, b = corollary3_params(R, a, q, eps)
    assert delta > 0 and b > 1


# -- sparse sets --


def test_structured_beta_shapes():
    t = build_tower(2, 4)
    assert [b.code for b in build_structured_beta(t, 1, 4)] == [e.code for e in t.polynomial_basis(4)]
    from lrslist.gf import theta_power_codes
    assert [b.code for b in build_structured_beta(t, 4, 4)] == theta_power_codes(t, 4)
    beta = build_structured_beta(t, 2, 4)
    assert int(subfield_rank_codes(t, np.array([b.code for b in beta]), 1)) == 4
    with pytest.raises(NotADivisor):
        build_structured_beta(t, 3, 4)


def test_twist_identity_and_norms_f16():
    t = build_tower(2, 4)
    sig = Automorphism(t, 1)
    a = list(t.nonzero_elements())
    assert twist_evaluators(a, sig, 1) == a
    tw = twist_evaluators(a, sig, 2)
    sig2 = sig.power(2)
    for x, y in zip(a, tw):
        assert norm(sig2, y) == norm(sig, x)
    with pytest.raises(ZeroInput):
        twist_evaluators([t.zero], sig, 2)


def test_twist_keeps_classes_apart():
    t = build_tower(3, 2)
    sig = Automorphism(t, 1)
    reps = [c[0] for c in conjugacy_classes(sig)]
    tw = twist_evaluators(reps, sig, 2)
    assert len({norm(sig.power(2), x).code for x in tw}) == len(reps)


def test_lift_examples():
    t = build_tower(2, 4)
    sig = Automorphism(t, 1)
    sig2 = sig.power(2)
    c = SkewPoly(sig2, [t.z])
    assert lift_sparse(c, sig, 2).codes == c.codes
    f = SkewPoly(sig2, [1, 0, 1])
    assert lift_sparse(f, sig, 2).support() == {0, 4}
    with pytest.raises(DegreeTooLarge):
        lift_sparse(f, sig, 2, n=4)


def test_lift_evaluation_identity_exhaustive_f16():
    t = build_tower(2, 4)
    sig = Automorphism(t, 1)
    a = np.arange(1, 16)
    c = np.arange(16)
    a_tw = np.array([x.code for x in twist_evaluators([t.elem(int(v)) for v in a], sig, 2)])
    big = evaluation_matrix(sig, a, c, 5)
    small = evaluation_matrix(sig.power(2), a_tw, c, 3)
    F = np.concatenate(list(iter_tuples(16, 3)))
    assert np.array_equal(t.matmul(lift_rows(F, 2, 5), big), t.matmul(F, small))
    # spot check against the scalar evaluator
    f = SkewPoly(sig.power(2), [3, 7, 9])
    lf = lift_sparse(f, sig, 2)
    for x in (t.elem(5), t.elem(11)):
        for ai in (t.elem(2), t.elem(13)):
            ap = twist_evaluators([ai], sig, 2)[0]
            assert op_eval(lf, x, ai) == op_eval(f, x, ap)


def test_sparse_set_tau_zero():
    p = sparse_params(2, 4, 1, 2, 0)
    E = sparse_set_enumerate(p, as_array=True)
    assert E.shape[0] == 1 and not E.any()
    assert sparse_set_enumerate(p)[0].is_zero()


@pytest.mark.parametrize("q,m,ell,tau", [(3, 2, 2, 2), (3, 2, 1, 1), (5, 2, 2, 2), (2, 3, 1, 2)])
def test_sparse_g1_is_full_ball(q, m, ell, tau):
    E = sparse_set_enumerate(sparse_params(q, m, ell, 1, tau), as_array=True)
    assert len(E) == sum(sphere_sizes(ell, m, m, q)[: tau + 1])


@pytest.mark.parametrize("point", [(3, 2, 2, 2, 2), (2, 4, 1, 2, 2), (2, 4, 1, 2, 4), (3, 2, 2, 2, 4), (2, 4, 1, 4, 4)])
def test_correspondence_equals_filter(point):
    q, m, ell, g, tau = point
    p = sparse_params(q, m, ell, g, tau)
    E = sparse_set_enumerate(p, as_array=True)
    Fi = sparse_set_filter(p)
    assert {tuple(r) for r in E.tolist()} == {tuple(r) for r in Fi.tolist()}
    assert len(E) == len(Fi)
    assert not E[:, [i for i in range(p.n) if i % g]].any()


def test_sparse_preconditions():
    t = build_tower(3, 2)
    sig = Automorphism(t, 1)
    from lrslist.skewpoly import make_eval_pair
    pair = make_eval_pair(t, sig, 2, 2)
    with pytest.raises(PreconditionViolation):
        SparseSetParams(pair, 2, 1).check()       # g does not divide tau
    with pytest.raises(PreconditionViolation):
        SparseSetParams(make_eval_pair(t, sig, 2, 1), 1, 2).check()   # eta != m
    with pytest.raises(PreconditionViolation):
        theorem2_bound(2, 2, 2, 3, 2, 3)


def test_weight_scaling_small_points():
    p = sparse_params(2, 4, 1, 2, 0)
    assert weight_scaling_check(SkewPoly(p.sigma.power(2)), p)
    F = np.concatenate(list(iter_tuples(16, 2)))
    assert weight_scaling_rows(F, p).all()
    p3 = sparse_params(3, 2, 2, 2, 0)
    F3 = np.concatenate(list(iter_tuples(9, 2)))
    assert weight_scaling_rows(F3, p3).all()


@given(st.lists(st.integers(0, 15), min_size=0, max_size=2))
def test_weight_scaling_property(coeffs):
    p = sparse_params(2, 4, 1, 2, 0)
    assert weight_scaling_check(SkewPoly(p.sigma.power(2), coeffs), p)


def test_sparse_count_with_quarter_term():
    # the stated bound omits the quarter term when ell does not divide tau/g;
    # with it restored the count always clears the bound
    for q, m, ell, g in [(2, 4, 1, 2), (3, 2, 2, 2)]:
        for tau in range(0, ell * m + 1, max(ell, g)):
            if tau % ell or tau % g:
                continue
            count = len(sparse_set_enumerate(sparse_params(q, m, ell, g, tau), as_array=True))
            assert theorem2_bound(ell, m, m, q, g, tau, quarter_term=True).holds_for(count)


# -- sparse-set list bound, code families, rate table --


def test_corollary4_eta_equals_m():
    b = corollary4_bound(2, 4, 4, 3, 2, 4)
    assert b.log_q_value == 4 - Fraction(16, 4)
    corollary4_bound(2, 4, 4, 3, 2, 4, k=1)      # k > n - 2 tau = 0
    with pytest.raises(PreconditionViolation):
        corollary4_bound(2, 4, 4, 3, 2, 2, k=4)  # needs k > 4


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 4), st.integers(2, 30))
def test_construction_exponent_matches(ell, D, gm, extra):
    C = ell * ((max(D * D, 2 * D) + 1 + ell - 1) // ell) + ell * (extra % 3)
    fp = FamilyParams(ell, C, D, ell * gm)
    inst = construction1_instance(fp, 97)
    assert inst.bound().log_q_value == theorem3_exponent(fp) == Fraction(fp.g, ell) * (C - D * D)
    # k = n - 2Dg + 1, so the rate sits 1/(Cg) above its limit
    assert inst.rate == 1 - Fraction(2 * D, C) + Fraction(1, C * fp.g)


def test_construction_examples():
    a = construction1_instance(FamilyParams(1, 5, 2, 1), 2)
    assert (a.n, a.k, a.m, a.eta) == (5, 2, 5, 5)
    b = construction1_instance(FamilyParams(2, 6, 2, 2), 3)
    assert (b.n, b.k, b.m, b.eta) == (12, 5, 6, 6)
    with pytest.raises(InvariantViolation):
        construction1_instance(FamilyParams(2, 5, 2, 2), 3)
    with pytest.raises(InvariantViolation):
        construction1_instance(FamilyParams(2, 6, 2, 2), 2)


def test_construction_codes_are_valid():
    from lrslist.lrs import validate_code
    for fp, q in [(FamilyParams(1, 5, 2, 1), 2), (FamilyParams(3, 3, 1, 3), 5)]:
        inst = construction1_instance(fp, q)
        assert all(validate_code(inst.code()).values())
        inst.sparse_params().check()


def brute_min_rate(ell, C_max=400):
    best = None
    for C in range(ell, C_max + 1, ell):
        for D in range(1, C):
            if C > max(D * D, 2 * D):
                key = (1 - Fraction(2 * D, C), C, D)
                best = key if best is None or key < best else best
    return best


@pytest.mark.parametrize("ell", range(1, 21))
def test_minimize_rate_vs_wide_scan(ell):
    r = minimize_rate(ell)
    assert (r.rate, r.C, r.D) == brute_min_rate(ell)


def test_minimize_rate_examples():
    assert (minimize_rate(1).rate, minimize_rate(1).C, minimize_rate(1).D) == (Fraction(1, 5), 5, 2)
    assert (minimize_rate(10).rate, minimize_rate(10).C, minimize_rate(10).D) == (Fraction(2, 5), 10, 3)
    r17 = minimize_rate(17)
    assert (r17.rate, r17.C, r17.D) == (Fraction(9, 17), 17, 4)
    assert r17.to_row()["rate_decimal_6dp"] == "0.529412"


def test_region_rows():
    rows = emit_region_data([1, 0.25, 0])
    assert rows[0] == (1.0, 0.0, 0.0)
    assert rows[1] == (0.25, 0.5, 0.375)
    assert rows[2] == (0.0, 1.0, 0.5)
