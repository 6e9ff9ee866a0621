import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrslist.errors import DegreeZero, FieldTooLarge, NonPrimeP, NotADivisor, ZeroInput
from lrslist.gf import (
    Automorphism,
    apply_aut,
    build_tower,
    conjugacy_classes,
    hilbert90_witness,
    is_irreducible,
    norm,
    subfield_basis,
    subfield_rank_codes,
)

TOWERS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2)]


def brute_irreducible(poly, p):
    """No root-free factorisation test: compare against all products of two monic factors."""
    m = len(poly) - 1
    for da in range(1, m // 2 + 1):
        for a in itertools.product(range(p), repeat=da):
            for b in itertools.product(range(p), repeat=m - da):
                fa, fb = list(a) + [1], list(b) + [1]
                prod = [0] * (m + 1)
                for i, x in enumerate(fa):
                    for j, y in enumerate(fb):
                        prod[i + j] = (prod[i + j] + x * y) % p
                if prod == list(poly):
                    return False
    return True


def test_f2_is_degree_one_tower():
    t = build_tower(2, 1)
    assert t.modulus == (1, 1)
    assert t.order == 2


def test_f4_modulus_is_unique_irreducible_quadratic():
    quads = [c + (1,) for c in itertools.product(range(2), repeat=2)]
    irreducible = [q for q in quads if brute_irreducible(q, 2)]
    assert irreducible == [(1, 1, 1)]
    assert build_tower(2, 2).modulus == (1, 1, 1)


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (2, 3), (3, 3), (2, 4)])
def test_modulus_is_lex_smallest_irreducible(p, m):
    # compare low-to-high coefficient order, i.e. reversed tuples
    cands = sorted((c + (1,) for c in itertools.product(range(p), repeat=m)),
                   key=lambda c: tuple(c))
    first = next(c for c in cands if brute_irreducible(c, p))
    assert build_tower(p, m).modulus == first
    assert is_irreducible(first, p)


@pytest.mark.parametrize("p,m", TOWERS)
def test_primitive_element_has_full_order(p, m):
    t = build_tower(p, m)
    g = t.primitive_element
    seen = set()
    x = t.one
    for _ in range(t.order - 1):
        seen.add(x.code)
        x = x * g
    assert len(seen) == t.order - 1 and x == t.one


@pytest.mark.parametrize("p,m", TOWERS)
def test_table_arithmetic_matches_reference(p, m):
    t = build_tower(p, m)
    codes = range(t.order)
    for a in codes:
        for b in codes:
            assert t.mul(a, b) == t.ref_mul(a, b)
            assert t.add(a, b) == t.ref_add(a, b)


def test_build_tower_errors():
    with pytest.raises(NonPrimeP):
        build_tower(4, 2)
    with pytest.raises(DegreeZero):
        build_tower(2, 0)
    with pytest.raises(FieldTooLarge):
        build_tower(2, 40)


def test_build_tower_deterministic():
    assert build_tower.__wrapped__(3, 3).to_record() == build_tower.__wrapped__(3, 3).to_record()


def test_frobenius_on_f4():
    t = build_tower(2, 2)
    w = t.z
    sig = Automorphism(t, 1)
    assert apply_aut(sig, w) == w * w == w + t.one
    assert apply_aut(Automorphism(t, 0), w) == w


@pytest.mark.parametrize("p,m", TOWERS)
def test_automorphism_has_order_m(p, m):
    t = build_tower(p, m)
    sig = Automorphism(t, 1)
    for a in t.elements():
        x = a
        for _ in range(m):
            x = apply_aut(sig, x)
        assert x == a
        assert apply_aut(sig, a) == a ** p


def test_norms_f4_all_one():
    t = build_tower(2, 2)
    sig = Automorphism(t, 1)
    for a in t.nonzero_elements():
        assert norm(sig, a) == t.one == a ** 3


def test_norms_f9_two_classes_of_four():
    t = build_tower(3, 2)
    sig = Automorphism(t, 1)
    values = {}
    for a in t.nonzero_elements():
        assert norm(sig, a) == a ** 4
        values.setdefault(norm(sig, a).code, []).append(a)
    assert sorted(len(v) for v in values.values()) == [4, 4]


def test_norm_of_zero_raises():
    t = build_tower(3, 2)
    with pytest.raises(ZeroInput):
        norm(Automorphism(t, 1), t.zero)


@pytest.mark.parametrize("p,m,s", [(2, 2, 1), (3, 2, 1), (2, 4, 1), (2, 4, 3), (5, 2, 1), (2, 6, 2)])
def test_conjugacy_class_counts(p, m, s):
    t = build_tower(p, m)
    sig = Automorphism(t, s)
    classes = conjugacy_classes(sig)
    qf = sig.fixed_field_order
    assert len(classes) == qf - 1
    assert all(len(c) == (t.order - 1) // (qf - 1) for c in classes)
    assert sum(len(c) for c in classes) == t.order - 1


def test_hilbert90_on_f9_exhaustive():
    t = build_tower(3, 2)
    sig = Automorphism(t, 1)
    for a in t.nonzero_elements():
        assert hilbert90_witness(sig, a, a) is not None
        for b in t.nonzero_elements():
            c = hilbert90_witness(sig, a, b)
            if norm(sig, a) == norm(sig, b):
                assert c is not None and a * c == b * sig(c)
            else:
                assert c is None


def test_subfield_basis_edges():
    t = build_tower(2, 4)
    full = subfield_basis(t, 4)
    assert [x.code for x in full.relative_basis] == [1]
    one = subfield_basis(t, 1)
    assert [x.code for x in one.theta_powers] == [1]
    assert len(one.relative_basis) == 4
    with pytest.raises(NotADivisor):
        subfield_basis(t, 3)


def test_f16_theta_powers_fixed_by_frobenius_squared():
    t = build_tower(2, 4)
    sb = subfield_basis(t, 2)
    for th in sb.theta_powers:
        assert th ** 4 == th
    assert int(subfield_rank_codes(t, np.array([x.code for x in sb.relative_basis]), 2)) == 2


@given(st.sampled_from(TOWERS), st.data())
def test_norm_multiplicative_and_galois_invariant(pm, data):
    t = build_tower(*pm)
    sig = Automorphism(t, 1)
    a = t.elem(data.draw(st.integers(1, t.order - 1)))
    b = t.elem(data.draw(st.integers(1, t.order - 1)))
    assert norm(sig, a * b) == norm(sig, a) * norm(sig, b)
    assert norm(sig, sig(a)) == norm(sig, a)


@given(st.sampled_from(TOWERS), st.data())
def test_frobenius_is_fq_linear(pm, data):
    t = build_tower(*pm)
    sig = Automorphism(t, 1)
    a = t.elem(data.draw(st.integers(0, t.order - 1)))
    b = t.elem(data.draw(st.integers(0, t.order - 1)))
    lam = t.embed(data.draw(st.integers(0, t.p - 1)))
    assert sig(a + lam * b) == sig(a) + lam * sig(b)


@given(st.sampled_from(TOWERS), st.data())
def test_field_axioms(pm, data):
    t = build_tower(*pm)
    a, b, c = (t.elem(data.draw(st.integers(0, t.order - 1))) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == t.zero
    if not a.is_zero():
        assert a * a.inverse() == t.one
