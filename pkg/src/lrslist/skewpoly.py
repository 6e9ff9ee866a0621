"""Skew polynomials F_{q^m}[x; sigma] and generalized operator evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BlockTooLong,
    DegreeTooLarge,
    RingMismatch,
    TooManyBlocks,
    TowerMismatch,
    ZeroEvaluator,
)
from .gf import (
    Automorphism,
    FElem,
    FieldTower,
    conjugacy_classes,
    norm_code,
    subfield_rank_codes,
)


def _codes(tower: FieldTower, values) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, FElem):
            if v.tower != tower:
                raise TowerMismatch("coefficient from another tower")
            out.append(v.code)
        else:
            out.append(tower.elem(v).code)
    return tuple(out)


class SkewPoly:
    """A skew polynomial ``sum_i f_i x^i`` with ``x * a = sigma(a) * x``.

    ``coeffs`` may be field elements, integer codes, or coordinate lists.
    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree ``-inf``.
    """

    __slots__ = ("sigma", "codes")

    def __init__(self, sigma: Automorphism, coeffs: Sequence = ()):
        codes = list(_codes(sigma.tower, coeffs))
        while codes and codes[-1] == 0:
            codes.pop()
        self.sigma = sigma
        self.codes = tuple(codes)

    @classmethod
    def monomial(cls, sigma: Automorphism, degree: int, coeff=1) -> "SkewPoly":
        return cls(sigma, [0] * degree + [coeff])

    @property
    def tower(self) -> FieldTower:
        return self.sigma.tower

    @property
    def coeffs(self) -> tuple[FElem, ...]:
        return tuple(FElem(self.tower, c) for c in self.codes)

    @property
    def degree(self) -> int | float:
        return len(self.codes) - 1 if self.codes else -math.inf

    def is_zero(self) -> bool:
        return not self.codes

    def support(self) -> set[int]:
        return {i for i, c in enumerate(self.codes) if c}

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self.codes) > length:
            raise DegreeTooLarge(f"degree {self.degree} does not fit in {length} coefficients")
        return self.codes + (0,) * (length - len(self.codes))

    def _same_ring(self, other: "SkewPoly") -> None:
        if not isinstance(other, SkewPoly) or other.sigma != self.sigma:
            raise RingMismatch("skew polynomials over different rings")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, other)

    def __neg__(self) -> "SkewPoly":
        t = self.tower
        return SkewPoly(self.sigma, [t.neg(c) for c in self.codes])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, -other)

    def __mul__(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            return skew_mul(self, other)
        # right scalar multiple f * c = sum f_i sigma^i(c) x^i
        return skew_mul(self, SkewPoly(self.sigma, [other]))

    def __rmul__(self, other) -> "SkewPoly":
        return skew_mul(SkewPoly(self.sigma, [other]), self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.sigma == other.sigma and self.codes == other.codes

    def __hash__(self) -> int:
        return hash((self.sigma.s, self.codes))

    def __call__(self, beta: FElem, a: FElem) -> FElem:
        return op_eval(self, beta, a)

    def to_record(self) -> dict:
        t = self.tower
        return {"sigma_s": self.sigma.s, "coeffs": [list(t.decode(c)) for c in self.codes]}

    def __repr__(self) -> str:
        if not self.codes:
            return "SkewPoly(0)"
        terms = []
        for i, c in enumerate(self.codes):
            if c:
                terms.append(f"({FElem(self.tower, c)})" + ("" if i == 0 else f"x^{i}"))
        return "SkewPoly(" + " + ".join(terms) + ")"


def skew_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._same_ring(g)
    t = f.tower
    n = max(len(f.codes), len(g.codes))
    a, b = f.padded(n), g.padded(n)
    return SkewPoly(f.sigma, [t.add(x, y) for x, y in zip(a, b)])


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """``(fg)_k = sum_{i+j=k} f_i sigma^i(g_j)``."""
    f._same_ring(g)
    if f.is_zero() or g.is_zero():
        return SkewPoly(f.sigma)
    t, s = f.tower, f.sigma.s
    out = [0] * (len(f.codes) + len(g.codes) - 1)
    for i, fi in enumerate(f.codes):
        if not fi:
            continue
        for j, gj in enumerate(g.codes):
            if gj:
                out[i + j] = t.add(out[i + j], t.mul(fi, t.frob(gj, s * i)))
    return SkewPoly(f.sigma, out)


def op_eval(f: SkewPoly, beta: FElem, a: FElem) -> FElem:
    """Generalized operator evaluation ``f(beta)_a = sum_i f_i sigma^i(beta) N_i(a)``.

    ``N_i(a) = a sigma(a) ... sigma^{i-1}(a)`` is maintained incrementally.
    """
    t, s = f.tower, f.sigma.s
    b, ac = _codes(t, [beta])[0], _codes(t, [a])[0]
    if ac == 0:
        raise ZeroEvaluator("evaluator a must be nonzero")
    acc, sb, Ni, sa = 0, b, 1, ac
    for fi in f.codes:
        if fi:
            acc = t.add(acc, t.mul(fi, t.mul(sb, Ni)))
        Ni = t.mul(Ni, sa)
        sb = t.frob(sb, s)
        sa = t.frob(sa, s)
    return FElem(t, acc)


def evaluation_matrix(sigma: Automorphism, a_codes, beta_codes, rows: int) -> np.ndarray:
    """Matrix ``M`` with ``M[i, l*eta + j] = sigma^i(beta_j) N_i(a_l)``.

    A coefficient row vector ``f`` (length ``rows``) maps to its multi-point
    evaluation as ``f @ M`` over the field.
    """
    t = sigma.tower
    a_codes = np.asarray(a_codes, dtype=np.int64)
    beta_codes = np.asarray(beta_codes, dtype=np.int64)
    ell, eta = len(a_codes), len(beta_codes)
    M = np.zeros((rows, ell * eta), dtype=np.int64)
    sb = beta_codes.copy()
    Ni = np.ones(ell, dtype=np.int64)
    sa = a_codes.copy()
    tab = sigma.table
    for i in range(rows):
        M[i] = t.mul_arr(Ni[:, None], sb[None, :]).reshape(-1)
        Ni = t.mul_arr(Ni, sa)
        sa = tab[sa]
        sb = tab[sb]
    return M


@dataclass(frozen=True)
class EvalPair:
    """Block evaluators ``a`` (length ell) and basis points ``beta`` (length eta)."""

    sigma: Automorphism
    a: tuple[FElem, ...]
    beta: tuple[FElem, ...]

    def __post_init__(self):
        t = self.sigma.tower
        object.__setattr__(self, "a", tuple(t.elem(x) for x in self.a))
        object.__setattr__(self, "beta", tuple(t.elem(x) for x in self.beta))

    @property
    def tower(self) -> FieldTower:
        return self.sigma.tower

    @property
    def ell(self) -> int:
        return len(self.a)

    @property
    def eta(self) -> int:
        return len(self.beta)

    @property
    def n(self) -> int:
        return self.ell * self.eta

    @property
    def a_codes(self) -> np.ndarray:
        return np.array([x.code for x in self.a], dtype=np.int64)

    @property
    def beta_codes(self) -> np.ndarray:
        return np.array([x.code for x in self.beta], dtype=np.int64)

    def certify(self) -> dict[str, bool]:
        """Check both evaluation-pair conditions.

        Independence of ``beta`` is taken over the fixed field of ``sigma``.
        """
        nonzero = all(not x.is_zero() for x in self.a)
        norms = [norm_code(self.sigma, x.code) for x in self.a] if nonzero else []
        distinct = nonzero and len(set(norms)) == len(norms)
        if self.eta:
            rk = int(subfield_rank_codes(self.tower, self.beta_codes, self.sigma.fixed_degree))
        else:
            rk = 0
        return {
            "a nonzero": nonzero,
            "a pairwise non-conjugate": distinct,
            "beta linearly independent": rk == self.eta,
        }

    def is_valid(self) -> bool:
        return all(self.certify().values())

    def matrix(self, rows: int) -> np.ndarray:
        return evaluation_matrix(self.sigma, self.a_codes, self.beta_codes, rows)


def multi_eval(f: SkewPoly, pair: EvalPair) -> list[FElem]:
    """``[f(beta_1)_{a_1}, ..., f(beta_eta)_{a_1}, f(beta_1)_{a_2}, ..., f(beta_eta)_{a_ell}]``."""
    if f.sigma != pair.sigma:
        raise RingMismatch("polynomial and evaluation pair use different automorphisms")
    n = pair.n
    if f.degree >= n:
        raise DegreeTooLarge(f"degree {f.degree} >= n = {n}")
    if any(x.is_zero() for x in pair.a):
        raise ZeroEvaluator("evaluators must be nonzero")
    if f.is_zero():
        return [pair.tower.zero] * n
    M = pair.matrix(len(f.codes))
    row = pair.tower.matmul(np.array([f.codes]), M)[0]
    return [FElem(pair.tower, int(c)) for c in row]


def make_eval_pair(tower: FieldTower, sigma: Automorphism, ell: int, eta: int) -> EvalPair:
    """Deterministic default evaluation pair.

    ``a_i`` is the smallest member of the i-th conjugacy class (classes ordered
    by their smallest member) and ``beta = 1, z, ..., z^{eta-1}``.
    """
    q = sigma.fixed_field_order
    if ell >= q:
        raise TooManyBlocks(f"need ell < q, got ell={ell}, q={q}")
    if eta > tower.m:
        raise BlockTooLong(f"need eta <= m, got eta={eta}, m={tower.m}")
    classes = conjugacy_classes(sigma)
    pair = EvalPair(sigma, tuple(cls[0] for cls in classes[:ell]), tuple(tower.polynomial_basis(eta)))
    cert = pair.certify()
    assert all(cert.values()), cert
    return pair
