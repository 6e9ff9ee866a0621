"""List-size lower bounds for linearized Reed-Solomon codes.

Bounds are carried as an exact rational exponent of ``q`` plus a floating
correction (the gamma-constant terms), so comparisons against exact counts
can be made in log space without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    DegreeTooLarge,
    EnumerationTooLarge,
    EpsilonTooLarge,
    EpsilonTooSmall,
    IndependenceFailure,
    InvariantViolation,
    NegativeDiscriminant,
    NotADivisor,
    PreconditionViolation,
    RadiusNotLessThanD,
    RingMismatch,
    WeightViolation,
    ZeroInput,
    ZetaTooLarge,
)
from .gf import (
    Automorphism,
    FElem,
    FieldTower,
    build_tower,
    subfield_basis,
    subfield_rank_codes,
    theta_power_codes,
)
from .lrs import DEFAULT_MAX_ENUM, LrsCode, encode_batch, evaluate_batch, iter_tuples
from .skewpoly import EvalPair, SkewPoly, make_eval_pair
from .sumrank import BlockVector, log_gamma_q, low_weight_vectors, sum_rank_weights

LOG_TOL = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """A bound ``q ** (log_q_value + correction)``."""

    q: int
    log_q_value: Fraction
    correction: float
    bound_kind: str
    params: dict = field(default_factory=dict)

    @property
    def log_q_total(self) -> float:
        return float(self.log_q_value) + self.correction

    @property
    def value(self) -> float:
        return float(self.q) ** self.log_q_total

    def holds_for(self, count: int, tol: float = LOG_TOL) -> bool:
        """True when ``count`` (an exact integer) is at least the bound."""
        if count <= 0:
            return False
        return self.log_q_total <= math.log(count, self.q) + tol

    def to_record(self) -> dict:
        return {
            "bound_kind": self.bound_kind,
            "q": self.q,
            "log_q_value": str(self.log_q_value),
            "correction": self.correction,
            "log_q_total": self.log_q_total,
            "value": self.value,
            "params": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.params.items()},
        }


# -- pigeonhole witness --

@dataclass(frozen=True)
class WitnessList:
    """Codewords ``ev(f_1 - f_i)`` all within ``radius`` of ``center = ev(f_1)``."""

    code: LrsCode = field(repr=False)
    center: BlockVector
    messages: np.ndarray = field(repr=False)
    radius: int
    source_size: int
    used_top_monomials: int

    @property
    def size(self) -> int:
        return len(self.messages)

    @property
    def guaranteed(self) -> Fraction:
        """``|S| / q^{m s}``, the size the pigeonhole argument promises."""
        return Fraction(self.source_size, self.code.tower.order ** self.used_top_monomials)

    @property
    def polys(self) -> list[SkewPoly]:
        return [SkewPoly(self.code.sigma, row) for row in self.messages.tolist()]

    def verify(self) -> bool:
        code = self.code
        if self.size < self.guaranteed:
            return False
        cws = encode_batch(code, self.messages)
        diff = code.tower.sub_arr(self.center.codes[None, :], cws)
        w = sum_rank_weights(code.tower, diff, code.ell, code.eta)
        distinct = len({tuple(r) for r in self.messages.tolist()}) == self.size
        return bool((w <= self.radius).all()) and distinct

    def to_record(self) -> dict:
        return {
            "radius": self.radius,
            "size": self.size,
            "source_size": str(self.source_size),
            "used_top_monomials": self.used_top_monomials,
            "guaranteed": str(self.guaranteed),
            "center": self.center.to_record(),
            "messages": [f.to_record()["coeffs"] for f in self.polys],
        }


def _as_coeff_array(code: LrsCode, S) -> np.ndarray:
    if isinstance(S, np.ndarray):
        arr = np.asarray(S, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] > code.n:
            raise DegreeTooLarge("polynomials in S must have degree < n")
        if arr.shape[1] < code.n:
            arr = np.pad(arr, ((0, 0), (0, code.n - arr.shape[1])))
        return arr
    rows = []
    for f in S:
        if f.sigma != code.sigma:
            raise RingMismatch("polynomial in S uses another automorphism")
        if f.degree >= code.n:
            raise DegreeTooLarge(f"degree {f.degree} >= n = {code.n}")
        rows.append(f.padded(code.n))
    return np.array(rows, dtype=np.int64).reshape(len(rows), code.n)


def pigeonhole_witness(code: LrsCode, S, tau: int) -> WitnessList:
    """Largest family of ``S`` agreeing on degrees ``k..n-1``, turned into a ball.

    ``S`` holds skew polynomials of degree < n (as :class:`SkewPoly` objects or
    coefficient rows) whose images all have weight at most ``tau``. Members of
    the largest class ``{f_1, ..., f_L}`` give codewords ``ev(f_1 - f_i)``, each
    at distance ``wt(ev(f_i)) <= tau`` from ``ev(f_1)``. Ties between classes
    go to the lexicographically smallest top-coefficient tuple, and ``f_1`` is
    the lexicographically smallest member of its class.
    """
    if tau >= code.d:
        raise RadiusNotLessThanD(f"tau={tau} must be below d={code.d}")
    F = _as_coeff_array(code, S)
    if len(F) == 0:
        raise ValueError("S is empty")
    t = code.tower
    w = sum_rank_weights(t, evaluate_batch(code, F), code.ell, code.eta)
    if (w > tau).any():
        bad = int(np.flatnonzero(w > tau)[0])
        raise WeightViolation(f"member {bad} of S has image weight {int(w[bad])} > tau={tau}")
    top = F[:, code.k:]
    used = int(top.any(axis=0).sum())
    if top.shape[1]:
        keys, inverse, counts = np.unique(top, axis=0, return_inverse=True, return_counts=True)
        cls = int(np.argmax(counts))
        members = F[inverse.reshape(-1) == cls]
    else:
        members = F
    members = members[np.lexsort(members.T[::-1])]
    f1 = members[0]
    msgs = t.sub_arr(f1[None, : code.k], members[:, : code.k])
    center = evaluate_batch(code, f1[None])[0]
    wl = WitnessList(
        code=code,
        center=BlockVector.from_codes(t, code.ell, code.eta, center),
        messages=msgs,
        radius=tau,
        source_size=len(F),
        used_top_monomials=used,
    )
    if not wl.verify():
        raise InvariantViolation("witness list failed its own re-verification")
    return wl


def dense_low_weight_set(code: LrsCode, tau: int, cap: int = DEFAULT_MAX_ENUM) -> np.ndarray:
    """Coefficient rows of every f with deg f < n and ``wt(ev(f)) <= tau``.

    Generated from the low-weight vectors through the inverse evaluation map.
    """
    t = code.tower
    V = low_weight_vectors(t, code.ell, code.eta, tau, 1, cap)
    Minv = t.mat_inverse(code.full_matrix)
    return t.matmul(V, Minv)


# -- the general list-size bound and derived radii --

def _log_gamma(q: int) -> float:
    return log_gamma_q(q)


def theorem1_bound(ell: int, eta: int, m: int, q: int, d: int, tau: int) -> BoundReport:
    """``q^{m + tau(m+eta) - tau^2/ell - m d} / U``.

    ``U = gamma_q^ell``, times ``q^{ell/4}`` when ``ell`` does not divide ``tau``.
    """
    if tau >= d:
        raise RadiusNotLessThanD(f"tau={tau} must be below d={d}")
    if tau < 0:
        raise ValueError("tau must be non-negative")
    exponent = m + Fraction(tau * (m + eta)) - Fraction(tau * tau, ell) - m * d
    correction = -ell * _log_gamma(q)
    if tau % ell:
        correction -= ell / 4
    return BoundReport(q, exponent, correction, "theorem1",
                       dict(ell=ell, eta=eta, m=m, q=q, d=d, tau=tau))


def lemma2_bound(t: int, ell: int, eta: int, m: int, q: int) -> BoundReport:
    """Lower bound on the number of vectors of sum-rank weight ``t``."""
    if t < 0 or t > ell * min(eta, m):
        from .errors import WeightTooLarge
        raise WeightTooLarge(f"weight {t} outside 0..{ell * min(eta, m)}")
    exponent = Fraction(t) * (eta + m - Fraction(t, ell))
    correction = -ell * _log_gamma(q)
    if t % ell:
        correction -= ell / 4
    return BoundReport(q, exponent, correction, "lemma2", dict(t=t, ell=ell, eta=eta, m=m, q=q))


def corollary1_radius(ell: int, m: int, n: int, d: int, q: int, eps: float) -> float:
    """Smallest real radius at which the general list-size exponent reaches ``eps*n/ell``.

    ``(ell m + n)/2 - sqrt(((ell m + n)/2)^2 - ell^2 (1/4 + log_q gamma_q)
    - ell m (d-1) - eps n)``.
    """
    half = (ell * m + n) / 2
    disc = half * half - ell * ell * (0.25 + _log_gamma(q)) - ell * m * (d - 1) - eps * n
    if disc < 0:
        raise NegativeDiscriminant(f"discriminant {disc} < 0: no radius achieves the target")
    return half - math.sqrt(disc)


def _dec(x) -> Decimal:
    return Decimal(str(x)) if not isinstance(x, Decimal) else x


def corollary2_radius(R, ell: int, n: int, eps) -> int:
    """Least multiple of ``ell`` strictly greater than ``n (1 - sqrt(R) + eps)``."""
    with localcontext() as ctx:
        ctx.prec = 60
        x = n * (1 - _dec(R).sqrt() + _dec(eps))
        return ell * (int((x / ell).to_integral_value(rounding="ROUND_FLOOR")) + 1)


def corollary3_params(R: float, a: float, q: int, eps: float) -> tuple[float, float, float]:
    """``(zeta, delta, b)`` with ``zeta = a^2 (1/4 + log_q gamma_q)``,
    ``delta = -eps^2 + 2 sqrt(R) eps - zeta`` and ``b = q^(delta/a)``.
    """
    zeta = a * a * (0.25 + _log_gamma(q))
    if zeta >= R:
        raise ZetaTooLarge(f"zeta={zeta} must be below R={R}")
    lo = math.sqrt(R) - math.sqrt(R - zeta)
    hi = math.sqrt(R) + math.sqrt(R - zeta)
    if eps <= lo:
        raise EpsilonTooSmall(f"eps={eps} must exceed sqrt(R) - sqrt(R - zeta) = {lo}")
    if eps >= hi:
        raise EpsilonTooLarge(f"eps={eps} must be below sqrt(R) + sqrt(R - zeta) = {hi}")
    delta = -eps * eps + 2 * math.sqrt(R) * eps - zeta
    return zeta, delta, float(q) ** (delta / a)


# -- sparse polynomials --

def build_structured_beta(tower: FieldTower, g: int, eta: int) -> list[FElem]:
    """``[alpha_1 gamma_1, ..., alpha_1 gamma_g, alpha_2 gamma_1, ..., alpha_{eta/g} gamma_g]``.

    ``gamma`` is the theta-power basis of F_{q^g} and ``alpha`` a prefix of the
    greedy F_{q^g}-basis of the whole field.
    """
    if g < 1 or tower.m % g or eta % g:
        raise NotADivisor(f"g={g} must divide m={tower.m} and eta={eta}")
    if eta > tower.m:
        raise PreconditionViolation(f"eta={eta} exceeds m={tower.m}")
    sb = subfield_basis(tower, g)
    alphas = sb.relative_basis[: eta // g]
    beta = [al * gm for al in alphas for gm in sb.theta_powers]
    if int(subfield_rank_codes(tower, np.array([b.code for b in beta]), 1)) != eta:
        raise IndependenceFailure("structured beta is not F_q-linearly independent")
    return beta


def twist_evaluators(a: Sequence[FElem], sigma: Automorphism, g: int) -> list[FElem]:
    """``a_i' = a_i sigma(a_i) ... sigma^{g-1}(a_i)``."""
    out = []
    for x in a:
        if x.is_zero():
            raise ZeroInput("evaluators must be nonzero")
        prod, cur = x.tower.one, x
        for _ in range(g):
            prod = prod * cur
            cur = sigma(cur)
        out.append(prod)
    return out


def lift_sparse(f: SkewPoly, sigma: Automorphism, g: int, n: int | None = None) -> SkewPoly:
    """``sum_i f_i y^i`` over ``sigma^g``  ->  ``sum_i f_i x^{g i}`` over ``sigma``."""
    if f.sigma != sigma.power(g):
        raise RingMismatch("f must live in the ring twisted by sigma^g")
    if n is not None and f.degree >= Fraction(n, g):
        raise DegreeTooLarge(f"degree {f.degree} >= n/g = {Fraction(n, g)}")
    codes = [0] * (g * (len(f.codes) - 1) + 1) if f.codes else []
    for i, c in enumerate(f.codes):
        codes[g * i] = c
    return SkewPoly(sigma, codes)


def lift_rows(F: np.ndarray, g: int, n: int) -> np.ndarray:
    out = np.zeros((len(F), n), dtype=np.int64)
    out[:, ::g] = F
    return out


@dataclass(frozen=True)
class SparseSetParams:
    """Evaluation pair with structured ``beta``, sparsity index ``g`` and radius ``tau``."""

    pair: EvalPair
    g: int
    tau: int

    @property
    def tower(self) -> FieldTower:
        return self.pair.tower

    @property
    def sigma(self) -> Automorphism:
        return self.pair.sigma

    @property
    def n(self) -> int:
        return self.pair.n

    def check(self) -> None:
        t, g, tau, pair = self.tower, self.g, self.tau, self.pair
        problems = []
        if g < 1 or t.m % g:
            problems.append(f"g={g} does not divide m={t.m}")
        if g >= 1 and tau % g:
            problems.append(f"g={g} does not divide tau={tau}")
        if tau % pair.ell:
            problems.append(f"ell={pair.ell} does not divide tau={tau}")
        if pair.eta != t.m:
            problems.append(f"eta={pair.eta} != m={t.m}")
        if not 0 <= tau <= self.n:
            problems.append(f"tau={tau} outside 0..n")
        if problems:
            raise PreconditionViolation("; ".join(problems))
        self.alpha  # noqa: B018 (validates the beta structure)

    @property
    def alpha(self) -> list[FElem]:
        """Recover ``alpha`` from ``beta = [alpha_j theta^i]``; checks the structure."""
        t, g = self.tower, self.g
        thetas = theta_power_codes(t, g)
        beta = self.pair.beta_codes
        alphas = beta[::g]
        for j, al in enumerate(alphas):
            for i, th in enumerate(thetas):
                if beta[j * g + i] != t.mul(int(al), th):
                    raise PreconditionViolation("beta is not of the form alpha_j * theta^i")
        if int(subfield_rank_codes(t, alphas, g)) != len(alphas):
            raise PreconditionViolation("alpha is not linearly independent over the subfield")
        return [FElem(t, int(c)) for c in alphas]

    @property
    def twisted_pair(self) -> EvalPair:
        """``(a', alpha)`` with respect to ``sigma^g``."""
        return EvalPair(self.sigma.power(self.g),
                        tuple(twist_evaluators(self.pair.a, self.sigma, self.g)),
                        tuple(self.alpha))


def _rows_to_polys(sigma: Automorphism, F: np.ndarray) -> list[SkewPoly]:
    return [SkewPoly(sigma, row) for row in F.tolist()]


def sparse_set_enumerate(params: SparseSetParams, as_array: bool = False,
                         cap: int = DEFAULT_MAX_ENUM):
    """All f of degree < n with support in gZ and image weight <= tau.

    Built through the sigma^g correspondence: every vector of F_{q^g}-sum-rank
    weight <= tau/g is pulled back through the (bijective) evaluation map of
    ``(a', alpha)`` and the result lifted to degrees ``0, g, 2g, ...``. Rows are
    sorted lexicographically.
    """
    params.check()
    t, g = params.tower, params.g
    tp = params.twisted_pair
    V = low_weight_vectors(t, tp.ell, tp.eta, params.tau // g, g, cap)
    Minv = t.mat_inverse(tp.matrix(tp.n))
    F = lift_rows(t.matmul(V, Minv), g, params.n)
    F = F[np.lexsort(F.T[::-1])]
    return F if as_array else _rows_to_polys(params.sigma, F)


def sparse_set_filter(params: SparseSetParams, cap: int = DEFAULT_MAX_ENUM) -> np.ndarray:
    """Same set as :func:`sparse_set_enumerate`, by filtering every sparse polynomial."""
    params.check()
    t, g, n = params.tower, params.g, params.n
    count = t.order ** (n // g)
    if count > cap:
        raise EnumerationTooLarge(f"{count} sparse polynomials exceed cap {cap}")
    M = params.pair.matrix(n)[::g]
    keep = []
    for F in iter_tuples(t.order, n // g):
        w = sum_rank_weights(t, t.matmul(F, M), params.pair.ell, params.pair.eta)
        keep.append(F[w <= params.tau])
    return lift_rows(np.concatenate(keep), g, n)


def weight_scaling_rows(F: np.ndarray, params: SparseSetParams) -> np.ndarray:
    """Per row of coefficients over sigma^g: does the lift scale the weight by g?"""
    t, g, n = params.tower, params.g, params.n
    tp = params.twisted_pair
    F = np.asarray(F, dtype=np.int64)
    lhs = sum_rank_weights(t, t.matmul(lift_rows(F, g, n), params.pair.matrix(n)),
                           params.pair.ell, params.pair.eta, 1)
    rhs = sum_rank_weights(t, t.matmul(F, tp.matrix(F.shape[1])), tp.ell, tp.eta, g)
    return lhs == g * rhs


def weight_scaling_check(f: SkewPoly, params: SparseSetParams) -> bool:
    """``wt_q(ev_{a,beta}(lift f)) == g * wt_{q^g}(ev_{a',alpha}(f))``."""
    n_small = params.n // params.g
    if f.degree >= n_small:
        raise DegreeTooLarge(f"degree {f.degree} >= n/g = {n_small}")
    if f.sigma != params.sigma.power(params.g):
        raise RingMismatch("f must live in the ring twisted by sigma^g")
    return bool(weight_scaling_rows(np.array([f.padded(n_small)]), params)[0])


def theorem2_bound(ell: int, eta: int, m: int, q: int, g: int, tau: int,
                   quarter_term: bool = False) -> BoundReport:
    """Lower bound ``q^{(tau/g)(m + eta - tau/ell)} gamma_{q^g}^{-ell}`` on the sparse-set size.

    With ``quarter_term`` the exponent also loses ``g*ell/4`` whenever ``ell``
    does not divide ``tau/g``, the case in which the sphere bound at radius
    ``tau/g`` carries its extra quarter term.
    """
    _check_sparse(ell, eta, m, g, tau)
    exponent = Fraction(tau, g) * (m + eta - Fraction(tau, ell))
    correction = -ell * log_gamma_q(q ** g, q)
    if quarter_term and (tau // g) % ell:
        correction -= g * ell / 4
    return BoundReport(q, exponent, correction, "theorem2",
                       dict(ell=ell, eta=eta, m=m, q=q, g=g, tau=tau, quarter_term=quarter_term))


def _check_sparse(ell: int, eta: int, m: int, g: int, tau: int) -> None:
    problems = []
    if g < 1 or m % g:
        problems.append(f"g={g} does not divide m={m}")
    if g >= 1 and tau % g:
        problems.append(f"g={g} does not divide tau={tau}")
    if tau % ell:
        problems.append(f"ell={ell} does not divide tau={tau}")
    if eta != m:
        problems.append(f"eta={eta} != m={m}")
    if problems:
        raise PreconditionViolation("; ".join(problems))


def corollary4_bound(ell: int, eta: int, m: int, q: int, g: int, tau: int,
                     k: int | None = None) -> BoundReport:
    """``q^{m + (tau/g)(eta - m - tau/ell)} gamma_{q^g}^{-ell}`` for ``k > n - 2 tau``."""
    _check_sparse(ell, eta, m, g, tau)
    n = ell * eta
    if k is not None and not k > n - 2 * tau:
        raise PreconditionViolation(f"need k > n - 2 tau = {n - 2 * tau}, got k={k}")
    exponent = m + Fraction(tau, g) * (eta - m - Fraction(tau, ell))
    correction = -ell * log_gamma_q(q ** g, q)
    return BoundReport(q, exponent, correction, "corollary4",
                       dict(ell=ell, eta=eta, m=m, q=q, g=g, tau=tau, k=k))


# -- structured code families --

@dataclass(frozen=True)
class FamilyParams:
    ell: int
    C: int
    D: int
    g: int

    def problems(self) -> list[str]:
        out = []
        if min(self.ell, self.C, self.D, self.g) < 1:
            out.append("ell, C, D, g must be positive")
        if self.C % self.ell:
            out.append(f"ell={self.ell} does not divide C={self.C}")
        if not self.C > max(self.D * self.D, 2 * self.D):
            out.append(f"C={self.C} must exceed max(D^2, 2D) = {max(self.D * self.D, 2 * self.D)}")
        if self.g % self.ell:
            out.append(f"ell={self.ell} does not divide g={self.g}")
        return out


@dataclass(frozen=True)
class FamilyInstance:
    family: FamilyParams
    q: int
    n: int
    k: int
    m: int
    eta: int
    tau: int

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def code(self) -> LrsCode:
        """The code with default evaluators and structured ``beta`` (needs q^m small)."""
        tower = build_tower(self.q, self.m)
        sigma = Automorphism(tower, 1)
        a = make_eval_pair(tower, sigma, self.family.ell, 1).a
        beta = build_structured_beta(tower, self.family.g, self.eta)
        return LrsCode(EvalPair(sigma, a, tuple(beta)), self.k)

    def sparse_params(self) -> SparseSetParams:
        return SparseSetParams(self.code().pair, self.family.g, self.tau)

    def bound(self) -> BoundReport:
        f = self.family
        r = corollary4_bound(f.ell, self.eta, self.m, self.q, f.g, self.tau, self.k)
        return BoundReport(r.q, r.log_q_value, r.correction, "theorem3",
                           dict(r.params, C=f.C, D=f.D))

    def to_record(self) -> dict:
        f = self.family
        return dict(ell=f.ell, C=f.C, D=f.D, g=f.g, q=self.q, n=self.n, k=self.k,
                    m=self.m, eta=self.eta, tau=self.tau, rate=str(self.rate))


def construction1_instance(fp: FamilyParams, q: int) -> FamilyInstance:
    """``n = C g``, ``k = n - 2 D g + 1``, ``m = eta = C g / ell``, ``tau = D g``."""
    problems = fp.problems()
    if not fp.ell < q:
        problems.append(f"need ell < q, got ell={fp.ell}, q={q}")
    if problems:
        raise InvariantViolation("; ".join(problems))
    n = fp.C * fp.g
    k = n - 2 * fp.D * fp.g + 1
    m = n // fp.ell
    tau = fp.D * fp.g
    # conditions needed downstream; they follow from the family constraints
    assert tau % fp.ell == 0 and m % fp.g == 0 and k > n - 2 * tau
    assert tau == (n - k) // 2 + 1
    return FamilyInstance(fp, q, n, k, m, m, tau)


def theorem3_exponent(fp: FamilyParams) -> Fraction:
    return Fraction(fp.g, fp.ell) * (fp.C - fp.D * fp.D)


# -- rate minimisation --

@dataclass(frozen=True)
class RateSearch:
    ell: int
    rate: Fraction
    C: int
    D: int
    last_C: int

    def to_row(self) -> dict:
        return {
            "ell": self.ell,
            "rate_numerator": self.rate.numerator,
            "rate_denominator": self.rate.denominator,
            "rate_decimal_6dp": f"{float(self.rate):.6f}",
            "C": self.C,
            "D": self.D,
        }


def _best_D(C: int) -> int:
    D = math.isqrt(C - 1)
    while D >= 1 and not C > max(D * D, 2 * D):
        D -= 1
    return D


def minimize_rate(ell: int) -> RateSearch:
    """Smallest limiting rate ``1 - 2D/C`` over the structured families with ``ell`` blocks.

    For each multiple ``C`` of ``ell`` the best ``D`` is the largest one with
    ``C > max(D^2, 2D)``. Because ``1 - 2D/C > 1 - 2/sqrt(C-1)`` and the right
    side increases with ``C``, the scan stops at the first ``C`` where
    ``1 - 2/sqrt(C-1)`` reaches the best rate so far. Ties keep the smaller
    ``C`` (and then ``D``).
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    best = None
    C = ell
    while True:
        if C >= 3:
            if best is not None:
                gap = 1 - best[0]
                # 1 - 2/sqrt(C-1) >= best  <=>  4/(C-1) <= (1-best)^2
                if gap <= 0 or Fraction(4, C - 1) <= gap * gap:
                    return RateSearch(ell, best[0], best[1], best[2], C)
            D = _best_D(C)
            if D >= 1:
                rate = 1 - Fraction(2 * D, C)
                if best is None or rate < best[0]:
                    best = (rate, C, D)
        C += ell


def table1(ells: Sequence[int]) -> list[dict]:
    return [minimize_rate(ell).to_row() for ell in ells]


def emit_region_data(R_grid: Sequence[float]) -> list[tuple[float, float, float]]:
    """Rows ``(R, 1 - sqrt(R), (1 - R)/2)``."""
    out = []
    for R in R_grid:
        R = float(R)
        if not 0 <= R <= 1:
            raise ValueError(f"rate {R} outside [0, 1]")
        out.append((R, 1 - math.sqrt(R), (1 - R) / 2))
    return out
