"""Linearized Reed-Solomon codes: construction, encoding and exhaustive oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EnumerationTooLarge,
    InvalidCode,
    InvalidRadius,
    MessageDegreeTooLarge,
    RingMismatch,
)
from .gf import Automorphism, FieldTower, build_tower
from .skewpoly import EvalPair, SkewPoly, make_eval_pair
from .sumrank import BlockVector, sum_rank_weights

#: default cap on the number of items any exhaustive loop may visit
DEFAULT_MAX_ENUM = 1 << 20
_PAIR_CHUNK = 1 << 16


@dataclass(frozen=True)
class LrsCode:
    """The code ``{ev_{a,beta}(f) : deg f < k}``."""

    pair: EvalPair
    k: int

    @property
    def tower(self) -> FieldTower:
        return self.pair.tower

    @property
    def sigma(self) -> Automorphism:
        return self.pair.sigma

    @property
    def ell(self) -> int:
        return self.pair.ell

    @property
    def eta(self) -> int:
        return self.pair.eta

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def q(self) -> int:
        return self.sigma.fixed_field_order

    @property
    def d(self) -> int:
        """Designed minimum distance ``n - k + 1``."""
        return self.n - self.k + 1

    @property
    def num_codewords(self) -> int:
        return self.tower.order ** self.k

    @property
    def generator(self) -> np.ndarray:
        return self.pair.matrix(self.k)

    @property
    def full_matrix(self) -> np.ndarray:
        """Evaluation matrix on all polynomials of degree < n (invertible)."""
        return self.pair.matrix(self.n)

    def __repr__(self) -> str:
        t = self.tower
        return (f"LrsCode(p={t.p}, m={t.m}, s={self.sigma.s}, ell={self.ell}, "
                f"eta={self.eta}, n={self.n}, k={self.k})")


def make_code(p: int, m: int, ell: int, eta: int, k: int, s: int = 1,
              a: Sequence | None = None, beta: Sequence | None = None) -> LrsCode:
    """Build a code, filling in omitted ``a`` / ``beta`` with the default pair."""
    tower = build_tower(p, m)
    sigma = Automorphism(tower, s)
    if a is None or beta is None:
        default = make_eval_pair(tower, sigma, ell, eta)
        a = default.a if a is None else a
        beta = default.beta if beta is None else beta
    return LrsCode(EvalPair(sigma, tuple(a), tuple(beta)), k)


def validate_code(code: LrsCode) -> dict[str, bool]:
    """Re-check every code and evaluation-pair condition; failures are data."""
    t = code.tower
    checks = {
        "n = ell*eta": code.n == code.ell * code.eta,
        "1 <= k <= n": 1 <= code.k <= code.n,
        "eta <= m": code.eta <= t.m,
        "ell < q": code.ell < t.p,
        "gcd(s, m) = 1": math.gcd(code.sigma.s, t.m) == 1,
    }
    checks.update(code.pair.certify())
    return checks


def require_valid(code: LrsCode) -> LrsCode:
    failed = [k for k, ok in validate_code(code).items() if not ok]
    if failed:
        raise InvalidCode("invalid code: " + ", ".join(failed))
    return code


# -- code-spec records --

def code_from_spec(spec: dict) -> LrsCode:
    """Parse ``{p, m, s, ell, eta, k, a?, beta?}`` (coordinates low-to-high)."""
    try:
        p, m, ell, eta, k = (int(spec[key]) for key in ("p", "m", "ell", "eta", "k"))
    except KeyError as exc:
        raise InvalidCode(f"code spec is missing {exc.args[0]!r}") from None
    s = int(spec.get("s", 1))
    tower = build_tower(p, m)
    a = [tower.elem(list(c)) for c in spec["a"]] if spec.get("a") is not None else None
    beta = [tower.elem(list(c)) for c in spec["beta"]] if spec.get("beta") is not None else None
    if a is not None and len(a) != ell:
        raise InvalidCode(f"'a' has {len(a)} entries, expected ell={ell}")
    if beta is not None and len(beta) != eta:
        raise InvalidCode(f"'beta' has {len(beta)} entries, expected eta={eta}")
    return require_valid(make_code(p, m, ell, eta, k, s, a, beta))


def code_to_spec(code: LrsCode) -> dict:
    t = code.tower
    return {
        "p": t.p,
        "m": t.m,
        "s": code.sigma.s,
        "ell": code.ell,
        "eta": code.eta,
        "k": code.k,
        "a": [list(x.coeffs) for x in code.pair.a],
        "beta": [list(x.coeffs) for x in code.pair.beta],
    }


# -- encoding --

def encode(code: LrsCode, f: SkewPoly) -> BlockVector:
    if f.sigma != code.sigma:
        raise RingMismatch("message polynomial uses a different automorphism")
    if f.degree >= code.k:
        raise MessageDegreeTooLarge(f"degree {f.degree} >= k = {code.k}")
    row = encode_batch(code, np.array([f.padded(code.k)]))[0]
    return BlockVector.from_codes(code.tower, code.ell, code.eta, row)


def encode_batch(code: LrsCode, messages) -> np.ndarray:
    """Codewords of a batch of coefficient rows (N, k) as codes (N, n)."""
    messages = np.asarray(messages, dtype=np.int64)
    return code.tower.matmul(messages, code.generator[: messages.shape[1]])


def evaluate_batch(code: LrsCode, coeffs) -> np.ndarray:
    """Multi-point evaluation of coefficient rows of any length <= n."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    return code.tower.matmul(coeffs, code.full_matrix[: coeffs.shape[1]])


def iter_tuples(Q: int, length: int, chunk: int = _PAIR_CHUNK) -> Iterator[np.ndarray]:
    """All tuples over ``range(Q)`` in lexicographic order, in chunks.

    The first coordinate varies slowest.
    """
    total = Q ** length
    weights = Q ** np.arange(length - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // weights[None, :]) % Q


def _check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise EnumerationTooLarge(f"{count} {what} exceed the enumeration cap {cap}")


def min_distance_exhaustive(code: LrsCode, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """Minimum sum-rank weight over all nonzero codewords."""
    _check_cap(code.num_codewords, max_enum, "messages")
    best = None
    for msgs in iter_tuples(code.tower.order, code.k):
        msgs = msgs[msgs.any(axis=1)]
        if len(msgs) == 0:
            continue
        w = sum_rank_weights(code.tower, encode_batch(code, msgs), code.ell, code.eta)
        low = int(w.min())
        best = low if best is None else min(best, low)
    return best


# -- list-size oracle --

@dataclass(frozen=True)
class ListOracleResult:
    max_list: int
    argmax_center: BlockVector
    radius: int
    messages: np.ndarray = field(repr=False, compare=False)
    strategy: str = "cosets"
    centers_scanned: int = 0
    code: LrsCode | None = field(default=None, repr=False, compare=False)

    @property
    def codewords_in_ball(self) -> list[SkewPoly]:
        """Message polynomials whose codewords lie in the ball."""
        return [SkewPoly(self.code.sigma, row) for row in self.messages.tolist()]

    def verify(self, code: LrsCode | None = None) -> bool:
        """Recompute every listed codeword's distance to the centre."""
        code = code or self.code
        msgs = self.messages
        if len(msgs) != self.max_list:
            return False
        if len(msgs) == 0:
            return True
        cws = encode_batch(code, msgs)
        diff = code.tower.sub_arr(self.argmax_center.codes[None, :], cws)
        w = sum_rank_weights(code.tower, diff, code.ell, code.eta)
        return bool((w <= self.radius).all()) and len({tuple(r) for r in msgs.tolist()}) == len(msgs)

    def to_record(self) -> dict:
        return {
            "max_list": self.max_list,
            "radius": self.radius,
            "strategy": self.strategy,
            "centers_scanned": self.centers_scanned,
            "argmax_center": self.argmax_center.to_record(),
            "codewords_in_ball": [f.to_record() for f in self.codewords_in_ball],
        }


def coset_representatives(code: LrsCode, chunk: int = _PAIR_CHUNK) -> Iterator[np.ndarray]:
    """Images of the polynomials supported on degrees k..n-1 (one per coset)."""
    top = code.full_matrix[code.k:]
    if len(top) == 0:
        yield np.zeros((1, code.n), dtype=np.int64)
        return
    for coeffs in iter_tuples(code.tower.order, code.n - code.k, chunk):
        yield code.tower.matmul(coeffs, top)


def all_vectors(code: LrsCode, chunk: int = _PAIR_CHUNK) -> Iterator[np.ndarray]:
    yield from iter_tuples(code.tower.order, code.n, chunk)


def _all_codewords(code: LrsCode) -> tuple[np.ndarray, np.ndarray]:
    msgs = np.concatenate(list(iter_tuples(code.tower.order, code.k)))
    return msgs, encode_batch(code, msgs)


def _count_centers(code: LrsCode, strategy: str, centers) -> int:
    Q = code.tower.order
    if strategy == "cosets":
        return Q ** (code.n - code.k)
    if strategy == "all":
        return Q ** code.n
    return len(centers)


def list_size_profile(code: LrsCode, radii: Iterable[int], strategy: str = "cosets",
                      centers: Sequence[BlockVector] | None = None,
                      max_enum: int = DEFAULT_MAX_ENUM) -> dict[int, ListOracleResult]:
    """Largest number of codewords in a ball, for several radii in one scan.

    ``strategy`` is ``"cosets"`` (exact; one centre per coset of the code),
    ``"all"`` (exact; every vector is a centre) or ``"given"`` (the supplied
    ``centers``; a lower bound). Ties keep the first centre in scan order.
    """
    radii = sorted(set(int(r) for r in radii))
    for r in radii:
        if r < 0 or r > code.n:
            raise InvalidRadius(f"radius {r} outside 0..n = {code.n}")
    if strategy not in ("cosets", "all", "given"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "given" and centers is None:
        raise ValueError("strategy 'given' needs centers")
    _check_cap(code.num_codewords, max_enum, "codewords")
    n_centers = _count_centers(code, strategy, centers)
    _check_cap(n_centers, max_enum, "centers")

    t = code.tower
    msgs, cws = _all_codewords(code)
    per = max(1, _PAIR_CHUNK // len(cws))
    if strategy == "cosets":
        source = coset_representatives(code, per)
    elif strategy == "all":
        source = all_vectors(code, per)
    else:
        arr = np.array([c.codes for c in centers], dtype=np.int64)
        source = (arr[i:i + per] for i in range(0, len(arr), per))

    rad = np.array(radii)
    best = np.full(len(radii), -1, dtype=np.int64)
    best_center = [None] * len(radii)
    for chunk in source:
        for s in range(0, len(chunk), per):
            C = chunk[s:s + per]
            diff = t.sub_arr(C[:, None, :], cws[None, :, :])
            w = sum_rank_weights(t, diff.reshape(-1, code.n), code.ell, code.eta).reshape(len(C), len(cws))
            counts = (w[:, :, None] <= rad[None, None, :]).sum(axis=1)
            top = counts.max(axis=0)
            for j in np.flatnonzero(top > best):
                best[j] = top[j]
                best_center[j] = C[int(np.argmax(counts[:, j] == top[j]))].copy()

    out = {}
    for j, r in enumerate(radii):
        center = best_center[j]
        diff = t.sub_arr(center[None, :], cws)
        w = sum_rank_weights(t, diff, code.ell, code.eta)
        inside = msgs[w <= r]
        out[r] = ListOracleResult(
            max_list=int(best[j]),
            argmax_center=BlockVector.from_codes(t, code.ell, code.eta, center),
            radius=r,
            messages=inside,
            strategy=strategy,
            centers_scanned=n_centers,
            code=code,
        )
    return out


def list_size_oracle(code: LrsCode, tau: int, strategy: str = "cosets",
                     centers: Sequence[BlockVector] | None = None,
                     max_enum: int = DEFAULT_MAX_ENUM) -> ListOracleResult:
    """``max_r |C ∩ B_tau(r)|`` by exhaustive scan (see :func:`list_size_profile`)."""
    return list_size_profile(code, [tau], strategy, centers, max_enum)[int(tau)]
