"""Sum-rank weights over intermediate subfields, and rank/sphere counting."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    EnumerationTooLarge,
    NotADivisor,
    RankTooLarge,
    ShapeMismatch,
    TowerMismatch,
    WeightTooLarge,
)
from .gf import FElem, FieldTower, subfield_elements, subfield_rank_codes

#: block rank tables are precomputed when (field order)**eta stays below this
_RANK_TABLE_MAX = 1 << 18
_CHUNK = 1 << 15


@dataclass(frozen=True)
class BlockVector:
    """A vector of length ``ell * eta`` split into ``ell`` blocks of length ``eta``."""

    tower: FieldTower
    ell: int
    eta: int
    data: tuple[FElem, ...]

    def __post_init__(self):
        data = tuple(self.tower.elem(x) for x in self.data)
        object.__setattr__(self, "data", data)
        if len(data) != self.ell * self.eta:
            raise ShapeMismatch(f"length {len(data)} != ell*eta = {self.ell * self.eta}")

    @classmethod
    def from_codes(cls, tower: FieldTower, ell: int, eta: int, codes) -> "BlockVector":
        return cls(tower, ell, eta, tuple(FElem(tower, int(c)) for c in codes))

    @classmethod
    def zeros(cls, tower: FieldTower, ell: int, eta: int) -> "BlockVector":
        return cls.from_codes(tower, ell, eta, [0] * (ell * eta))

    @property
    def n(self) -> int:
        return self.ell * self.eta

    @property
    def codes(self) -> np.ndarray:
        return np.array([x.code for x in self.data], dtype=np.int64)

    def blocks(self) -> list[tuple[FElem, ...]]:
        return [self.data[i * self.eta:(i + 1) * self.eta] for i in range(self.ell)]

    def _check(self, other: "BlockVector") -> None:
        if (self.ell, self.eta) != (other.ell, other.eta):
            raise ShapeMismatch("block vectors of different shapes")
        if self.tower != other.tower:
            raise TowerMismatch("block vectors over different fields")

    def __add__(self, other: "BlockVector") -> "BlockVector":
        self._check(other)
        return BlockVector.from_codes(self.tower, self.ell, self.eta,
                                      self.tower.add_arr(self.codes, other.codes))

    def __sub__(self, other: "BlockVector") -> "BlockVector":
        self._check(other)
        return BlockVector.from_codes(self.tower, self.ell, self.eta,
                                      self.tower.sub_arr(self.codes, other.codes))

    def __neg__(self) -> "BlockVector":
        return BlockVector.from_codes(self.tower, self.ell, self.eta, self.tower.neg_arr(self.codes))

    def to_record(self) -> list[list[int]]:
        return [list(x.coeffs) for x in self.data]


def rank_over_subfield(v: Sequence[FElem], g: int = 1) -> int:
    """Dimension over F_{q^g} of the F_{q^g}-span of the entries of ``v``."""
    v = list(v)
    if not v:
        return 0
    tower = v[0].tower
    return int(subfield_rank_codes(tower, np.array([tower.elem(x).code for x in v]), g))


@lru_cache(maxsize=64)
def _block_rank_table(tower: FieldTower, eta: int, g: int) -> np.ndarray | None:
    Q = tower.order
    if Q ** eta > _RANK_TABLE_MAX:
        return None
    idx = np.arange(Q ** eta, dtype=np.int64)
    blocks = np.stack([(idx // Q ** j) % Q for j in range(eta)], axis=1)
    out = np.empty(len(idx), dtype=np.int64)
    for s in range(0, len(idx), _CHUNK):
        out[s:s + _CHUNK] = subfield_rank_codes(tower, blocks[s:s + _CHUNK], g)
    return out


def block_ranks(tower: FieldTower, codes, ell: int, eta: int, g: int = 1) -> np.ndarray:
    """Per-block F_{q^g}-ranks of a batch of vectors; ``codes`` is (N, ell*eta)."""
    if g < 1 or tower.m % g:
        raise NotADivisor(f"g={g} does not divide m={tower.m}")
    codes = np.asarray(codes, dtype=np.int64)
    if codes.shape[-1] != ell * eta:
        raise ShapeMismatch(f"vectors of length {codes.shape[-1]} != ell*eta = {ell * eta}")
    lead = codes.shape[:-1]
    blocks = codes.reshape(-1, ell, eta)
    table = _block_rank_table(tower, eta, g)
    if table is not None:
        weights = tower.order ** np.arange(eta, dtype=np.int64)
        out = table[(blocks * weights).sum(axis=-1)]
    else:
        out = np.empty(blocks.shape[:2], dtype=np.int64)
        for s in range(0, len(blocks), _CHUNK):
            out[s:s + _CHUNK] = subfield_rank_codes(tower, blocks[s:s + _CHUNK], g)
    return out.reshape(lead + (ell,))


def sum_rank_weights(tower: FieldTower, codes, ell: int, eta: int, g: int = 1) -> np.ndarray:
    """Vectorised sum-rank weight over F_{q^g} of every row of ``codes``."""
    return block_ranks(tower, codes, ell, eta, g).sum(axis=-1)


def sum_rank_weight(x: BlockVector, g: int = 1) -> int:
    return int(sum_rank_weights(x.tower, x.codes[None], x.ell, x.eta, g)[0])


def sum_rank_dist(x: BlockVector, y: BlockVector) -> int:
    x._check(y)
    return sum_rank_weight(x - y, 1)


# -- counting --

def count_rank_matrices(m: int, eta: int, t: int, q: int) -> int:
    """Number of ``m x eta`` matrices over F_q of rank ``t``.

    ``prod_{i<t} (q^m - q^i)(q^eta - q^i) / (q^t - q^i)``, which vanishes for
    ``min(m, eta) < t <= max(m, eta)``. Larger ``t`` is rejected.
    """
    if t < 0 or t > max(m, eta):
        raise RankTooLarge(f"rank {t} outside 0..max(m, eta) = {max(m, eta)}")
    if t > min(m, eta):
        return 0
    num, den = 1, 1
    for i in range(t):
        num *= (q ** m - q ** i) * (q ** eta - q ** i)
        den *= q ** t - q ** i
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def gamma_q(q: int) -> float:
    """``prod_{i>=1} (1 - q^-i)^-1``, truncated once ``q^-i < 1e-18``."""
    prod, i = 1.0, 1
    while True:
        x = float(q) ** -i
        if x < 1e-18:
            return prod
        prod /= 1.0 - x
        i += 1


def log_gamma_q(q: int, base: int | None = None) -> float:
    return math.log(gamma_q(q), q if base is None else base)


@dataclass(frozen=True)
class SphereCount:
    t: int
    ell: int
    eta: int
    m: int
    q: int
    exact: int

    @property
    def log_q(self) -> float:
        return math.log(self.exact, self.q) if self.exact else -math.inf


def _check_weight(t: int, ell: int, eta: int, m: int) -> None:
    if t < 0 or t > ell * min(eta, m):
        raise WeightTooLarge(f"weight {t} outside 0..ell*min(eta, m) = {ell * min(eta, m)}")


def sphere_size(t: int, ell: int, eta: int, m: int, q: int) -> SphereCount:
    """Number of vectors in F_{q^m}^{ell*eta} of ell-sum-rank weight ``t``.

    Sum over compositions ``t_1 + ... + t_ell = t`` (parts capped at
    ``min(eta, m)``) of ``prod_i count_rank_matrices(m, eta, t_i)``; evaluated
    by convolving the per-block rank distribution.
    """
    _check_weight(t, ell, eta, m)
    return SphereCount(t, ell, eta, m, q, sphere_sizes(ell, eta, m, q)[t])


@lru_cache(maxsize=256)
def sphere_sizes(ell: int, eta: int, m: int, q: int) -> tuple[int, ...]:
    """``sphere_size(t)`` for every ``t = 0 .. ell*min(eta, m)``."""
    r = min(eta, m)
    block = [count_rank_matrices(m, eta, t, q) for t in range(r + 1)]
    dist = [1]
    for _ in range(ell):
        new = [0] * (len(dist) + r)
        for i, x in enumerate(dist):
            if x:
                for j, y in enumerate(block):
                    new[i + j] += x * y
        dist = new
    return tuple(dist)


def sphere_lower_bound(t: int, ell: int, eta: int, m: int, q: int) -> float:
    """log_q of the lower bound on the sphere size.

    ``t(eta + m - t/ell) - ell*log_q(gamma_q)``, less a further ``ell/4``
    when ``ell`` does not divide ``t``.
    """
    _check_weight(t, ell, eta, m)
    value = float(Fraction(t) * (eta + m - Fraction(t, ell))) - ell * log_gamma_q(q)
    if t % ell:
        value -= ell / 4
    return value


# -- constructive enumeration of low-weight vectors --

def _rref_matrices(K: np.ndarray, r: int, eta: int) -> np.ndarray:
    """All r x eta reduced row echelon matrices of rank r over the subfield ``K``."""
    out = []
    for pivots in itertools.combinations(range(eta), r):
        free = [(t, j) for t in range(r) for j in range(pivots[t] + 1, eta) if j not in pivots]
        for vals in itertools.product(K.tolist(), repeat=len(free)):
            L = np.zeros((r, eta), dtype=np.int64)
            for t, pj in enumerate(pivots):
                L[t, pj] = 1
            for (t, j), v in zip(free, vals):
                L[t, j] = v
            out.append(L)
    if not out:
        return np.zeros((0, r, eta), dtype=np.int64)
    return np.stack(out)


def _independent_tuples(tower: FieldTower, r: int, g: int, cap: int) -> np.ndarray:
    Q = tower.order
    if Q ** r > cap:
        raise EnumerationTooLarge(f"{Q}^{r} candidate spanning tuples exceed cap {cap}")
    idx = np.arange(Q ** r, dtype=np.int64)
    U = np.stack([(idx // Q ** (r - 1 - j)) % Q for j in range(r)], axis=1)
    keep = np.empty(len(U), dtype=bool)
    for s in range(0, len(U), _CHUNK):
        keep[s:s + _CHUNK] = subfield_rank_codes(tower, U[s:s + _CHUNK], g) == r
    return U[keep]


def blocks_of_rank(tower: FieldTower, eta: int, r: int, g: int = 1,
                   cap: int = 1 << 22) -> np.ndarray:
    """All blocks in F_{q^m}^eta of F_{q^g}-rank exactly ``r``, shape (count, eta).

    Each such block factors uniquely as ``u @ L`` with ``L`` in reduced row
    echelon form over F_{q^g} and ``u`` an F_{q^g}-independent r-tuple.
    """
    if r == 0:
        return np.zeros((1, eta), dtype=np.int64)
    K = subfield_elements(tower, g)
    L = _rref_matrices(K, r, eta)
    U = _independent_tuples(tower, r, g, cap)
    if len(U) * len(L) > cap:
        raise EnumerationTooLarge(f"{len(U) * len(L)} blocks of rank {r} exceed cap {cap}")
    out = np.zeros((len(U), len(L), eta), dtype=np.int64)
    for t in range(r):
        out = tower.add_arr(out, tower.mul_arr(U[:, None, t, None], L[None, :, t, :]))
    return out.reshape(-1, eta)


def low_weight_vectors(tower: FieldTower, ell: int, eta: int, max_weight: int,
                       g: int = 1, cap: int = 1 << 20) -> np.ndarray:
    """Every vector of F_{q^g}-sum-rank weight at most ``max_weight``.

    Rows are grouped by weight, then by the per-block rank composition.
    The total size is checked against ``cap`` before anything is built.
    """
    if g < 1 or tower.m % g:
        raise NotADivisor(f"g={g} does not divide m={tower.m}")
    qg, mg = tower.p ** g, tower.m // g
    rmax = min(eta, mg)
    max_weight = min(max_weight, ell * rmax)
    sizes = sphere_sizes(ell, eta, mg, qg)
    total = sum(sizes[: max_weight + 1])
    if total > cap:
        raise EnumerationTooLarge(f"{total} vectors of weight <= {max_weight} exceed cap {cap}")
    by_rank = [blocks_of_rank(tower, eta, r, g, cap) for r in range(min(rmax, max_weight) + 1)]
    # layer[w] holds all prefixes (over the blocks so far) of weight exactly w
    layer = {0: np.zeros((1, 0), dtype=np.int64)}
    for _ in range(ell):
        new: dict[int, list[np.ndarray]] = {}
        for w, prefix in sorted(layer.items()):
            for r, B in enumerate(by_rank):
                if w + r > max_weight:
                    break
                combo = np.concatenate([
                    np.repeat(prefix, len(B), axis=0),
                    np.tile(B, (len(prefix), 1)),
                ], axis=1)
                new.setdefault(w + r, []).append(combo)
        layer = {w: np.concatenate(parts) for w, parts in new.items()}
    out = np.concatenate([layer[w] for w in sorted(layer)])
    assert len(out) == total
    return out
