"""Finite-field towers F_p ⊂ F_{p^g} ⊂ F_{p^m}.

Elements are stored as integer codes ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
where ``(c_0, ..., c_{m-1})`` are coordinates in the polynomial basis
``1, z, ..., z^{m-1}`` modulo the tower's defining polynomial.

Two arithmetic routes coexist:

* reference arithmetic on coefficient lists (``ref_*``), table-free, used to
  build the tower and as a cross-check;
* exp/log and addition tables built lazily from the primitive element, used by
  the vectorised enumeration kernels.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DegreeZero,
    FieldTooLarge,
    NonPrimeP,
    NotADivisor,
    TowerMismatch,
    ZeroInput,
)
from .linalg import rank_mod_p

#: largest field order p**m the tower accepts (tables are O(p**m))
MAX_ORDER = 1 << 16

#: below this order a full addition table is kept for odd p
_ADD_TABLE_MAX = 1 << 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- reference polynomial arithmetic over F_p, coefficient lists low-to-high --

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod``."""
    r = _trim([x % p for x in a])
    dm = len(mod) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(mod):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # product() varies the last slot fastest: tuples come out in lexicographic
    # order with the constant term most significant.
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldTower:
    """The field F_{p^m} together with its subfields and Frobenius powers.

    Use :func:`build_tower` rather than constructing this directly; it picks
    the canonical modulus and primitive element and caches the result.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int], primitive: Sequence[int]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.order = p ** m
        self.primitive_code = self.encode(primitive)
        self._pw = [p ** i for i in range(m)]

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.m, self.modulus, self.primitive_code) == (
            other.p, other.m, other.modulus, other.primitive_code)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    # -- encoding --
    def encode(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"expected at most {self.m} coordinates, got {len(coeffs)}")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def to_record(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus_coeffs": list(self.modulus),
            "primitive_coeffs": list(self.decode(self.primitive_code)),
        }

    # -- reference (table-free) arithmetic on codes --
    def ref_add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def ref_mul(self, a: int, b: int) -> int:
        prod = poly_mul(_trim(list(self.decode(a))), _trim(list(self.decode(b))), self.p)
        return self.encode(poly_mod(prod, self.modulus, self.p))

    def ref_pow(self, a: int, e: int) -> int:
        result, base = self.encode([1]), a
        while e:
            if e & 1:
                result = self.ref_mul(result, base)
            base = self.ref_mul(base, base)
            e >>= 1
        return result

    # -- tables --
    @cached_property
    def digits(self) -> np.ndarray:
        """``digits[c]`` is the coordinate vector of code ``c``; shape (Q, m)."""
        codes = np.arange(self.order, dtype=np.int64)
        return np.stack([(codes // self.p ** i) % self.p for i in range(self.m)], axis=1)

    @cached_property
    def powvec(self) -> np.ndarray:
        return np.array(self._pw, dtype=np.int64)

    @cached_property
    def exp_table(self) -> np.ndarray:
        """``exp_table[i]`` = primitive**i for 0 <= i < Q-1."""
        p, m, Q = self.p, self.m, self.order
        # multiplication by the primitive element as an F_p-linear map on rows
        T = np.array([self.decode(self.ref_mul(self.encode([0] * i + [1]), self.primitive_code))
                      for i in range(m)], dtype=np.int64)
        E = np.zeros((Q - 1, m), dtype=np.int64)
        E[0, 0] = 1
        filled, Tb = 1, T
        while filled < Q - 1:
            end = min(2 * filled, Q - 1)
            E[filled:end] = (E[: end - filled] @ Tb) % p
            Tb = (Tb @ Tb) % p
            filled = end
        return E @ self.powvec

    @cached_property
    def log_table(self) -> np.ndarray:
        """Discrete log base the primitive element; ``log_table[0] = -1``."""
        log = np.full(self.order, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(self.order - 1, dtype=np.int64)
        return log

    @cached_property
    def neg_table(self) -> np.ndarray:
        return ((-self.digits) % self.p) @ self.powvec

    @cached_property
    def _add_table(self) -> np.ndarray | None:
        if self.p == 2 or self.order > _ADD_TABLE_MAX:
            return None
        D = self.digits
        return ((D[:, None, :] + D[None, :, :]) % self.p) @ self.powvec

    @cached_property
    def _exp_list(self) -> list[int]:
        return self.exp_table.tolist()

    @cached_property
    def _log_list(self) -> list[int]:
        return self.log_table.tolist()

    @lru_cache(maxsize=None)
    def frobenius_table(self, s: int) -> np.ndarray:
        """``table[c]`` = c ** (p ** s)."""
        s %= self.m
        e = pow(self.p, s, self.order - 1) if self.order > 2 else 1
        log = self.log_table
        out = np.zeros(self.order, dtype=np.int64)
        nz = log >= 0
        out[nz] = self.exp_table[(log[nz] * e) % (self.order - 1)]
        return out

    # -- scalar arithmetic on codes --
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        t = self._add_table
        if t is not None:
            return int(t[a, b])
        return self.ref_add(a, b)

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        L = self._log_list
        return self._exp_list[(L[a] + L[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp_list[(-self._log_list[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp_list[(self._log_list[a] * e) % (self.order - 1)]

    def frob(self, a: int, s: int) -> int:
        return int(self.frobenius_table(s % self.m)[a])

    # -- vectorised arithmetic on code arrays --
    def add_arr(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return x ^ y
        t = self._add_table
        if t is not None:
            return t[x, y]
        D = self.digits
        return ((D[x] + D[y]) % self.p) @ self.powvec

    def neg_arr(self, x) -> np.ndarray:
        return self.neg_table[np.asarray(x, dtype=np.int64)]

    def sub_arr(self, x, y) -> np.ndarray:
        return self.add_arr(x, self.neg_arr(y))

    def mul_arr(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        log = self.log_table
        lx, ly = log[x], log[y]
        out = self.exp_table[(lx + ly) % (self.order - 1)]
        return np.where((lx < 0) | (ly < 0), 0, out)

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over the field; ``A`` is (N, k), ``B`` is (k, n)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for i in range(A.shape[1]):
            out = self.add_arr(out, self.mul_arr(A[:, i][:, None], B[i][None, :]))
        return out

    def mat_inverse(self, M) -> np.ndarray:
        """Inverse of a square matrix over the field by Gauss-Jordan elimination."""
        M = [list(map(int, row)) for row in np.asarray(M)]
        n = len(M)
        A = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
        for col in range(n):
            piv = next((r for r in range(col, n) if A[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            A[col], A[piv] = A[piv], A[col]
            inv = self.inv(A[col][col])
            A[col] = [self.mul(inv, v) for v in A[col]]
            for r in range(n):
                if r != col and A[r][col]:
                    f = A[r][col]
                    A[r] = [self.sub(v, self.mul(f, w)) for v, w in zip(A[r], A[col])]
        return np.array([row[n:] for row in A], dtype=np.int64)

    # -- elements --
    def __call__(self, value) -> "FElem":
        return self.elem(value)

    def elem(self, value) -> "FElem":
        if isinstance(value, FElem):
            if value.tower != self:
                raise TowerMismatch("element belongs to another tower")
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.order:
                raise ValueError(f"code {v} out of range for a field of order {self.order}")
            return FElem(self, v)
        return FElem(self, self.encode(value))

    def embed(self, c: int) -> "FElem":
        """The prime-field scalar ``c mod p`` as an element."""
        return FElem(self, int(c) % self.p)

    @property
    def zero(self) -> "FElem":
        return FElem(self, 0)

    @property
    def one(self) -> "FElem":
        return FElem(self, 1)

    @property
    def z(self) -> "FElem":
        """Class of the indeterminate (equals ``-modulus[0]`` when m = 1)."""
        return FElem(self, self.encode(poly_mod([0, 1], self.modulus, self.p)))

    @property
    def primitive_element(self) -> "FElem":
        return FElem(self, self.primitive_code)

    def elements(self) -> Iterator["FElem"]:
        for c in range(self.order):
            yield FElem(self, c)

    def nonzero_elements(self) -> Iterator["FElem"]:
        for c in range(1, self.order):
            yield FElem(self, c)

    def polynomial_basis(self, count: int | None = None) -> list["FElem"]:
        count = self.m if count is None else count
        z = self.z
        out, cur = [], self.one
        for _ in range(count):
            out.append(cur)
            cur = cur * z
        return out


class FElem:
    """An element of a :class:`FieldTower` (immutable)."""

    __slots__ = ("tower", "code")

    def __init__(self, tower: FieldTower, code: int):
        self.tower = tower
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.tower.decode(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def _other(self, other) -> int:
        if isinstance(other, FElem):
            if other.tower is not self.tower and other.tower != self.tower:
                raise TowerMismatch("elements from different towers")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.tower.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.tower, self.tower.add(self.code, o))

    __radd__ = __add__

    def __neg__(self):
        return FElem(self.tower, self.tower.neg(self.code))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.tower, self.tower.sub(self.code, o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.tower, self.tower.mul(self.code, o))

    __rmul__ = __mul__

    def inverse(self) -> "FElem":
        if self.code == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FElem(self.tower, self.tower.inv(self.code))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.tower, self.tower.mul(self.code, self.tower.inv(o)))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FElem(self.tower, self.tower.pow(self.code, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FElem):
            return self.code == other.code and self.tower == other.tower
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.tower.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.code, self.tower.p, self.tower.m))

    def __lt__(self, other: "FElem") -> bool:
        return self.code < other.code

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                terms.append(mono if (c == 1 and mono) else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def build_tower(p: int, m: int) -> FieldTower:
    """Canonical tower for F_{p^m}.

    The modulus is the smallest monic irreducible of degree ``m`` with nonzero
    constant term, coefficient tuples compared lexicographically from the
    constant term upwards. The primitive element is the smallest element in the
    same order that generates the multiplicative group. Orders above
    ``MAX_ORDER`` are rejected.
    """
    if not is_prime(p):
        raise NonPrimeP(f"p={p} is not prime")
    if m < 1:
        raise DegreeZero(f"extension degree must be positive, got {m}")
    if p ** m > MAX_ORDER:
        raise FieldTooLarge(f"p^m = {p ** m} exceeds the cap {MAX_ORDER}")
    modulus = _smallest_irreducible(p, m)
    probe = FieldTower(p, m, modulus, [1])
    Q1 = p ** m - 1
    factors = prime_factors(Q1)
    one = probe.encode([1])
    for coeffs in itertools.product(range(p), repeat=m):
        c = probe.encode(coeffs)
        if c == 0:
            continue
        if all(probe.ref_pow(c, Q1 // r) != one for r in factors):
            return FieldTower(p, m, modulus, coeffs)
    raise AssertionError("no primitive element")  # pragma: no cover


@dataclass(frozen=True)
class Automorphism:
    """The Frobenius power ``a -> a^(p^s)`` on a tower."""

    tower: FieldTower
    s: int

    def __post_init__(self):
        object.__setattr__(self, "s", self.s % self.tower.m)

    @property
    def fixed_degree(self) -> int:
        """Degree over F_p of the fixed field, ``gcd(s, m)``."""
        return math.gcd(self.s, self.tower.m)

    @property
    def orbit_length(self) -> int:
        """``[F_{p^m} : fixed field]``."""
        return self.tower.m // self.fixed_degree

    @property
    def fixed_field_order(self) -> int:
        return self.tower.p ** self.fixed_degree

    def power(self, k: int) -> "Automorphism":
        return Automorphism(self.tower, self.s * k)

    @property
    def table(self) -> np.ndarray:
        return self.tower.frobenius_table(self.s)

    def __call__(self, a: FElem) -> FElem:
        return apply_aut(self, a)

    def __repr__(self) -> str:
        return f"Automorphism(p={self.tower.p}, m={self.tower.m}, s={self.s})"


def _check_tower(tower: FieldTower, a: FElem) -> None:
    if a.tower is not tower and a.tower != tower:
        raise TowerMismatch("element does not belong to the automorphism's tower")


def apply_aut(psi: Automorphism, a: FElem) -> FElem:
    _check_tower(psi.tower, a)
    return FElem(psi.tower, psi.tower.frob(a.code, psi.s))


def norm_code(psi: Automorphism, code: int) -> int:
    tower = psi.tower
    out, cur = 1, code
    for _ in range(psi.orbit_length):
        out = tower.mul(out, cur)
        cur = tower.frob(cur, psi.s)
    return out


def norm(psi: Automorphism, a: FElem) -> FElem:
    """``prod_{i < [F:F^psi]} psi^i(a)``, an element of the fixed field of ``psi``."""
    _check_tower(psi.tower, a)
    if a.is_zero():
        raise ZeroInput("norm of zero is undefined")
    return FElem(psi.tower, norm_code(psi, a.code))


def norm_table(psi: Automorphism) -> np.ndarray:
    """Norms of all codes (entry 0 is 0)."""
    tower = psi.tower
    out = np.ones(tower.order, dtype=np.int64)
    cur = np.arange(tower.order, dtype=np.int64)
    for _ in range(psi.orbit_length):
        out = tower.mul_arr(out, cur)
        cur = psi.table[cur]
    out[0] = 0
    return out


def conjugacy_classes(sigma: Automorphism) -> list[list[FElem]]:
    """Partition of F* by norm value.

    Classes are listed by their smallest member code; members ascend.
    """
    tower = sigma.tower
    nt = norm_table(sigma)
    classes: dict[int, list[FElem]] = {}
    for c in range(1, tower.order):
        classes.setdefault(int(nt[c]), []).append(FElem(tower, c))
    return sorted(classes.values(), key=lambda cls: cls[0].code)


def hilbert90_witness(sigma: Automorphism, a: FElem, b: FElem) -> FElem | None:
    """Some ``c`` with ``a = b * sigma(c) / c``, or ``None`` if ``a``, ``b`` are not conjugate.

    Exhaustive scan; intended for diagnostics at small field sizes.
    """
    _check_tower(sigma.tower, a)
    _check_tower(sigma.tower, b)
    if a.is_zero() or b.is_zero():
        raise ZeroInput("conjugacy is defined on nonzero elements")
    tower = sigma.tower
    for c in range(1, tower.order):
        if tower.mul(a.code, c) == tower.mul(b.code, tower.frob(c, sigma.s)):
            return FElem(tower, c)
    return None


# -- subfields --

def subfield_generator(tower: FieldTower, g: int) -> int:
    """Code of ``theta = primitive^((Q-1)/(p^g-1))``, a generator of F_{p^g}*."""
    if g < 1 or tower.m % g:
        raise NotADivisor(f"g={g} does not divide m={tower.m}")
    return tower.pow(tower.primitive_code, (tower.order - 1) // (tower.p ** g - 1))


def subfield_elements(tower: FieldTower, g: int) -> np.ndarray:
    """All codes of F_{p^g} inside the tower, ascending."""
    theta = subfield_generator(tower, g)
    els = {0}
    cur = 1
    for _ in range(tower.p ** g - 1):
        els.add(cur)
        cur = tower.mul(cur, theta)
    return np.array(sorted(els), dtype=np.int64)


def theta_power_codes(tower: FieldTower, g: int) -> list[int]:
    theta = subfield_generator(tower, g)
    return [tower.pow(theta, j) for j in range(g)]


def closure_digits(tower: FieldTower, codes, g: int) -> np.ndarray:
    """F_p coordinate rows of ``theta^j * x`` for ``j < g`` and every ``x``.

    ``codes`` has shape (..., r); the result has shape (..., r*g, m). Its F_p
    rank is ``g`` times the F_{p^g}-rank of the entries.
    """
    codes = np.asarray(codes, dtype=np.int64)
    if g == 1:
        return tower.digits[codes]
    thetas = theta_power_codes(tower, g)
    parts = [tower.mul_arr(codes, t) for t in thetas]
    stacked = np.concatenate(parts, axis=-1)
    return tower.digits[stacked]


def subfield_rank_codes(tower: FieldTower, codes, g: int = 1) -> np.ndarray:
    """F_{p^g}-rank of the span of each row of ``codes`` (shape (..., r))."""
    if g < 1 or tower.m % g:
        raise NotADivisor(f"g={g} does not divide m={tower.m}")
    return rank_mod_p(closure_digits(tower, codes, g), tower.p) // g


@dataclass(frozen=True)
class SubfieldBasis:
    g: int
    theta_powers: tuple[FElem, ...]
    relative_basis: tuple[FElem, ...]


def subfield_basis(tower: FieldTower, g: int) -> SubfieldBasis:
    """F_p-basis ``theta^0..theta^{g-1}`` of F_{p^g} and an F_{p^g}-basis of the tower.

    The relative basis is taken greedily from ``1, z, z^2, ...``.
    """
    if g < 1 or tower.m % g:
        raise NotADivisor(f"g={g} does not divide m={tower.m}")
    thetas = tuple(FElem(tower, c) for c in theta_power_codes(tower, g))
    chosen: list[int] = []
    for zc in (e.code for e in tower.polynomial_basis()):
        trial = chosen + [zc]
        if int(subfield_rank_codes(tower, np.array(trial), g)) == len(trial):
            chosen = trial
        if len(chosen) == tower.m // g:
            break
    return SubfieldBasis(g, thetas, tuple(FElem(tower, c) for c in chosen))


def as_elements(tower: FieldTower, values: Iterable) -> list[FElem]:
    return [tower.elem(v) for v in values]
