"""Batched Gaussian elimination over prime fields."""

from __future__ import annotations

import numpy as np


def _inverse_mod_p(x: np.ndarray, p: int) -> np.ndarray:
    """Elementwise inverse of nonzero residues via Fermat (p prime, p < 2**31)."""
    result = np.ones_like(x)
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rank_mod_p(mats, p: int) -> np.ndarray:
    """Rank over F_p of every matrix in a batch.

    ``mats`` has shape ``(..., r, c)`` with integer entries; the leading
    axes are flattened into a batch and restored on the result.
    """
    A = np.asarray(mats, dtype=np.int64) % p
    if A.ndim < 2:
        raise ValueError("expected at least a 2-d array")
    lead = A.shape[:-2]
    r, c = A.shape[-2:]
    if c > r:
        A = np.swapaxes(A, -1, -2)
        r, c = c, r
    A = A.reshape(-1, r, c).copy()
    N = A.shape[0]
    if N == 0 or r == 0 or c == 0:
        return np.zeros(lead, dtype=np.int64)

    pivot_row = np.zeros(N, dtype=np.int64)
    rows = np.arange(r)
    for col in range(c):
        mask = (A[:, :, col] != 0) & (rows[None, :] >= pivot_row[:, None])
        active = np.flatnonzero(mask.any(axis=1))
        if active.size == 0:
            continue
        piv = mask[active].argmax(axis=1)
        pr = pivot_row[active]
        sub = A[active]
        idx = np.arange(active.size)
        swap = sub[idx, piv].copy()
        sub[idx, piv] = sub[idx, pr]
        sub[idx, pr] = swap
        inv = _inverse_mod_p(sub[idx, pr, col], p)
        prow = (sub[idx, pr] * inv[:, None]) % p
        sub[idx, pr] = prow
        factors = sub[:, :, col].copy()
        factors[idx, pr] = 0
        sub = (sub - factors[:, :, None] * prow[:, None, :]) % p
        A[active] = sub
        pivot_row[active] += 1
    return pivot_row.reshape(lead)


def rank_of_matrix_mod_p(mat, p: int) -> int:
    return int(rank_mod_p(np.asarray(mat)[None], p)[0])
