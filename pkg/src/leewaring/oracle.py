"""Brute-force ground truth for the maximal admissible norm.

Shifting by the all-ones vector never changes a coset, so one
representative per coset (first coordinate pinned to 0) suffices: the
admissible norm of a coset is the minimum of the norm over its m shifts,
and the answer is the maximum of those minima.  Enumeration is vectorised
with exact integer numpy arrays in fixed-size chunks; chunk results are
reduced in index order, so the outcome is identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .admissible import is_admissible
from .errors import BudgetError
from .modring import ModVec, NormKind, norm

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 15


@dataclass(frozen=True)
class OracleResult:
    """Maximal admissible norm, a witness attaining it, and the coset count."""

    max_norm: int
    witness: ModVec
    enumerated: int


def _weights(m: int, kind: NormKind) -> np.ndarray:
    c = np.arange(m, dtype=np.int64)
    return c if kind is NormKind.ONE else np.minimum(c, m - c)


def _scan(m: int, r: int, wshift: np.ndarray, lo: int, hi: int) -> tuple[int, tuple[int, ...]]:
    """Best (min-over-shift) norm in coset indices [lo, hi) and its witness.

    The witness is the lexicographically smallest canonically shifted
    vector among the representatives attaining the chunk maximum.
    """
    idx = np.arange(lo, hi, dtype=np.int64)
    rows = np.zeros((idx.size, r), dtype=np.int64)
    for j in range(r - 1):  # column 0 stays 0: coset representatives
        rows[:, r - 1 - j] = (idx // m**j) % m
    norms = np.empty((idx.size, m), dtype=np.int64)
    for x in range(m):
        norms[:, x] = wshift[x][rows].sum(axis=1)
    mins = norms.min(axis=1)
    best = int(mins.max())
    witness: tuple[int, ...] | None = None
    for i in np.flatnonzero(mins == best):
        x0 = int(norms[i].argmin())  # argmin takes the smallest shift on ties
        w = tuple(int(c) for c in (rows[i] + x0) % m)
        if witness is None or w < witness:
            witness = w
    assert witness is not None
    return best, witness


def brute_max_admissible(
    m: int,
    r: int,
    kind: NormKind,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> OracleResult:
    """Exhaustive maximum of the admissible norm over (Z/mZ)^r with a witness.

    Enumerates the m^(r-1) cosets of the all-ones line; raises BudgetError
    (carrying the required count) when that exceeds the budget.
    """
    if m < 1 or r < 1:
        raise ValueError(f"m and r must be positive, got m={m}, r={r}")
    total = m ** (r - 1)
    if total > budget:
        raise BudgetError(total, budget, "coset enumeration")
    w = _weights(m, kind)
    wshift = np.stack([w[(np.arange(m) + x) % m] for x in range(m)])
    spans = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda s: _scan(m, r, wshift, *s), spans))
    else:
        chunks = [_scan(m, r, wshift, lo, hi) for lo, hi in spans]
    best, witness = chunks[0]
    for b, wit in chunks[1:]:
        if b > best:
            best, witness = b, wit
        elif b == best and wit < witness:
            witness = wit
    result = ModVec(m, witness)
    if not is_admissible(result, kind) or norm(result, kind) != best:
        raise AssertionError("oracle witness failed its self-check")
    return OracleResult(best, result, total)


def brute_covering_radius(
    m: int, r: int, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> int:
    """Covering radius of the line (Z/mZ)e in the Lee metric, by brute force."""
    return brute_max_admissible(m, r, NormKind.LEE, budget, threads).max_norm
