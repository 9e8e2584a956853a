"""Admissibility and the shape of norm sequences.

A vector is admissible when no shift by a multiple of the all-ones vector
lowers its norm, i.e. its norm is minimal within its coset of the
all-ones line.  The norm sequence of v lists ||v + x*e|| for all x; its
strict local extrema (with plateaus, read cyclically) drive the balanced
vector constructions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .modring import ModVec, NormKind, norm, shift


def norm_sequence(v: ModVec, kind: NormKind) -> list[int]:
    """All norms ||v + x*e|| for x = 0, ..., m-1."""
    return [norm(shift(v, x), kind) for x in range(v.modulus)]


def is_admissible(v: ModVec, kind: NormKind) -> bool:
    """True iff entry 0 of the norm sequence is a global minimum."""
    n0 = norm(v, kind)
    for x in range(1, v.modulus):
        if norm(shift(v, x), kind) < n0:
            return False
    return True


def canonical_shift(v: ModVec, kind: NormKind) -> tuple[int, ModVec]:
    """Smallest x minimising ||v + x*e||, with the shifted (admissible) vector.

    Ties break towards the smallest shift so results are reproducible.
    """
    seq = norm_sequence(v, kind)
    x = seq.index(min(seq))
    return x, shift(v, x)


class ExtremumKind(enum.Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class Extremum:
    """A strict local maximum or minimum plateau of a cyclic sequence.

    index is the first position of the plateau (entered by a strict step),
    plateau its length; 1 <= plateau <= len(seq) - 1.
    """

    index: int
    kind: ExtremumKind
    plateau: int


def extremal_values(seq: Sequence[int]) -> list[Extremum]:
    """Strict local maxima and minima of a cyclic sequence.

    A plateau at x of length c is a maximum when seq[x-1] < seq[x] and
    seq[x+c] < seq[x] (indices mod len), a minimum symmetrically.  The
    constant sequence has no extrema.  Results are ordered by index, and
    maxima and minima alternate cyclically.
    """
    m = len(seq)
    out: list[Extremum] = []
    if m == 0 or all(a == seq[0] for a in seq):
        return out
    for x in range(m):
        here = seq[x]
        prev = seq[x - 1]
        if prev == here:
            continue  # inside a plateau, not its entry point
        c = 1
        while seq[(x + c) % m] == here:
            c += 1
        nxt = seq[(x + c) % m]
        if prev < here and nxt < here:
            out.append(Extremum(x, ExtremumKind.MAX, c))
        elif prev > here and nxt > here:
            out.append(Extremum(x, ExtremumKind.MIN, c))
    return out


def is_balanced(v: ModVec) -> bool:
    """Whether 0 = v1 <= v2 - m/2 <= v3 <= ... <= v(r-1) - m/2 <= vr < m/2.

    Needs m even and r odd.  Odd positions carry values in [0, m/2), even
    positions values in [m/2, m), and the offsets interleave into a single
    non-decreasing chain; such vectors have norm sequences of slope +-1.
    """
    m, r = v.modulus, len(v)
    if m % 2 != 0:
        raise ValueError(f"balancedness needs an even modulus, got {m}")
    if r % 2 != 1:
        raise ValueError(f"balancedness needs an odd dimension, got {r}")
    half = m // 2
    chain = [c - (half if i % 2 == 0 else 0) for i, c in enumerate(v.coords, start=1)]
    if chain[0] != 0 or chain[-1] >= half:
        return False
    return all(a <= b for a, b in zip(chain, chain[1:]))


def m_sequence(v: ModVec) -> list[int]:
    """Norms of a balanced vector at the shifts where its norm sequence can bend.

    Entry 0 is ||v||; entry i >= 1 evaluates the norm after shifting by
    m/2 - c (i odd) or m - c (i even), where c is coordinate r-i+1.  These
    r+1 values include every extremal value of the norm sequence over the
    shifts 0..m/2, and their absolute consecutive differences sum to m/2.
    """
    if not is_balanced(v):
        raise ValueError("m_sequence needs a balanced vector")
    m, r = v.modulus, len(v)
    half = m // 2
    out = [norm(v, NormKind.LEE)]
    for i in range(1, r + 1):
        c = v.coords[r - i]
        x = half - c if i % 2 == 1 else m - c
        out.append(norm(shift(v, x), NormKind.LEE))
    return out
