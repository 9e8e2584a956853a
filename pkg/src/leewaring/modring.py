"""Vectors over Z/mZ and their two coordinate norms.

Coordinates are stored canonically in [0, m).  The two norms are the sum
of least residues (ONE) and the sum of distances to 0 on the m-cycle
(LEE).  Everything is exact integer arithmetic on immutable values, so
all operations are safe to call concurrently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class NormKind(enum.Enum):
    """Selector between the least-residue norm and the Lee norm."""

    ONE = "one"
    LEE = "lee"


def least_residue(x: int, m: int) -> int:
    """Canonical representative of x mod m, in {0, ..., m-1}."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    return x % m


def abs_least_residue(x: int, m: int) -> int:
    """min(c, m - c) for the canonical residue c: distance from x to 0."""
    c = least_residue(x, m)
    return min(c, m - c)


@dataclass(frozen=True)
class ModVec:
    """An r-dimensional vector over Z/mZ.

    Coordinates are reduced on construction, so two vectors compare equal
    iff they agree coordinatewise mod m.  The empty vector (r = 0) is
    legal with norm 0, and so is m = 1, where every coordinate is 0.
    """

    modulus: int
    coords: tuple[int, ...]

    def __init__(self, modulus: int, coords: Iterable[int] = ()):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coords", tuple(c % modulus for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __str__(self) -> str:
        return "(%s) mod %d" % (",".join(map(str, self.coords)), self.modulus)


def all_ones(m: int, r: int) -> ModVec:
    """The vector e = (1, 1, ..., 1) of length r over Z/mZ."""
    if r < 0:
        raise ValueError(f"dimension must be nonnegative, got {r}")
    return ModVec(m, (1,) * r)


def norm(v: ModVec, kind: NormKind) -> int:
    """Sum of least residues (ONE) or of cycle distances (LEE)."""
    if kind is NormKind.ONE:
        return sum(v.coords)
    m = v.modulus
    return sum(min(c, m - c) for c in v.coords)


def shift(v: ModVec, x: int) -> ModVec:
    """v + x*e: add x to every coordinate."""
    return ModVec(v.modulus, (c + x for c in v.coords))


def concat(u: ModVec, v: ModVec) -> ModVec:
    """Coordinates of u followed by those of v; both norms are additive."""
    if u.modulus != v.modulus:
        raise ValueError(f"modulus mismatch: {u.modulus} != {v.modulus}")
    return ModVec(u.modulus, u.coords + v.coords)


def double_embed(v: ModVec) -> ModVec:
    """Double every coordinate, Z/mZ -> Z/2mZ; the LEE norm doubles exactly."""
    return ModVec(2 * v.modulus, (2 * c for c in v.coords))


def halve(v: ModVec) -> ModVec:
    """Inverse of double_embed on even vectors; the LEE norm halves exactly."""
    if v.modulus % 2 != 0:
        raise ValueError(f"modulus must be even to halve, got {v.modulus}")
    if any(c % 2 for c in v.coords):
        raise ValueError("not an even vector")
    return ModVec(v.modulus // 2, (c // 2 for c in v.coords))
