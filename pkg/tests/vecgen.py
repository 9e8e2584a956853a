"""Seeded random generators shared by the test modules."""

import random

from leewaring import ModVec


def random_vec(rng: random.Random, m: int, r: int) -> ModVec:
    return ModVec(m, tuple(rng.randrange(m) for _ in range(r)))


def random_balanced(rng: random.Random, m: int, r: int) -> ModVec:
    """Random vector satisfying the interleaved balanced chain (m even, r odd)."""
    assert m % 2 == 0 and r % 2 == 1
    half = m // 2
    chain = sorted(rng.randrange(half) for _ in range(r - 1))
    chain.insert(0, 0)
    return ModVec(m, tuple(c + (half if i % 2 == 0 else 0) for i, c in enumerate(chain, start=1)))
