"""Exact Waring numbers of small finite fields by breadth-first sumsets.

F_{p^n} is represented concretely as Z/pZ[x] modulo a monic irreducible
polynomial, elements being coefficient tuples in the power basis
(constant coefficient first).  For primes r with p a primitive root
modulo r, the polynomial 1 + x + ... + x^{r-1} is irreducible over Z/pZ
and the class xi of x is a primitive r-th root of unity; on the basis
1, xi, ..., xi^{r-2} the only relation is that all r powers of xi sum to
0, which identifies coefficient vectors up to the all-ones line and ties
minimal power-sum representations to minimal-in-coset residue vectors.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .errors import BudgetError
from .modring import ModVec

DEFAULT_FIELD_BUDGET = 2 * 10**6


def _is_prime(n: int) -> bool:
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


def _poly_rem(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of num modulo a monic den, coefficients mod p, constant first."""
    out = [c % p for c in num]
    dn = len(den) - 1
    for i in range(len(out) - 1, dn - 1, -1):
        t = out[i]
        if t:
            for j in range(dn + 1):
                out[i - dn + j] = (out[i - dn + j] - t * den[j]) % p
    return tuple(out[:dn])


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(poly) - 1
    if n < 1 or poly[-1] != 1:
        return False
    for d in range(1, n // 2 + 1):
        for enc in range(p**d):
            den = tuple((enc // p**i) % p for i in range(d)) + (1,)
            if not any(_poly_rem(poly, den, p)):
                return False
    return True


def find_irreducible(p: int, n: int, budget: int = DEFAULT_FIELD_BUDGET) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n over Z/pZ, constant-first coeffs.

    Free coefficients are scanned in ascending base-p order with the
    constant term as the least significant digit, so the result is
    deterministic (x for n = 1, x^2 + 1 for p = 3, x^2 + 2 for p = 5, ...).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if p**n > budget:
        raise BudgetError(p**n, budget, "field size")
    for enc in range(p**n):
        poly = tuple((enc // p**i) % p for i in range(n)) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise RuntimeError(f"no irreducible of degree {n} over Z/{p}Z")  # unreachable


@dataclass(frozen=True)
class FqField:
    """F_{p^n} as Z/pZ[x] modulo a monic irreducible (constant-first coeffs).

    cyclotomic_order is set to r when the modulus is 1 + x + ... + x^{r-1},
    in which case gen() is a primitive r-th root of unity.
    """

    p: int
    modulus: tuple[int, ...]
    cyclotomic_order: int | None = None

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        reduced = tuple(c % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", reduced)
        if len(reduced) < 2 or reduced[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not _is_irreducible(reduced, self.p):
            raise ValueError(f"modulus {reduced} is reducible over Z/{self.p}Z")

    @property
    def n(self) -> int:
        return len(self.modulus) - 1

    @property
    def q(self) -> int:
        return self.p**self.n

    def element(self, coeffs) -> FqElem:
        c = tuple(x % self.p for x in coeffs)
        if len(c) > self.n:
            raise ValueError(f"too many coefficients for degree {self.n}")
        return FqElem(self, c + (0,) * (self.n - len(c)))

    def zero(self) -> FqElem:
        return FqElem(self, (0,) * self.n)

    def one(self) -> FqElem:
        return self.element((1,))

    def gen(self) -> FqElem:
        """The residue class of x (equals -modulus[0] when n = 1)."""
        if self.n == 1:
            return self.element((-self.modulus[0],))
        return self.element((0, 1))

    def from_rank(self, t: int) -> FqElem:
        """Element with coefficient digits of t in base p (constant first)."""
        if not 0 <= t < self.q:
            raise ValueError(f"rank {t} outside [0, {self.q})")
        return FqElem(self, tuple((t // self.p**i) % self.p for i in range(self.n)))

    def rank(self, a: FqElem) -> int:
        return sum(c * self.p**i for i, c in enumerate(a.coeffs))

    def elements(self):
        """All q elements, in rank order."""
        for t in range(self.q):
            yield self.from_rank(t)


@dataclass(frozen=True)
class FqElem:
    """An element of FqField: n coefficients in [0, p), power basis."""

    field: FqField
    coeffs: tuple[int, ...]

    def _other(self, other: FqElem) -> FqElem:
        if not isinstance(other, FqElem) or other.field != self.field:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other: FqElem) -> FqElem:
        other = self._other(other)
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FqElem:
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other: FqElem) -> FqElem:
        return self + (-self._other(other))

    def __mul__(self, other: FqElem) -> FqElem:
        other = self._other(other)
        f = self.field
        p, n = f.p, f.n
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        return FqElem(f, _poly_rem(tuple(prod), f.modulus, p) if len(prod) > n else tuple(prod))

    def __pow__(self, e: int) -> FqElem:
        if e < 0:
            raise ValueError(f"exponent must be nonnegative, got {e}")
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return any(self.coeffs)


def is_primitive_root(p: int, r: int) -> bool:
    """Whether the prime p generates the multiplicative group mod the prime r."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not _is_prime(r):
        raise ValueError(f"{r} is not prime")
    if p == r:
        raise ValueError("p and r must be distinct primes")
    order, t = 1, p % r
    while t != 1:
        t = t * p % r
        order += 1
    return order == r - 1


def cyclotomic_field(p: int, r: int) -> FqField:
    """F_{p^(r-1)} on the basis 1, xi, ..., xi^(r-2) with sum(xi^i) = 0.

    Needs p to be a primitive root modulo the prime r (that is exactly when
    1 + x + ... + x^{r-1} is irreducible over Z/pZ); gen() is then a
    primitive r-th root of unity.
    """
    if r < 2:
        raise ValueError(f"order must be a prime >= 2, got {r}")
    if not is_primitive_root(p, r):
        raise ValueError(
            f"1 + x + ... + x^{r - 1} is reducible mod {p}: "
            f"{p} is not a primitive root modulo {r}"
        )
    return FqField(p, (1,) * r, cyclotomic_order=r)


def kth_power_set(f: FqField, k: int) -> set[FqElem]:
    """{x^k : x in F}: 0 and 1 plus the multiplicative subgroup of index gcd(k, q-1).

    The nonzero k-th powers are exactly the solutions of x^d = 1 for
    d = (q-1)/gcd(k, q-1), which is cheaper to test than raising to k.
    """
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    k_red = gcd(k, f.q - 1)
    if k_red == 1:
        return set(f.elements())
    d = (f.q - 1) // k_red
    one = f.one()
    out = {f.zero()}
    for t in range(1, f.q):
        a = f.from_rank(t)
        if a**d == one:
            out.add(a)
    return out


@functools.lru_cache(maxsize=64)
def _sumset_levels(f: FqField, k_red: int) -> tuple[dict[tuple[int, ...], int], int | None]:
    """BFS levels of the sumset growth A_0 = {0}, A_{j+1} = A_j + powers.

    Returns (level per coefficient tuple, least g with A_g = F) with g None
    when the powers only generate a proper additive subgroup.  Treat the
    returned dict as read-only: it is cached.
    """
    powers = [a.coeffs for a in kth_power_set(f, k_red)]
    p, n, q = f.p, f.n, f.q
    zero = (0,) * n
    levels = {zero: 0}
    frontier = [zero]
    depth = 0
    while frontier and len(levels) < q:
        depth += 1
        fresh = []
        for a in frontier:
            for s in powers:
                t = tuple((x + y) % p for x, y in zip(a, s))
                if t not in levels:
                    levels[t] = depth
                    fresh.append(t)
        frontier = fresh
    return levels, (depth if len(levels) == q else None)


def waring_number(f: FqField, k: int, budget: int = DEFAULT_FIELD_BUDGET) -> int | None:
    """Least g such that every element of F is a sum of g k-th powers.

    Returns None when the k-th powers generate a proper additive subgroup
    (e.g. a subfield), so that no such g exists.
    """
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    if f.q > budget:
        raise BudgetError(f.q, budget, "field size")
    return _sumset_levels(f, gcd(k, f.q - 1))[1]


def per_element_length(f: FqField, k: int, a: FqElem, budget: int = DEFAULT_FIELD_BUDGET) -> int:
    """Least number of k-th powers summing to a (0 for a = 0, empty sum)."""
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    if f.q > budget:
        raise BudgetError(f.q, budget, "field size")
    levels, g = _sumset_levels(f, gcd(k, f.q - 1))
    if g is None:
        raise ValueError("k-th powers do not span the field additively")
    return levels[a.coeffs]


def to_coset_vector(a: FqElem) -> ModVec:
    """Coefficients of a on the cyclotomic basis, zero-padded to length r.

    The all-ones relation sum(xi^i) = 0 means this vector is well defined
    only up to the all-ones line, matching the coset picture over Z/pZ.
    """
    r = a.field.cyclotomic_order
    if r is None:
        raise ValueError("element does not live in a cyclotomic-basis field")
    return ModVec(a.field.p, a.coeffs + (0,))


@dataclass(frozen=True)
class WaringReport:
    """One exact Waring computation next to the closed form predicting it.

    formula_g is None for generic runs with no applicable closed form, in
    which case match is None as well; computed_g is None when the k-th
    powers do not additively span the field.
    """

    p: int
    n: int
    k: int
    k_reduced: int
    computed_g: int | None
    formula_g: int | None = None
    r: int | None = None
    label: str = ""

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def match(self) -> bool | None:
        if self.formula_g is None:
            return None
        return self.computed_g == self.formula_g

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "r": self.r,
            "k": self.k,
            "k_reduced": self.k_reduced,
            "computed_g": self.computed_g,
            "formula_g": self.formula_g,
            "match": self.match,
        }


def verify_theorem1(p: int, r: int, budget: int = DEFAULT_FIELD_BUDGET) -> WaringReport:
    """Check g((q-1)/r, q) = (p-1)(r-1)/2 for q = p^(r-1) by sumset BFS.

    Needs p, r prime with p a primitive root modulo r.
    """
    f = cyclotomic_field(p, r)
    q = f.q
    k = (q - 1) // r
    computed = waring_number(f, k, budget)
    formula = (p - 1) * (r - 1) // 2
    return WaringReport(
        p, f.n, k, gcd(k, q - 1), computed, formula, r=r, label="g((q-1)/r, q)"
    )


def verify_theorem2(p: int, r: int, budget: int = DEFAULT_FIELD_BUDGET) -> WaringReport:
    """Check g((q-1)/(2r), q) against its floor formula for q = p^(r-1).

    Needs p, r odd primes with p a primitive root modulo r; the predicted
    value is floor(pr/4 - p/(4r)) when r < p and floor(pr/4 - r/(4p))
    otherwise, evaluated in exact integer arithmetic.
    """
    if p == 2 or r == 2:
        raise ValueError("p and r must be odd primes")
    f = cyclotomic_field(p, r)
    q = f.q
    k = (q - 1) // (2 * r)
    computed = waring_number(f, k, budget)
    if r < p:
        formula = p * (r * r - 1) // (4 * r)
    else:
        formula = r * (p * p - 1) // (4 * p)
    return WaringReport(
        p, f.n, k, gcd(k, q - 1), computed, formula, r=r, label="g((q-1)/(2r), q)"
    )


def verify_remarks(p: int, budget: int = DEFAULT_FIELD_BUDGET) -> list[WaringReport]:
    """The r = 1 and r = 2 companions: g(p-1, p), g((p-1)/2, p), g((p^2-1)/4, p^2).

    The first always equals p - 1.  The second (odd p only, since k must be
    positive) equals (p-1)/2; note that for p = 3 the exponent is k = 1.
    The third applies when p = 3 mod 4 and equals p - 1, computed in
    F_{p^2} built from the smallest irreducible quadratic.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    prime_field = FqField(p, find_irreducible(p, 1, budget))
    k1 = p - 1 if p > 2 else 1
    reports = [
        WaringReport(
            p, 1, k1, gcd(k1, p - 1), waring_number(prime_field, k1, budget),
            p - 1, r=1, label="g(p-1, p)",
        )
    ]
    if p > 2:
        k2 = (p - 1) // 2
        reports.append(
            WaringReport(
                p, 1, k2, gcd(k2, p - 1), waring_number(prime_field, k2, budget),
                (p - 1) // 2, r=1, label="g((p-1)/2, p)",
            )
        )
    if p % 4 == 3:
        square_field = FqField(p, find_irreducible(p, 2, budget))
        k3 = (p * p - 1) // 4
        reports.append(
            WaringReport(
                p, 2, k3, gcd(k3, p * p - 1), waring_number(square_field, k3, budget),
                p - 1, r=2, label="g((p^2-1)/4, p^2)",
            )
        )
    return reports
