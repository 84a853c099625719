"""Prime classification and exact Q-linear relations among tau((r))(zeta^k)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cyclotomic import check_odd_prime
from .linalg import bareiss_rank, hermite_normal_form, integer_kernel
from .symfun import tau_at_power

__all__ = [
    "PrimeProfile",
    "RelationResult",
    "NoRelation",
    "multiplicative_order",
    "prime_profile",
    "predicted_rank",
    "tau_vectors",
    "tau_rank",
    "find_relation",
    "minimal_support_relation",
]


class NoRelation(ValueError):
    pass


def multiplicative_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ValueError(f"{a} is not a unit mod {p}")
    t, x = 1, a
    while x != 1:
        x = x * a % p
        t += 1
    return t


@dataclass(frozen=True)
class PrimeProfile:
    p: int
    t: int
    parity: str
    residue_mod_8: int
    u: int | None

    @property
    def half(self) -> int:
        return (self.p - 1) // 2


def prime_profile(p: int) -> PrimeProfile:
    """Order t of 2 mod p, its parity, p mod 8 and u = (p-1)(t-1)/(2t) for odd t."""
    check_odd_prime(p)
    t = multiplicative_order(2, p)
    odd = t % 2 == 1
    u = (p - 1) * (t - 1) // (2 * t) if odd else None
    return PrimeProfile(p, t, "odd" if odd else "even", p % 8, u)


def predicted_rank(profile: PrimeProfile, r: int = 1) -> int:
    """Dimension of the Q-span of tau((r))(zeta^k), k = 1..(p-1)/2, per Ewing."""
    if r == 1 and profile.u is not None:
        return profile.u
    return profile.half


@dataclass(frozen=True)
class RelationResult:
    p: int
    r: int
    rank: int
    kernel: tuple  # primitive integer vectors u with sum_k u_k tau((r))(zeta^k) = 0

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)


def tau_vectors(p: int, r: int) -> list:
    """Rational power-basis coordinates of tau((r))(zeta^k) for k = 1..(p-1)/2."""
    check_odd_prime(p)
    return [list(tau_at_power(p, k, (r,)).coords) for k in range(1, (p - 1) // 2 + 1)]


def tau_rank(p: int, r: int = 1, D: int | None = None) -> RelationResult:
    if r < 1:
        raise ValueError("r must be positive")
    if D is not None and D < r:
        raise ValueError(f"order D={D} is below r={r}")
    vecs = tau_vectors(p, r)
    rank = bareiss_rank(vecs)
    # relations u with u . vecs = 0 are the integer kernel of the transpose
    transpose = [list(col) for col in zip(*vecs)]
    basis = integer_kernel(transpose)
    kernel = tuple(tuple(v) for v in hermite_normal_form(basis))
    if rank + len(kernel) != len(vecs):
        raise ArithmeticError("rank-nullity failed; elimination bug")
    for u in kernel:
        _check_relation(vecs, u)
    return RelationResult(p, r, rank, kernel)


def _check_relation(vecs, u):
    for coord in zip(*vecs):
        if sum(Fraction(x) * c for x, c in zip(coord, u)) != 0:
            raise ArithmeticError(f"kernel vector {u} does not annihilate")


def find_relation(p: int) -> tuple:
    """First vector of the HNF basis of integer relations among tau((1))(zeta^k)."""
    prof = prime_profile(p)
    if prof.parity == "even":
        raise NoRelation(f"no relation exists: 2 has even order {prof.t} mod {p}")
    res = tau_rank(p, 1)
    if not res.kernel:
        raise ArithmeticError(f"expected a relation for p={p}, found none")
    return res.kernel[0]


def minimal_support_relation(p: int, cap: int = 6):
    """Smallest-support integer relation with support size <= cap, or None.

    Subsets are scanned by size, then lexicographically; the first dependent
    subset found is returned as a full-length primitive vector.  None means
    only that nothing was found below the cap.
    """
    vecs = tau_vectors(p, 1)
    h = len(vecs)
    for size in range(1, min(cap, h) + 1):
        for subset in combinations(range(h), size):
            sub = [vecs[i] for i in subset]
            if bareiss_rank(sub) == size:
                continue
            basis = hermite_normal_form(integer_kernel([list(c) for c in zip(*sub)]))
            v = [0] * h
            for i, x in zip(subset, basis[0]):
                v[i] = x
            return tuple(v)
    return None
