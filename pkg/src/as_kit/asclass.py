"""Characteristic classes of Z/p-equivariant bundles given by eigenbundle Chern data.

A free Z/p bundle splits as E_1 + ... + E_h, h = (p-1)/2, where the generator
acts on E_k by zeta^k.  Everything here works with the ranks d_k and the
Chern classes c_j(E_k) in a CohomologyRing; no geometry is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd

from .cohring import CohomologyRing, RingElement
from .cyclotomic import CyclotomicNumber, check_odd_prime, zeta
from .series import l_generating_series
from .symfun import multiplicative_class, newton_power_sums, partitions_up_to, tau_at_power

__all__ = [
    "EigenbundleData",
    "GBundleChernData",
    "BundleError",
    "eigen_m_class",
    "total_m_class",
    "a_factor",
    "is_vanishing",
    "theorem_conditions",
    "chern_character",
    "is_exponential",
    "pontryagin_classes",
    "euler_class",
    "as_character",
    "character_table",
    "l_genus",
    "c2_pair_condition",
]


class BundleError(ValueError):
    pass


@dataclass(frozen=True)
class EigenbundleData:
    """Rank and Chern classes c_1..c_rank of one eigenbundle."""

    rank: int
    chern: tuple = ()
    ring: CohomologyRing | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rank < 0:
            raise BundleError(f"rank must be non-negative, got {self.rank}")
        chern = tuple(self.chern)
        if len(chern) > self.rank:
            raise BundleError(f"rank {self.rank} bundle given {len(chern)} Chern classes")
        ring = self.ring if self.ring is not None else (chern[0].ring if chern else None)
        for j, c in enumerate(chern, start=1):
            if c.ring != ring:
                raise BundleError("Chern classes belong to different rings")
            if not c.is_homogeneous(2 * j):
                raise BundleError(f"c_{j} is not of pure degree {2 * j}")
        if ring is not None:
            # pad to full rank; classes above the top degree are zero anyway
            chern = chern + tuple(ring.zero() for _ in range(self.rank - len(chern)))
        object.__setattr__(self, "chern", chern)
        object.__setattr__(self, "ring", ring)

    def c(self, j: int) -> RingElement:
        """c_j, with c_0 = 1 and c_j = 0 above the rank."""
        if j == 0:
            return self.ring.one()
        if j <= self.rank:
            return self.chern[j - 1]
        return self.ring.zero()

    def total_chern(self) -> RingElement:
        out = self.ring.one()
        for c in self.chern:
            out = out + c
        return out

    def to_json(self) -> dict:
        return {"rank": self.rank, "chern": [c.to_json() for c in self.chern]}


@dataclass(frozen=True)
class GBundleChernData:
    """Chern data of E = E_1 + ... + E_h over ``ring``; entry k-1 describes E_k."""

    p: int
    ring: CohomologyRing
    eigen: tuple

    def __post_init__(self):
        check_odd_prime(self.p)
        if self.ring.p != self.p:
            raise BundleError(f"ring is over Q(zeta_{self.ring.p}), bundle needs p={self.p}")
        h = (self.p - 1) // 2
        eigen = tuple(self.eigen)
        if len(eigen) != h:
            raise BundleError(f"expected {h} eigenbundles for p={self.p}, got {len(eigen)}")
        fixed = []
        for ek in eigen:
            if ek.ring is None:
                ek = EigenbundleData(ek.rank, ek.chern, self.ring)
            elif ek.ring != self.ring:
                raise BundleError("eigenbundle Chern classes live in a different ring")
            fixed.append(ek)
        object.__setattr__(self, "eigen", tuple(fixed))

    @property
    def ranks(self) -> tuple:
        return tuple(ek.rank for ek in self.eigen)

    @classmethod
    def from_classes(cls, p, ring, data):
        """``data`` is a sequence of (rank, [c_1, c_2, ...]) with classes as ring elements or element inputs."""
        eigen = [EigenbundleData(d, tuple(ring.element(c) for c in cs), ring) for d, cs in data]
        return cls(p, ring, tuple(eigen))

    def to_json(self, ring_ref=None) -> dict:
        return {
            "p": self.p,
            "ring": ring_ref if ring_ref is not None else self.ring.to_json(),
            "eigen": [ek.to_json() for ek in self.eigen],
        }


def _check_n(p: int, n: int) -> None:
    if gcd(n, p) != 1:
        raise BundleError(f"n={n} must be prime to p={p}")


def eigen_m_class(bundle: GBundleChernData, k: int, n: int = 1, D: int | None = None) -> RingElement:
    """The class M^{zeta^(nk)}(E_k)."""
    _check_n(bundle.p, n)
    h = (bundle.p - 1) // 2
    if not 1 <= k <= h:
        raise BundleError(f"k must lie in 1..{h}")
    ek = bundle.eigen[k - 1]
    ring = bundle.ring
    if ek.rank == 0:
        return ring.one()
    top_w = ring.top // 2 if D is None else min(D, ring.top // 2)
    return _m_class_at(ring, ek, bundle.p, (n * k) % bundle.p, top_w)


def _m_class_at(ring, ek, p, e, D):
    # same sum as multiplicative_class, with tau values cached per eigenvalue
    result = ring.one()
    chern = ek.chern
    products = {(): ring.one()}
    for lam in partitions_up_to(D, max_part=ek.rank):
        if not lam:
            continue
        prev = products[lam[:-1]]
        if prev.is_zero():
            products[lam] = prev
            continue
        cl = prev * chern[lam[-1] - 1]
        products[lam] = cl
        if cl.is_zero():
            continue
        result = result + cl * tau_at_power(p, e, lam)
    return result


def total_m_class(bundle: GBundleChernData, n: int = 1) -> RingElement:
    """prod_k M^{zeta^(nk)}(E_k)."""
    _check_n(bundle.p, n)
    out = bundle.ring.one()
    for k in range(1, len(bundle.eigen) + 1):
        out = out * eigen_m_class(bundle, k, n)
    return out


def a_factor(bundle: GBundleChernData, n: int = 1) -> CyclotomicNumber:
    """prod_k ((zeta^(nk) + 1) / (zeta^(nk) - 1))^(d_k)."""
    p = bundle.p
    _check_n(p, n)
    out = CyclotomicNumber.rational(p, 1)
    for k, ek in enumerate(bundle.eigen, start=1):
        if ek.rank:
            w = zeta(p, n * k)
            out = out * ((w + 1) / (w - 1)) ** ek.rank
    return out


def is_vanishing(bundle: GBundleChernData) -> bool:
    return total_m_class(bundle, 1).positive_part().is_zero()


def _exponential_ok(ek: EigenbundleData) -> bool:
    if ek.rank == 0:
        return True
    c1 = ek.chern[0]
    power = ek.ring.one()
    for n in range(1, ek.rank + 1):
        power = power * c1
        if ek.chern[n - 1] != power / factorial(n):
            return False
    return (power * c1).is_zero()


def theorem_conditions(bundle: GBundleChernData) -> tuple:
    """(cond1, cond2) of the vanishing criterion.

    cond1: sum_k tau((1))(zeta^k) c_1(E_k) = 0.
    cond2: every eigenbundle is exponential, including c_1(E_k)^(d_k+1) = 0.

    The criterion is a statement about rational classes; Chern data with
    irrational coefficients are rejected.
    """
    ring = bundle.ring
    if not all(c.is_rational() for ek in bundle.eigen for c in ek.chern):
        raise BundleError("the vanishing criterion needs Chern classes with rational coefficients")
    s = ring.zero()
    for k, ek in enumerate(bundle.eigen, start=1):
        if ek.rank:
            s = s + ek.chern[0] * tau_at_power(bundle.p, k, (1,))
    cond1 = s.is_zero()
    cond2 = all(_exponential_ok(ek) for ek in bundle.eigen)
    return cond1, cond2


def is_exponential(ek: EigenbundleData) -> bool:
    return _exponential_ok(ek)


def chern_character(ek: EigenbundleData, D: int | None = None) -> RingElement:
    """rank + sum_{m=1}^{D} P_m / m!, with P_m the Newton power sums of the Chern roots."""
    ring = ek.ring
    if ring is None:
        raise BundleError("eigenbundle has no ring attached")
    if D is None:
        D = ring.top // 2
    P = newton_power_sums(ek.chern, D, rank=ek.rank, zero=ring.zero())
    out = ring.one() * ek.rank
    for m, Pm in enumerate(P, start=1):
        out = out + Pm / factorial(m)
    return out


def pontryagin_classes(ek: EigenbundleData) -> list:
    """p_1, ..., p_{top/4} of the underlying real bundle: p_k = sum_{i+j=2k} (-1)^j c_i c_j."""
    ring = ek.ring
    out = []
    for k in range(1, ring.top // 4 + 1):
        acc = ring.zero()
        for j in range(2 * k + 1):
            i = 2 * k - j
            if i > ek.rank or j > ek.rank:
                continue
            term = ek.c(i) * ek.c(j)
            acc = acc - term if j % 2 else acc + term
        # the sum runs over ordered pairs, so with the sign (-1)^j it is
        # (-1)^k times the usual p_k; restore the standard sign
        out.append(acc if k % 2 == 0 else -acc)
    return out


def euler_class(bundle: GBundleChernData) -> RingElement:
    out = bundle.ring.one()
    for ek in bundle.eigen:
        out = out * ek.c(ek.rank)
    return out


def as_character(bundle: GBundleChernData, Lclass: RingElement | None = None, n: int = 1) -> CyclotomicNumber:
    """<A(g^n, V) L(M) M(g^n, E), [M]>."""
    _check_n(bundle.p, n)
    ring = bundle.ring
    if Lclass is None:
        Lclass = ring.one()
    if Lclass.graded_part(0) != ring.one():
        raise BundleError("L class must have degree-0 part 1")
    cls = Lclass * total_m_class(bundle, n)
    return cls.pair_fundamental() * a_factor(bundle, n)


def character_table(bundle: GBundleChernData, Lclass: RingElement | None = None) -> list:
    return [(n, as_character(bundle, Lclass, n)) for n in range(1, bundle.p)]


def l_genus(pont) -> RingElement:
    """Hirzebruch L-class 1 + p_1/3 + (7 p_2 - p_1^2)/45 + ... from Pontryagin classes."""
    pont = list(pont)
    if not pont:
        raise ValueError("need at least one Pontryagin class (or pass the ring's zero)")
    ring = pont[0].ring
    D = ring.top // 4
    b = l_generating_series(max(D, 1)).coeffs
    return multiplicative_class(b, pont, len(pont), degree_step=4, D=D, ring=ring)


def c2_pair_condition(xi: GBundleChernData, E: GBundleChernData) -> bool:
    """c_2(xi_k) - c_2(E_k) == (c_1(xi_k)^2 - c_1(E_k)^2) / 2 for every k."""
    if xi.p != E.p or xi.ring != E.ring:
        raise BundleError("bundles must share p and ring")
    if xi.ranks != E.ranks:
        raise BundleError(f"rank profiles differ: {xi.ranks} vs {E.ranks}")
    seen = set()
    for a, b in zip(xi.eigen, E.eigen):
        if (id(a), id(b)) in seen:
            continue
        seen.add((id(a), id(b)))
        lhs = a.c(2) - b.c(2)
        rhs = (a.c(1) * a.c(1) - b.c(1) * b.c(1)) / 2
        if lhs != rhs:
            return False
    return True
