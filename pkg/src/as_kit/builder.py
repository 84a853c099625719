"""Chern-data constructions: exponential eigenbundles and families of vanishing bundles."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, isqrt, lcm

from .asclass import EigenbundleData, GBundleChernData
from .cohring import RingElement
from .numthy import find_relation
from .symfun import tau_at_power

__all__ = [
    "BuildError",
    "NilpotenceReport",
    "nilpotence_check",
    "exponential_chern_data",
    "integrality_scalar",
    "verify_relation",
    "build_vanishing_family",
    "finiteness_demo",
    "c2_filter",
    "first_chern_profile",
    "nilpotence_order",
    "family_report",
]


class BuildError(ValueError):
    pass


@dataclass(frozen=True)
class NilpotenceReport:
    beta: RingElement
    N: int
    eligible_k: tuple
    sufficient: bool


def nilpotence_order(beta: RingElement) -> int:
    """Smallest N >= 0 with beta^(N+1) = 0."""
    if not beta.is_homogeneous(2):
        raise BuildError("beta must be homogeneous of degree 2")
    N, power = 0, beta
    while not power.is_zero():
        N += 1
        power = power * beta
        if N > beta.ring.top:
            raise BuildError("beta is not nilpotent")
    return N


def nilpotence_check(beta: RingElement, multiplicities, u: int) -> NilpotenceReport:
    """beta is sufficiently nilpotent if at least u+1 eigen-indices have multiplicity >= N.

    A zero multiplicity never counts, also when beta = 0 (N = 0).
    """
    N = nilpotence_order(beta)
    need = max(N, 1)
    eligible = tuple(k for k, d in enumerate(multiplicities, start=1) if d >= need)
    return NilpotenceReport(beta, N, eligible, len(eligible) >= u + 1)


def exponential_chern_data(beta: RingElement, s: int, d: int) -> EigenbundleData:
    """Rank-d Chern data with c_j = (s beta)^j / j!."""
    ring = beta.ring
    c1 = beta * s
    chern, power = [], ring.one()
    for j in range(1, d + 1):
        power = power * c1
        chern.append(power / factorial(j))
    if not (power * c1).is_zero():
        raise BuildError(f"nilpotence fails: ({s}*beta)^{d + 1} != 0")
    return EigenbundleData(d, tuple(chern), ring)


def integrality_scalar(beta: RingElement, d: int) -> int:
    """Least s > 0 with every (s beta)^j / j!, j <= d, integral in the ring's basis.

    Requires rational coefficients; s = lcm(denominators of beta^j) * d! always
    works, so the search is finite.
    """
    if not beta.is_rational():
        raise BuildError("integrality needs rational coefficients")
    powers, power = [], beta.ring.one()
    for _ in range(d):
        power = power * beta
        powers.append([c.rational_value() for c in power.coeffs])
    bound = 1
    for vec in powers:
        for x in vec:
            bound = lcm(bound, x.denominator)
    bound *= factorial(d)
    for s in range(1, bound + 1):
        if all((x * s**j / factorial(j)).denominator == 1
               for j, vec in enumerate(powers, start=1) for x in vec):
            return s
    return bound


def verify_relation(p: int, u) -> None:
    u = tuple(int(x) for x in u)
    if len(u) != (p - 1) // 2:
        raise BuildError(f"relation needs {(p - 1) // 2} entries, got {len(u)}")
    total = sum((tau_at_power(p, k, (1,)) * x for k, x in enumerate(u, start=1)), tau_at_power(p, 1, ()) * 0)
    if total:
        raise BuildError(f"{u} is not a relation among tau((1))(zeta^k) for p={p}")


def build_vanishing_family(ring, beta: RingElement, multiplicities, relation=None, count: int = 1) -> list:
    """Bundles m = 1..count with c_1(E_k) = m u_k beta and exponential higher classes."""
    p = ring.p
    h = (p - 1) // 2
    multiplicities = list(multiplicities)
    if len(multiplicities) != h:
        raise BuildError(f"need {h} multiplicities for p={p}")
    if relation is None:
        relation = find_relation(p)
    else:
        verify_relation(p, relation)
    relation = tuple(int(x) for x in relation)
    problems = []
    family = []
    for m in range(1, count + 1):
        eigen = []
        for k, (d, uk) in enumerate(zip(multiplicities, relation), start=1):
            if uk and d == 0:
                problems.append(f"m={m}, k={k}: relation uses k but multiplicity is 0")
                continue
            try:
                eigen.append(exponential_chern_data(beta, m * uk, d))
            except BuildError as exc:
                problems.append(f"m={m}, k={k}: {exc}")
        if len(eigen) == h:
            family.append(GBundleChernData(p, ring, tuple(eigen)))
    if problems:
        raise BuildError("; ".join(problems))
    return family


def first_chern_profile(bundle: GBundleChernData) -> tuple:
    return tuple(ek.c(1) for ek in bundle.eigen)


def finiteness_demo(bound: int) -> list:
    """Integer solutions of x^2 - y^2 = 1 with |x|, |y| <= bound.

    (x - y)(x + y) = 1, so solutions come from the divisor pairs of 1; the
    general divisor enumeration is kept for clarity.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    n = 1
    out = set()
    for d1 in range(1, isqrt(n) + 1):
        if n % d1:
            continue
        for a, b in ((d1, n // d1), (n // d1, d1)):
            for sgn in (1, -1):
                s, t = sgn * a, sgn * b  # x - y = s, x + y = t
                if (s + t) % 2:
                    continue
                x, y = (s + t) // 2, (t - s) // 2
                if abs(x) <= bound and abs(y) <= bound:
                    out.add((x, y))
    return sorted(out, key=lambda xy: (-xy[0], xy[1]))


def c2_filter(bound: int, p: int = 7) -> list:
    """Pairs (x, y), |x|, |y| <= bound, for which line bundles with c_1 = x a + y b on
    CP2#-CP2 pass the c_2 condition against line bundles with c_1 = a.

    Each pair runs the full condition check on Chern data; the result is sorted
    like finiteness_demo.
    """
    from .asclass import c2_pair_condition
    from .cohring import ring_cp2_cp2bar

    ring = ring_cp2_cp2bar(p)
    h = (p - 1) // 2
    a, b = ring.gen("a"), ring.gen("b")
    xi_k = EigenbundleData(1, (a,), ring)
    xi = GBundleChernData(p, ring, (xi_k,) * h)
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            e_k = EigenbundleData(1, (a * x + b * y,), ring)
            if c2_pair_condition(xi, GBundleChernData(p, ring, (e_k,) * h)):
                out.append((x, y))
    return sorted(out, key=lambda xy: (-xy[0], xy[1]))


def family_report(family) -> dict:
    """Verification summary for a list of bundles built by build_vanishing_family."""
    from .asclass import euler_class, is_vanishing, pontryagin_classes, theorem_conditions

    members = []
    for m, b in enumerate(family, start=1):
        members.append({
            "m": m,
            "vanishing": is_vanishing(b),
            "conditions": list(theorem_conditions(b)),
            "euler_zero": euler_class(b).is_zero(),
            "pontryagin_zero": all(x.is_zero() for ek in b.eigen for x in pontryagin_classes(ek)),
        })
    profiles = [first_chern_profile(b) for b in family]
    distinct = len(set(profiles)) == len(profiles) and all(any(c for c in pr) for pr in profiles)
    return {
        "count": len(family),
        "members": members,
        "all_ok": all(x["vanishing"] and all(x["conditions"]) and x["euler_zero"] and x["pontryagin_zero"]
                      for x in members),
        "distinct_c1": distinct,
    }
