"""Symmetric functions for multiplicative sequences.

The coefficient of c_{j1} ... c_{jr} in the multiplicative sequence of a
series Q(z) = 1 + b_1 z + b_2 z^2 + ... is the monomial symmetric function
m_(j1,...,jr) of the formal roots of Q.  Those roots are never formed: since
the elementary symmetric functions of the roots are the b_j, it is enough to
write m_lambda in the elementary basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .cyclotomic import CyclotomicNumber, check_odd_prime
from .series import TruncatedSeries, series_at_power, weight_cap

__all__ = [
    "Partition",
    "partitions",
    "partitions_up_to",
    "conjugate",
    "check_partition",
    "e_to_m_count",
    "m_to_e",
    "tau",
    "tau_from_coeffs",
    "tau_at_power",
    "TauTable",
    "tau_table",
    "multiplicative_class",
    "newton_power_sums",
]

Partition = tuple  # weakly decreasing tuple of positive ints


def check_partition(lam) -> tuple:
    lam = tuple(lam)
    if any((not isinstance(j, int)) or j <= 0 for j in lam):
        raise ValueError(f"partition parts must be positive integers: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n, in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(w: int, max_part: int | None = None):
    for n in range(w + 1):
        yield from partitions(n, n if max_part is None else min(n, max_part))


def conjugate(lam) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for j in lam if j > i) for i in range(lam[0]))


@lru_cache(maxsize=None)
def _count_01(rows: tuple, cols: tuple) -> int:
    # number of 0-1 matrices with the given row sums and (sorted) column sums
    if not rows:
        return 1 if not any(cols) else 0
    r, rest = rows[0], rows[1:]
    groups = {}
    for c in cols:
        if c:
            groups[c] = groups.get(c, 0) + 1
    values = sorted(groups)
    total = 0

    def choose(idx, left, picked, weight):
        nonlocal total
        if idx == len(values):
            if left == 0:
                new_cols = []
                for v, take in zip(values, picked):
                    new_cols += [v - 1] * take + [v] * (groups[v] - take)
                total += weight * _count_01(rest, tuple(sorted((c for c in new_cols if c), reverse=True)))
            return
        v = values[idx]
        for take in range(min(left, groups[v]) + 1):
            choose(idx + 1, left - take, picked + [take], weight * comb(groups[v], take))

    choose(0, r, [], 1)
    return total


def e_to_m_count(mu, nu) -> int:
    """Coefficient of m_nu in the product e_mu1 e_mu2 ... (a 0-1 matrix count)."""
    if sum(mu) != sum(nu):
        return 0
    return _count_01(tuple(mu), tuple(sorted(nu, reverse=True)))


@lru_cache(maxsize=None)
def _m_to_e_weight(n: int) -> dict:
    """{lambda: {mu: c}} with m_lambda = sum_mu c * e_mu, for all lambda of weight n."""
    parts = partitions(n)
    size = len(parts)
    # T[i][j] = coefficient of m_{parts[j]} in e_{conj(parts[i])}; upper unitriangular
    T = [[e_to_m_count(conjugate(parts[i]), parts[j]) if j >= i else 0 for j in range(size)]
         for i in range(size)]
    for i in range(size):
        assert T[i][i] == 1
    # invert by back-substitution: S = T^{-1}, also upper unitriangular
    S = [[0] * size for _ in range(size)]
    for j in range(size - 1, -1, -1):
        S[j][j] = 1
        for i in range(j - 1, -1, -1):
            S[i][j] = -sum(T[i][k] * S[k][j] for k in range(i + 1, j + 1) if T[i][k])
    # m_{parts[j]} = sum_i S[j][i] e_{conj(parts[i])}
    out = {}
    for j, lam in enumerate(parts):
        out[lam] = {conjugate(parts[i]): S[j][i] for i in range(size) if S[j][i]}
    return out


def m_to_e(lam) -> dict:
    """Expand m_lambda in the elementary basis; keys index products e_mu1 e_mu2 ..."""
    lam = check_partition(lam)
    n = sum(lam)
    cap = weight_cap()
    if n > cap:
        raise ValueError(f"weight {n} exceeds the weight cap {cap}")
    return dict(_m_to_e_weight(n)[lam])


def tau_from_coeffs(b, lam):
    """m_lambda evaluated on formal roots whose elementary symmetric values are b_1, b_2, ..."""
    lam = check_partition(lam)
    n = sum(lam)
    if n >= len(b):
        raise ValueError(f"series too short: need order >= {n}, have {len(b) - 1}")
    total = b[0] * 0
    for mu, c in m_to_e(lam).items():
        term = c
        for j in mu:
            term = b[j] * term
        total = total + term
    return total


def tau(p: int, k: int, lam, series: TruncatedSeries) -> CyclotomicNumber:
    lam = check_partition(lam)
    if series.p != p:
        raise ValueError("series is not over Q(zeta_p)")
    if sum(lam) > series.order:
        raise ValueError(f"series too short: need order >= {sum(lam)}, have {series.order}")
    return tau_from_coeffs(series.coeffs, lam)


@lru_cache(maxsize=None)
def tau_at_power(p: int, e: int, lam: tuple) -> CyclotomicNumber:
    """tau(lambda) at the eigenvalue zeta^e, for any exponent e prime to p."""
    D = sum(lam)
    return tau_from_coeffs(series_at_power(p, e % p, max(D, 1)).coeffs, lam)


@dataclass(frozen=True)
class TauTable:
    p: int
    D: int
    values: dict

    def __getitem__(self, key):
        k, lam = key
        return self.values[(k, tuple(lam))]

    def rows(self, include_empty: bool = False):
        for (k, lam), v in sorted(self.values.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), [-x for x in kv[0][1]])):
            if lam or include_empty:
                yield k, lam, v


@lru_cache(maxsize=None)
def tau_table(p: int, D: int) -> TauTable:
    check_odd_prime(p)
    values = {}
    for k in range(1, (p - 1) // 2 + 1):
        series = series_at_power(p, k, D)
        for lam in partitions_up_to(D):
            values[(k, lam)] = tau_from_coeffs(series.coeffs, lam)
    return TauTable(p, D, values)


def multiplicative_class(b, chern, d: int, degree_step: int = 2, D: int | None = None, ring=None):
    """Total class sum_lambda tau(lambda) c_lambda for the series with coefficients b.

    ``chern[j-1]`` is c_j, of pure degree ``degree_step * j``; classes with
    j > d are treated as zero.  The sum is truncated at the ring's top degree.
    """
    if degree_step not in (2, 4):
        raise ValueError("degree_step must be 2 or 4")
    chern = list(chern)
    if ring is None:
        if not chern:
            raise ValueError("ring is required when no classes are given")
        ring = chern[0].ring
    for j, c in enumerate(chern, start=1):
        if c.ring != ring:
            raise ValueError("classes belong to different rings")
        if not c.is_homogeneous(degree_step * j):
            raise ValueError(f"class {j} is not of pure degree {degree_step * j}")
    chern = chern[:d]
    top_w = ring.top // degree_step
    if D is None:
        D = top_w
    D = min(D, top_w, len(b) - 1)
    result = ring.one()
    products = {(): ring.one()}
    for lam in partitions_up_to(D, max_part=len(chern)):
        if not lam:
            continue
        prev = products.get(lam[:-1])
        if prev is None or prev.is_zero():
            products[lam] = ring.zero()
            continue
        cl = prev * chern[lam[-1] - 1]
        products[lam] = cl
        if cl.is_zero():
            continue
        coeff = tau_from_coeffs(b, lam)
        if coeff:
            result = result + cl * coeff
    return result


def newton_power_sums(e, n_max: int, rank: int | None = None, zero=0) -> list:
    """Power sums P_1..P_{n_max} of formal roots with elementary values e_1, e_2, ...

    P_n = sum_{m<n} (-1)^(m-1) e_m P_{n-m} + (-1)^(n-1) n e_n, with e_m = 0
    beyond ``rank``.
    """
    e = list(e)
    if rank is None:
        rank = len(e)
    e = e[:rank]

    def el(m):
        return e[m - 1] if m <= len(e) else None

    P = []
    for n in range(1, n_max + 1):
        acc = zero
        for m in range(1, n):
            em = el(m)
            if em is not None:
                term = em * P[n - m - 1]
                acc = acc + term if m % 2 == 1 else acc - term
        en = el(n)
        if en is not None:
            acc = acc + en * n if n % 2 == 1 else acc - en * n
        P.append(acc)
    return P
