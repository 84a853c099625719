"""Truncated power series over Q or Q(zeta_p)."""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .cyclotomic import CyclotomicNumber, check_odd_prime, zeta

__all__ = [
    "TruncatedSeries",
    "SeriesMismatch",
    "weight_cap",
    "series_mul",
    "series_invert",
    "exp_series",
    "as_generating_series",
    "series_at_power",
    "l_generating_series",
]

DEFAULT_WEIGHT_CAP = 16


class SeriesMismatch(ValueError):
    pass


def weight_cap() -> int:
    """Global truncation cap; AS_KIT_WEIGHT_CAP overrides the default of 16."""
    raw = os.environ.get("AS_KIT_WEIGHT_CAP")
    if raw is None:
        return DEFAULT_WEIGHT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"AS_KIT_WEIGHT_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError("AS_KIT_WEIGHT_CAP must be non-negative")
    return cap


def _check_order(D: int) -> None:
    if D < 0:
        raise ValueError(f"order must be non-negative, got {D}")
    cap = weight_cap()
    if D > cap:
        raise ValueError(f"order {D} exceeds the weight cap {cap}")


def _field_of(c):
    if isinstance(c, CyclotomicNumber):
        return c.p
    if isinstance(c, (int, Rational)):
        return None
    raise TypeError(f"unsupported coefficient {c!r}")


class TruncatedSeries:
    """sum_{j<=order} coeffs[j] z^j, with all coefficients in one field.

    ``p`` is None for rational series; otherwise every coefficient is a
    CyclotomicNumber over Q(zeta_p).
    """

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        fields = {_field_of(c) for c in coeffs} - {None}
        if len(fields) > 1:
            raise SeriesMismatch(f"coefficients from several fields: {sorted(fields)}")
        if p is None and fields:
            p = fields.pop()
        elif fields and fields.pop() != p:
            raise SeriesMismatch("coefficient field does not match p")
        if p is None:
            self.coeffs = tuple(Fraction(c) for c in coeffs)
        else:
            check_odd_prime(p)
            self.coeffs = tuple(
                c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.rational(p, c)
                for c in coeffs
            )
        self.p = p

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, p={self.p})"

    def _check(self, other):
        if self.order != other.order:
            raise SeriesMismatch(f"order mismatch: {self.order} vs {other.order}")
        if self.p != other.p:
            raise SeriesMismatch(f"field mismatch: p={self.p} vs p={other.p}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.p)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.p)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([c * other for c in self.coeffs], self.p)

    __rmul__ = __mul__

    def substitute_neg(self) -> "TruncatedSeries":
        """The series with z replaced by -z."""
        return TruncatedSeries([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)], self.p)

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs], self.p)

    def to_json(self):
        if self.p is None:
            return [[c.numerator, c.denominator] for c in self.coeffs]
        return [c.to_json() for c in self.coeffs]


def _one(p):
    return Fraction(1) if p is None else CyclotomicNumber.rational(p, 1)


def _zero(p):
    return Fraction(0) if p is None else CyclotomicNumber(p)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    D = a.order
    out = [_zero(a.p) for _ in range(D + 1)]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(D + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return TruncatedSeries(out, a.p)


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if not a0:
        raise ZeroDivisionError("not invertible: zero constant term")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = _zero(a.p)
        for i in range(1, n + 1):
            if a.coeffs[i]:
                acc = acc + a.coeffs[i] * out[n - i]
        out.append(-acc * inv0)
    return TruncatedSeries(out, a.p)


def exp_series(D: int, scale=1) -> TruncatedSeries:
    """sum_{j<=D} scale^j z^j / j!"""
    p = scale.p if isinstance(scale, CyclotomicNumber) else None
    coeffs = [_one(p)]
    term = _one(p)
    for j in range(1, D + 1):
        term = term * scale * Fraction(1, j)
        coeffs.append(term)
    return TruncatedSeries(coeffs, p)


@lru_cache(maxsize=None)
def series_at_power(p: int, e: int, D: int) -> TruncatedSeries:
    """Taylor coefficients of ((w-1)/(w+1)) * ((w e^z + 1)/(w e^z - 1)) at w = zeta^e.

    Any exponent e prime to p is accepted; the public entry point restricts
    to the representatives 1..(p-1)/2.
    """
    check_odd_prime(p)
    if e % p == 0:
        raise ValueError(f"exponent {e} is divisible by p={p}")
    _check_order(D)
    w = zeta(p, e)
    ez = exp_series(D).map_coeffs(lambda c: CyclotomicNumber.rational(p, c))
    num = ez * w
    den = ez * w
    num = TruncatedSeries([num[0] + 1] + list(num.coeffs[1:]), p)
    den = TruncatedSeries([den[0] - 1] + list(den.coeffs[1:]), p)
    return series_mul(num, series_invert(den)) * ((w - 1) / (w + 1))


def as_generating_series(p: int, k: int, D: int) -> TruncatedSeries:
    check_odd_prime(p)
    if not 1 <= k <= (p - 1) // 2:
        raise ValueError(f"k must lie in 1..{(p - 1) // 2}, got {k}")
    return series_at_power(p, k, D)


@lru_cache(maxsize=None)
def l_generating_series(D: int) -> TruncatedSeries:
    """Coefficients of sqrt(z)/tanh(sqrt(z)) = 1 + z/3 - z^2/45 + ...

    Uses z/tanh(z) = cosh(z) / (sinh(z)/z); both factors are even, so the
    quotient is formed directly in the variable w = z^2.
    """
    _check_order(D)
    fact = [1]
    for n in range(1, 2 * D + 2):
        fact.append(fact[-1] * n)
    cosh_w = TruncatedSeries([Fraction(1, fact[2 * n]) for n in range(D + 1)])
    sinhc_w = TruncatedSeries([Fraction(1, fact[2 * n + 1]) for n in range(D + 1)])
    return series_mul(cosh_w, series_invert(sinhc_w))
