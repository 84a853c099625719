"""Exact arithmetic in the cyclotomic field Q(zeta_p) for odd primes p.

Elements are stored in the power basis 1, zeta, ..., zeta^(p-2) as a tuple of
integer numerators over one positive common denominator.  The relation
zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) is applied eagerly, so two values
are equal exactly when their coordinates agree.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "CyclotomicNumber",
    "FieldMismatch",
    "check_odd_prime",
    "is_prime",
    "zeta",
    "cyc_add",
    "cyc_mul",
    "cyc_inverse",
    "galois_apply",
    "to_complex",
]


class FieldMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
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


@lru_cache(maxsize=None)
def check_odd_prime(p) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError(f"p must be an integer, got {p!r}")
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


def _normalize(nums, den):
    if den == 1:
        return tuple(nums), 1
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    g = den
    for a in nums:
        if a:
            g = math.gcd(g, a)
            if g == 1:
                break
    if g != 1:
        nums = [a // g for a in nums]
        den //= g
    return tuple(nums), den


def _reduce_cyclic(vals, p):
    """Reduce a coefficient list in powers of zeta to the canonical basis."""
    folded = [0] * p
    for i, a in enumerate(vals):
        if a:
            folded[i % p] += a
    top = folded[p - 1]
    if top:
        return [a - top for a in folded[: p - 1]]
    return folded[: p - 1]


class CyclotomicNumber:
    """An element of Q(zeta_p), zeta = exp(2 pi i / p)."""

    __slots__ = ("_p", "_num", "_den", "_hash")

    def __init__(self, p: int, coords=None):
        check_odd_prime(p)
        self._p = p
        if coords is None:
            self._num, self._den = (0,) * (p - 1), 1
            self._hash = None
            return
        coords = [Fraction(c) for c in coords]
        if len(coords) != p - 1:
            raise ValueError(f"expected {p - 1} coordinates for p={p}, got {len(coords)}")
        den = 1
        for c in coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coords]
        self._num, self._den = _normalize(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, p, nums, den):
        obj = cls.__new__(cls)
        obj._p = p
        if den == 1:
            obj._num, obj._den = tuple(nums), 1
        else:
            obj._num, obj._den = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, p: int, value) -> "CyclotomicNumber":
        check_odd_prime(p)
        value = Fraction(value)
        nums = [0] * (p - 1)
        nums[0] = value.numerator
        return cls._raw(p, nums, value.denominator)

    @classmethod
    def from_powers(cls, p: int, powers) -> "CyclotomicNumber":
        """Build sum(powers[e] * zeta^e) for any integer exponents e."""
        check_odd_prime(p)
        vals = [Fraction(0)] * p
        for e, c in powers.items():
            vals[e % p] += Fraction(c)
        den = 1
        for c in vals:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in vals]
        return cls._raw(p, _reduce_cyclic(ints, p), den)

    # -- accessors -------------------------------------------------------

    @property
    def p(self) -> int:
        return self._p

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return Fraction(self._num[0], self._den)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other._p != self._p:
                raise FieldMismatch(f"field mismatch: Q(zeta_{self._p}) vs Q(zeta_{other._p})")
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.rational(self._p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            nums = [a + b for a, b in zip(self._num, other._num)]
            return CyclotomicNumber._raw(self._p, nums, d1)
        nums = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
        return CyclotomicNumber._raw(self._p, nums, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._p, [-a for a in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return CyclotomicNumber._raw(self._p, [a - b for a, b in zip(self._num, other._num)], d1)
        nums = [a * d2 - b * d1 for a, b in zip(self._num, other._num)]
        return CyclotomicNumber._raw(self._p, nums, d1 * d2)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, CyclotomicNumber):
            if other._p != self._p:
                raise FieldMismatch(f"field mismatch: Q(zeta_{self._p}) vs Q(zeta_{other._p})")
        elif isinstance(other, int) and not isinstance(other, bool):
            return CyclotomicNumber._raw(self._p, [a * other for a in self._num], self._den)
        elif isinstance(other, Fraction):
            c = other.numerator
            return CyclotomicNumber._raw(self._p, [a * c for a in self._num], self._den * other.denominator)
        else:
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        p = self._p
        an, bn = self._num, other._num
        if not any(bn[1:]):
            c = bn[0]
            return CyclotomicNumber._raw(p, [a * c for a in an], self._den * other._den)
        if not any(an[1:]):
            c = an[0]
            return CyclotomicNumber._raw(p, [b * c for b in bn], self._den * other._den)
        # cyclic convolution modulo zeta^p = 1, then drop the zeta^(p-1) slot
        acc = [0] * p
        for i, a in enumerate(an):
            if not a:
                continue
            for j, b in enumerate(bn):
                if b:
                    acc[(i + j) % p] += a * b
        top = acc[p - 1]
        nums = [x - top for x in acc[: p - 1]] if top else acc[: p - 1]
        return CyclotomicNumber._raw(p, nums, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        return cyc_inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyc_inverse(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * cyc_inverse(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else cyc_inverse(self)
        n = abs(n)
        result = CyclotomicNumber.rational(self._p, 1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "CyclotomicNumber":
        return galois_apply(self._p - 1, self)

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self._p == other._p and self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._p, self._num, self._den))
        return self._hash

    def __bool__(self):
        return any(self._num)

    def __repr__(self):
        return f"CyclotomicNumber({self._p}, {[str(c) for c in self.coords]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"p": self._p, "coords": [[c.numerator, c.denominator] for c in self.coords]}

    @classmethod
    def from_json(cls, obj) -> "CyclotomicNumber":
        p = obj["p"]
        coords = []
        for pair in obj["coords"]:
            num, den = pair
            if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
                raise ValueError(f"bad rational pair {pair!r}")
            coords.append(Fraction(num, den))
        return cls(p, coords)


def zeta(p: int, k: int = 1) -> CyclotomicNumber:
    """Return zeta^k in canonical form."""
    return CyclotomicNumber.from_powers(p, {k: 1})


def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    if a.p != b.p:
        raise FieldMismatch("field mismatch")
    return a + b


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    if a.p != b.p:
        raise FieldMismatch("field mismatch")
    return a * b


# -- polynomial helpers over Q (lists of Fractions, low degree first) -------

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_divmod(f, g):
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    lead = g[-1]
    while len(f) >= len(g) and f:
        c = f[-1] / lead
        shift = len(f) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] -= c * b
        _trim(f)
    return _trim(q), f


def _poly_sub_mul(a, q, b):
    """a - q*b."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _trim(out)


def cyc_inverse(a: CyclotomicNumber) -> CyclotomicNumber:
    """Inverse via the extended Euclidean algorithm modulo Phi_p(x)."""
    if a.is_zero():
        raise ZeroDivisionError("division by zero")
    p = a.p
    if a.is_rational():
        return CyclotomicNumber.rational(p, 1 / a.rational_value())
    phi = [Fraction(1)] * p
    f = _trim(list(a.coords))
    # invariant: s_i * a == r_i  (mod phi)
    r0, r1 = phi, f
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    # r1 is a nonzero constant since Phi_p is irreducible
    c = r1[0]
    inv = [x / c for x in s1]
    _, rem = _poly_divmod(inv, phi) if len(inv) >= p else (None, inv)
    rem = list(rem) + [Fraction(0)] * (p - len(rem))
    return CyclotomicNumber.from_powers(p, dict(enumerate(rem)))


def galois_apply(n: int, a: CyclotomicNumber) -> CyclotomicNumber:
    """Apply the automorphism zeta -> zeta^n."""
    p = a.p
    if n % p == 0:
        raise ValueError(f"n={n} is not a unit modulo {p}")
    vals = [0] * p
    for i, c in enumerate(a._num):
        if c:
            vals[(i * n) % p] += c
    return CyclotomicNumber._raw(p, _reduce_cyclic(vals, p), a._den)


def to_complex(a: CyclotomicNumber) -> complex:
    p = a.p
    total = 0j
    for i, c in enumerate(a._num):
        if c:
            total += c * cmath.exp(2j * math.pi * i / p)
    return total / a._den
