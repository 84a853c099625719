"""Finite-dimensional graded commutative algebras modelling even-degree cohomology.

A ring is given by a basis of named homogeneous classes, rational structure
constants and a designated top-degree basis class playing the role of the
fundamental class.  Element coefficients live in Q(zeta_p).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from numbers import Rational

from .cyclotomic import CyclotomicNumber, FieldMismatch, check_odd_prime, galois_apply

__all__ = [
    "CohomologyRing",
    "RingElement",
    "RingError",
    "ring_point",
    "ring_cpn",
    "ring_tensor",
    "ring_from_table",
    "ring_cp2_cp2bar",
    "builtin_ring",
    "pair_fundamental",
    "graded_part",
]


class RingError(ValueError):
    pass


def _rat(x) -> Fraction:
    if isinstance(x, (list, tuple)) and len(x) == 2:
        num, den = x
        if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
            raise RingError(f"bad rational pair {x!r}")
        return Fraction(num, den)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    raise RingError(f"cannot read {x!r} as a rational number")


class CohomologyRing:
    """Graded commutative Q(zeta_p)-algebra with rational structure constants.

    ``mult`` maps basis index pairs (i, j) to a dict {index: Fraction}; pairs
    that are absent multiply to zero.  Construction validates grading,
    commutativity, unitality and associativity on every basis triple.
    """

    def __init__(self, p, top, basis, mult, fundamental, pontryagin=None):
        check_odd_prime(p)
        self.p = p
        self.top = top
        self.names = tuple(name for name, _ in basis)
        self.degrees = tuple(deg for _, deg in basis)
        self.index = {name: i for i, name in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise RingError("basis names must be unique")
        self.mult = {
            key: {k: Fraction(v) for k, v in vec.items() if v}
            for key, vec in mult.items()
        }
        # integral structure constants are stored as ints (cheaper products)
        self.mult = {key: {k: int(v) if v.denominator == 1 else v for k, v in vec.items()}
                     for key, vec in self.mult.items() if vec}
        if fundamental not in self.index:
            raise RingError(f"unknown fundamental class {fundamental!r}")
        self.fundamental = self.index[fundamental]
        self._validate()
        self.unit = self.degrees.index(0)
        self._tangent = None
        if pontryagin is not None:
            self._tangent = [self.element(x) for x in pontryagin]

    @property
    def dim(self) -> int:
        return len(self.names)

    def _validate(self):
        n = self.dim
        if self.top < 0 or self.top % 2:
            raise RingError(f"top degree must be even and non-negative, got {self.top}")
        for name, d in zip(self.names, self.degrees):
            if d < 0 or d % 2 or d > self.top:
                raise RingError(f"basis class {name!r} has invalid degree {d}")
        units = [i for i, d in enumerate(self.degrees) if d == 0]
        if len(units) != 1:
            raise RingError("there must be exactly one degree-0 basis class")
        u = units[0]
        if self.degrees[self.fundamental] != self.top:
            raise RingError("fundamental class must have the top degree")
        for (i, j), vec in self.mult.items():
            if not (0 <= i < n and 0 <= j < n):
                raise RingError(f"product ({i}, {j}) indexes outside the basis")
            target = self.degrees[i] + self.degrees[j]
            for k in vec:
                if not 0 <= k < n:
                    raise RingError(f"product ({i}, {j}) has a coefficient outside the basis")
                if self.degrees[k] != target:
                    raise RingError(
                        f"grading violated: {self.names[i]}*{self.names[j]} has a "
                        f"component on {self.names[k]} of degree {self.degrees[k]}, expected {target}"
                    )
        for i in range(n):
            if self.mult.get((u, i)) != {i: 1} or self.mult.get((i, u)) != {i: 1}:
                raise RingError(f"unit does not act as identity on {self.names[i]}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.mult.get((i, j), {}) != self.mult.get((j, i), {}):
                    raise RingError(f"commutativity fails for ({self.names[i]}, {self.names[j]})")
        for i, j, k in product(range(n), repeat=3):
            if u in (i, j, k) or self.degrees[i] + self.degrees[j] + self.degrees[k] > self.top:
                continue
            left = self._mul_vec(self._mul_vec({i: Fraction(1)}, {j: Fraction(1)}), {k: Fraction(1)})
            right = self._mul_vec({i: Fraction(1)}, self._mul_vec({j: Fraction(1)}, {k: Fraction(1)}))
            if left != right:
                a, b, c = self.names[i], self.names[j], self.names[k]
                raise RingError(f"associativity fails for ({a}, {b}, {c}): ({a}*{b})*{c} != {a}*({b}*{c})")

    def _mul_vec(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, s in self.mult.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * s
        return {k: v for k, v in out.items() if v}

    # -- elements --------------------------------------------------------

    def _coeff(self, c) -> CyclotomicNumber:
        if isinstance(c, CyclotomicNumber):
            if c.p != self.p:
                raise FieldMismatch("field mismatch")
            return c
        return CyclotomicNumber.rational(self.p, _rat(c))

    def element(self, data) -> "RingElement":
        """Build an element from a RingElement, a scalar, or a {name: coefficient} mapping."""
        if isinstance(data, RingElement):
            if data.ring is not self and data.ring != self:
                raise RingError("element belongs to another ring")
            return data
        if isinstance(data, dict):
            coeffs = [CyclotomicNumber(self.p)] * self.dim
            for name, c in data.items():
                if name not in self.index:
                    raise RingError(f"unknown basis class {name!r}")
                if isinstance(c, dict):
                    c = CyclotomicNumber.from_json(c)
                coeffs[self.index[name]] = self._coeff(c)
            return RingElement(self, coeffs)
        return self.one() * self._coeff(data)

    def zero(self) -> "RingElement":
        return RingElement(self, [CyclotomicNumber(self.p)] * self.dim)

    def one(self) -> "RingElement":
        return self.basis_element(self.names[self.unit])

    def basis_element(self, name) -> "RingElement":
        coeffs = [CyclotomicNumber(self.p)] * self.dim
        coeffs[self.index[name]] = CyclotomicNumber.rational(self.p, 1)
        return RingElement(self, coeffs)

    gen = basis_element

    def basis_in_degree(self, d):
        return [name for name, deg in zip(self.names, self.degrees) if deg == d]

    def tangent_pontryagin(self):
        """Pontryagin classes p_1, p_2, ... of the modelled manifold, if recorded."""
        if self._tangent is None:
            return None
        return list(self._tangent)

    def l_class(self) -> "RingElement":
        from .asclass import l_genus

        pont = self.tangent_pontryagin()
        if not pont:
            return self.one()
        return l_genus(pont)

    # -- comparison / serialization ---------------------------------------

    def _key(self):
        return (self.p, self.top, self.names, self.degrees,
                tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.mult.items())),
                self.fundamental)

    def __eq__(self, other):
        if not isinstance(other, CohomologyRing):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"CohomologyRing(p={self.p}, top={self.top}, basis={list(zip(self.names, self.degrees))})"

    def to_json(self) -> dict:
        n = self.dim
        mult = []
        for (i, j) in sorted(self.mult):
            vec = self.mult[(i, j)]
            mult.append([i, j, [[vec.get(k, Fraction(0)).numerator, vec.get(k, Fraction(0)).denominator]
                                for k in range(n)]])
        out = {
            "p": self.p,
            "top": self.top,
            "basis": [{"name": nm, "degree": d} for nm, d in zip(self.names, self.degrees)],
            "mult": mult,
            "fundamental": self.names[self.fundamental],
        }
        if self._tangent is not None:
            out["pontryagin"] = [x.to_json() for x in self._tangent]
        return out


class RingElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CohomologyRing, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ring.dim:
            raise RingError(f"expected {ring.dim} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.coeffs = coeffs

    def _same(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingError("elements of different rings")
            return other
        if isinstance(other, (int, Rational, CyclotomicNumber)):
            return None
        return NotImplemented

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        if o is None:
            o = self.ring.element(other)
        return RingElement(self.ring, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        if o is None:
            o = self.ring.element(other)
        return RingElement(self.ring, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        if o is None:
            if other == 1:
                return self
            return RingElement(self.ring, [a * other for a in self.coeffs])
        ring = self.ring
        out = [CyclotomicNumber(ring.p)] * ring.dim
        mult = ring.mult
        right = [(j, b) for j, b in enumerate(o.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in right:
                vec = mult.get((i, j))
                if not vec:
                    continue
                ab = a * b
                for k, s in vec.items():
                    out[k] = out[k] + (ab if s == 1 else ab * s)
        return RingElement(ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RingElement):
            return NotImplemented
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return (other.ring is self.ring or other.ring == self.ring) and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational, CyclotomicNumber)):
            return self == self.ring.element(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __getitem__(self, name):
        return self.coeffs[self.ring.index[name]]

    def degrees_present(self):
        return sorted({self.ring.degrees[i] for i, c in enumerate(self.coeffs) if c})

    def is_homogeneous(self, degree=None) -> bool:
        present = self.degrees_present()
        if not present:
            return True
        if len(present) > 1:
            return False
        return degree is None or present[0] == degree

    def graded_part(self, n: int) -> "RingElement":
        degs = self.ring.degrees
        return RingElement(self.ring, [c if degs[i] == n else CyclotomicNumber(self.ring.p)
                                       for i, c in enumerate(self.coeffs)])

    def positive_part(self) -> "RingElement":
        degs = self.ring.degrees
        return RingElement(self.ring, [c if degs[i] > 0 else CyclotomicNumber(self.ring.p)
                                       for i, c in enumerate(self.coeffs)])

    def galois(self, n: int) -> "RingElement":
        return RingElement(self.ring, [galois_apply(n, c) for c in self.coeffs])

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def pair_fundamental(self) -> CyclotomicNumber:
        return self.coeffs[self.ring.fundamental]

    def to_json(self) -> dict:
        out = {}
        for name, c in zip(self.ring.names, self.coeffs):
            if not c:
                continue
            if c.is_rational():
                r = c.rational_value()
                out[name] = [r.numerator, r.denominator]
            else:
                out[name] = c.to_json()
        return out

    def __repr__(self):
        return f"RingElement({self})"

    def __str__(self):
        terms = []
        for name, c in zip(self.ring.names, self.coeffs):
            if not c:
                continue
            s = str(c)
            if name == self.ring.names[self.ring.unit]:
                terms.append(s)
            elif s == "1":
                terms.append(name)
            elif s == "-1":
                terms.append("-" + name)
            elif c.is_rational():
                terms.append(f"{s}*{name}")
            else:
                terms.append(f"({s})*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def pair_fundamental(x: RingElement) -> CyclotomicNumber:
    return x.pair_fundamental()


def graded_part(x: RingElement, n: int) -> RingElement:
    return x.graded_part(n)


def ring_point(p: int) -> CohomologyRing:
    return CohomologyRing(p, 0, [("1", 0)], {(0, 0): {0: 1}}, "1")


def ring_cpn(N: int, p: int, gen: str = "a", pontryagin: bool = True) -> CohomologyRing:
    """Q(zeta_p)[a]/(a^(N+1)) with <a^N, [M]> = 1.

    The tangent Pontryagin classes of CP^N, (1 + a^2)^(N+1), are recorded
    unless ``pontryagin`` is false.
    """
    if N < 1:
        raise RingError(f"N must be at least 1, got {N}")
    names = ["1", gen] + [f"{gen}^{j}" for j in range(2, N + 1)]
    basis = [(names[j], 2 * j) for j in range(N + 1)]
    mult = {}
    for i in range(N + 1):
        for j in range(N + 1 - i):
            mult[(i, j)] = {i + j: 1}
    pont = None
    if pontryagin:
        from math import comb

        pont = [{names[2 * j]: comb(N + 1, j)} for j in range(1, N // 2 + 1)]
    return CohomologyRing(p, 2 * N, basis, mult, names[N], pontryagin=pont)


def ring_tensor(A: CohomologyRing, B: CohomologyRing) -> CohomologyRing:
    if A.p != B.p:
        raise FieldMismatch("field mismatch")
    used = set(A.names)
    bnames = []
    for i, nm in enumerate(B.names):
        if i != B.unit and nm in used:
            nm = nm + "_2"
        bnames.append(nm)
    pairs = list(product(range(A.dim), range(B.dim)))
    names, basis = [], []
    for i, j in pairs:
        if i == A.unit and j == B.unit:
            nm = "1"
        elif j == B.unit:
            nm = A.names[i]
        elif i == A.unit:
            nm = bnames[j]
        else:
            nm = f"{A.names[i]}*{bnames[j]}"
        names.append(nm)
        basis.append((nm, A.degrees[i] + B.degrees[j]))
    pos = {pair: n for n, pair in enumerate(pairs)}
    mult = {}
    for (i1, j1), (i2, j2) in product(pairs, repeat=2):
        va = A.mult.get((i1, i2))
        vb = B.mult.get((j1, j2))
        if not va or not vb:
            continue
        vec = {}
        for ka, sa in va.items():
            for kb, sb in vb.items():
                vec[pos[(ka, kb)]] = sa * sb
        mult[(pos[(i1, j1)], pos[(i2, j2)])] = vec
    fund = names[pos[(A.fundamental, B.fundamental)]]
    # reorder so the unit comes first
    order = sorted(range(len(pairs)), key=lambda n: (basis[n][1], pairs[n][1], pairs[n][0]))
    remap = {old: new for new, old in enumerate(order)}
    basis = [basis[o] for o in order]
    mult = {(remap[i], remap[j]): {remap[k]: v for k, v in vec.items()} for (i, j), vec in mult.items()}
    pont = None
    ta, tb = A.tangent_pontryagin(), B.tangent_pontryagin()
    if ta is not None and tb is not None:
        pont = _tensor_pontryagin(A, B, ta, tb, names, pos, remap, basis)
    return CohomologyRing(A.p, A.top + B.top, basis, mult, fund, pontryagin=pont)


def _tensor_pontryagin(A, B, ta, tb, names, pos, remap, basis):
    # total Pontryagin class of a product is the product of the total classes
    # (rationally); expand it in the tensor basis
    def total(ring, classes):
        t = ring.one()
        for x in classes:
            t = t + x
        return t

    tA, tB = total(A, ta), total(B, tb)
    coeff = {}
    for i, a in enumerate(tA.coeffs):
        for j, b in enumerate(tB.coeffs):
            if a and b:
                coeff[remap[pos[(i, j)]]] = (a * b).rational_value()
    top = A.top + B.top
    out = []
    for m in range(1, top // 4 + 1):
        out.append({basis[k][0]: [v.numerator, v.denominator] for k, v in coeff.items() if basis[k][1] == 4 * m})
    return out


def ring_from_table(data) -> CohomologyRing:
    """Validate a structure-constant description (the JSON ring format).

    ``mult`` entries are ``[i, j, coeffs]`` with basis indices or names and a
    full coefficient list (rational pairs, ints or "a/b" strings) or a
    {name: coefficient} mapping.  Products with the unit may be omitted, as
    may one of each transposed pair; explicit entries are checked as given.
    """
    try:
        p = data["p"]
        top = data["top"]
        basis = [(b["name"], b["degree"]) for b in data["basis"]]
        fundamental = data["fundamental"]
        rows = data.get("mult", [])
    except (KeyError, TypeError, AttributeError) as exc:
        raise RingError(f"malformed ring description: missing {exc}") from None
    names = [b[0] for b in basis]
    idx = {nm: i for i, nm in enumerate(names)}

    def index_of(x):
        if isinstance(x, int) and not isinstance(x, bool):
            return x
        if x in idx:
            return idx[x]
        raise RingError(f"unknown basis reference {x!r}")

    mult = {}
    for row in rows:
        if len(row) != 3:
            raise RingError(f"malformed mult row {row!r}")
        i, j, coeffs = index_of(row[0]), index_of(row[1]), row[2]
        if isinstance(coeffs, dict):
            vec = {index_of(k): _rat(v) for k, v in coeffs.items()}
        else:
            if len(coeffs) != len(basis):
                raise RingError(f"mult row ({row[0]}, {row[1]}) needs {len(basis)} coefficients")
            vec = {k: _rat(v) for k, v in enumerate(coeffs)}
        vec = {k: v for k, v in vec.items() if v}
        if (i, j) in mult and mult[(i, j)] != vec:
            raise RingError(f"conflicting entries for ({names[i] if 0 <= i < len(names) else i}, ...)")
        mult[(i, j)] = vec
    units = [i for i, (_, d) in enumerate(basis) if d == 0]
    if len(units) == 1:
        u = units[0]
        for i in range(len(basis)):
            mult.setdefault((u, i), {i: Fraction(1)})
            mult.setdefault((i, u), {i: Fraction(1)})
    for (i, j), vec in list(mult.items()):
        mult.setdefault((j, i), vec)
    return CohomologyRing(p, top, basis, mult, fundamental, pontryagin=data.get("pontryagin"))


def ring_cp2_cp2bar(p: int) -> CohomologyRing:
    """CP^2 # -CP^2: basis 1, a, b, v with a^2 = v, b^2 = -v, ab = 0, <v, [M]> = 1."""
    return ring_from_table({
        "p": p,
        "top": 4,
        "basis": [{"name": "1", "degree": 0}, {"name": "a", "degree": 2},
                  {"name": "b", "degree": 2}, {"name": "v", "degree": 4}],
        "mult": [["a", "a", {"v": 1}], ["b", "b", {"v": -1}]],
        "fundamental": "v",
        # p_1 = 3a^2 + 3b^2 = 0
        "pontryagin": [{}],
    })


def builtin_ring(name: str, p: int) -> CohomologyRing:
    """Rings by name: point, s2, s2xs2, cpN (N >= 1), cp2#cp2bar."""
    key = name.lower()
    if key == "point":
        return ring_point(p)
    if key == "s2":
        return ring_cpn(1, p, pontryagin=False)
    if key == "s2xs2":
        return ring_tensor(ring_cpn(1, p, "a", pontryagin=False), ring_cpn(1, p, "b", pontryagin=False))
    if key in ("cp2#cp2bar", "cp2#-cp2"):
        return ring_cp2_cp2bar(p)
    if key.startswith("cp") and key[2:].isdigit():
        return ring_cpn(int(key[2:]), p)
    raise RingError(f"unknown builtin ring {name!r}")
