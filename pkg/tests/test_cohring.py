import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from as_kit.cohring import (
    CohomologyRing,
    RingError,
    builtin_ring,
    graded_part,
    pair_fundamental,
    ring_cp2_cp2bar,
    ring_cpn,
    ring_from_table,
    ring_point,
    ring_tensor,
)
from as_kit.cyclotomic import FieldMismatch, galois_apply, zeta

from conftest import cyclotomics


class TestCPN:
    def test_s2(self):
        r = ring_cpn(1, 7)
        a = r.gen("a")
        assert (a * a).is_zero()
        assert pair_fundamental(a) == 1

    def test_cp2_truncation(self):
        r = ring_cpn(2, 5)
        a = r.gen("a")
        assert a * a == r.gen("a^2")
        assert (a * a * a).is_zero()

    @pytest.mark.parametrize("N", [1, 2, 3, 4])
    def test_pairing(self, N):
        r = ring_cpn(N, 7)
        a = r.gen("a")
        assert pair_fundamental(a**N) == 1
        assert pair_fundamental(a ** (N - 1)) == 0
        assert pair_fundamental(r.one()) == 0

    def test_rejects_n0(self):
        with pytest.raises(RingError):
            ring_cpn(0, 7)

    def test_tangent_pontryagin(self):
        r = ring_cpn(4, 7)
        a = r.gen("a")
        p1, p2 = r.tangent_pontryagin()
        assert p1 == a**2 * 5 and p2 == a**4 * 10


class TestTensor:
    def test_s2xs2(self):
        r = ring_tensor(ring_cpn(1, 7, "a"), ring_cpn(1, 7, "b"))
        a, b = r.gen("a"), r.gen("b")
        assert (a * a).is_zero() and (b * b).is_zero()
        assert pair_fundamental(a * b) == 1
        assert (a + b) ** 2 == a * b * 2

    def test_unit_factor(self):
        A = ring_cpn(2, 5)
        T = ring_tensor(A, ring_point(5))
        assert T.names == A.names and T.degrees == A.degrees
        assert T.gen("a") ** 2 == T.gen("a^2")

    def test_name_collision(self):
        T = ring_tensor(ring_cpn(1, 7), ring_cpn(1, 7))
        assert set(T.basis_in_degree(2)) == {"a", "a_2"}

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            ring_tensor(ring_cpn(1, 5), ring_cpn(1, 7))


CP2_BAR_TABLE = {
    "p": 7, "top": 4,
    "basis": [{"name": "1", "degree": 0}, {"name": "a", "degree": 2},
              {"name": "b", "degree": 2}, {"name": "v", "degree": 4}],
    "mult": [[1, 1, [[0, 1], [0, 1], [0, 1], [1, 1]]],
             [2, 2, [[0, 1], [0, 1], [0, 1], [-1, 1]]]],
    "fundamental": "v",
}


class TestFromTable:
    def test_cp2_cp2bar(self):
        r = ring_from_table(CP2_BAR_TABLE)
        a, b, v = r.gen("a"), r.gen("b"), r.gen("v")
        assert a * a == v and b * b == -v and (a * b).is_zero()
        assert pair_fundamental(v) == 1
        assert pair_fundamental(a * a + b * b) == 0
        assert r == ring_cp2_cp2bar(7)

    def test_associativity_violation(self):
        data = {
            "p": 5, "top": 6,
            "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2},
                      {"name": "y", "degree": 2}, {"name": "s", "degree": 4},
                      {"name": "t", "degree": 6}],
            "mult": [["x", "x", {"s": 1}], ["x", "s", {"t": 1}], ["y", "s", {"t": 1}],
                     ["x", "y", {"s": 1}], ["y", "y", {"s": 0}]],
            "fundamental": "t",
        }
        # (x*y)*y = s*y = t but x*(y*y) = 0
        with pytest.raises(RingError, match="associativity fails for"):
            ring_from_table(data)

    def test_grading_violation(self):
        data = json.loads(json.dumps(CP2_BAR_TABLE))
        data["mult"].append([1, 2, [[0, 1], [1, 1], [0, 1], [0, 1]]])
        with pytest.raises(RingError, match="grading"):
            ring_from_table(data)

    def test_unit_clash(self):
        data = json.loads(json.dumps(CP2_BAR_TABLE))
        data["mult"].append([0, 1, [[0, 1], [0, 1], [1, 1], [0, 1]]])
        with pytest.raises(RingError):
            ring_from_table(data)

    def test_malformed(self):
        with pytest.raises(RingError):
            ring_from_table({"p": 7})
        bad = dict(CP2_BAR_TABLE, fundamental="w")
        with pytest.raises(RingError):
            ring_from_table(bad)

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_cpn_roundtrip(self, N):
        r = ring_cpn(N, 7)
        again = ring_from_table(json.loads(json.dumps(r.to_json())))
        assert again == r
        assert again.tangent_pontryagin() == r.tangent_pontryagin()

    def test_builtins(self):
        assert builtin_ring("s2", 7) == ring_cpn(1, 7, pontryagin=False)
        assert builtin_ring("cp3", 5).top == 6
        assert builtin_ring("CP2#CP2bar", 7) == ring_cp2_cp2bar(7)
        assert builtin_ring("s2xs2", 7).dim == 4
        assert builtin_ring("point", 3).top == 0
        with pytest.raises(RingError):
            builtin_ring("torus", 7)


class TestElements:
    def test_element_input(self):
        r = ring_cpn(2, 7)
        x = r.element({"a": [1, 2], "a^2": "3/4"})
        assert x["a"] == Fraction(1, 2) and x["a^2"] == Fraction(3, 4)
        y = r.element({"a": zeta(7).to_json()})
        assert y["a"] == zeta(7)
        assert r.element(3) == r.one() * 3
        with pytest.raises(RingError):
            r.element({"q": 1})

    def test_galois_on_elements(self):
        r = ring_cpn(1, 7)
        x = r.gen("a") * zeta(7)
        assert x.galois(3)["a"] == galois_apply(3, zeta(7))

    def test_graded_parts(self):
        r = ring_cpn(3, 7)
        a = r.gen("a")
        x = r.one() * 2 + a * 3 + a**3 * 5
        assert graded_part(x, 2) == a * 3
        assert graded_part(x, 4).is_zero()
        assert x.positive_part() == a * 3 + a**3 * 5
        assert sum((graded_part(x, d) for d in range(0, 7, 2)), r.zero()) == x
        assert (a * 3).is_homogeneous(2) and not x.is_homogeneous(2)

    def test_division_and_powers(self):
        r = ring_cpn(2, 5)
        a = r.gen("a")
        assert (a * 3) / 3 == a
        assert (a * zeta(5)) / zeta(5) == a
        assert a**0 == r.one()

    def test_cross_ring(self):
        with pytest.raises(RingError):
            ring_cpn(1, 7).gen("a") + ring_cpn(2, 7).gen("a")

    def test_json(self):
        r = ring_cpn(1, 7)
        assert (r.gen("a") * Fraction(1, 3)).to_json() == {"a": [1, 3]}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_pairing_linear(data):
    r = ring_tensor(ring_cpn(1, 7, "a"), ring_cpn(2, 7, "b"))
    xs = [r.element({nm: data.draw(cyclotomics(7, bound=5)) for nm in r.names}) for _ in range(2)]
    c = data.draw(cyclotomics(7, bound=5))
    assert pair_fundamental(xs[0] + xs[1] * c) == pair_fundamental(xs[0]) + c * pair_fundamental(xs[1])


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_ring_axioms_on_random_elements(data):
    r = ring_cp2_cp2bar(5)
    x, y, z = (r.element({nm: data.draw(cyclotomics(5, bound=4)) for nm in r.names}) for _ in range(3))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * r.one() == x
