from fractions import Fraction

import pytest
from hypothesis import strategies as st

from as_kit.cyclotomic import CyclotomicNumber

SMALL_PRIMES = [3, 5, 7, 11, 13]

rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))


@st.composite
def cyclotomics(draw, p=None, bound=30):
    if p is None:
        p = draw(st.sampled_from(SMALL_PRIMES))
    coords = draw(st.lists(
        st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 9)),
        min_size=p - 1, max_size=p - 1))
    return CyclotomicNumber(p, coords)


@pytest.fixture
def fresh_cap(monkeypatch):
    monkeypatch.delenv("AS_KIT_WEIGHT_CAP", raising=False)
    return monkeypatch
