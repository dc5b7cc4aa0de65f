import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsphere.dl_core import (
    INFINITY, Element, adem_normalize, apply_Q, binom_mod2, dim_lower, excess, format_element,
    is_admissible, is_generator, to_lower, to_upper,
)
from loopsphere.loopspace import BasisQuery, census, enumerate_basis, upper_generators


def test_binom_mod2_matches_pascal_rows():
    row = 1  # bit b of row is binom(a, b) mod 2
    for a in range(4097):
        for b in range(a + 1):
            assert binom_mod2(a, b) == (row >> b) & 1
        row ^= row << 1


def test_binom_mod2_examples():
    assert binom_mod2(7, 2) == 1
    assert binom_mod2(3, 4) == 0
    assert binom_mod2(-1, 0) == 0
    assert all(binom_mod2(2 * d - 1, 1) == 1 for d in range(1, 200))
    assert math.comb(7, 2) % 2 == 1


def test_dim_lower_examples():
    assert dim_lower((5, 6), 2) == 25
    assert dim_lower((), 7) == 7
    assert dim_lower((1, 2, 3, 4, 5, 6, 7), 1) == 897


def test_to_upper_examples():
    assert to_upper((5, 6), 2) == (15, 8)
    assert all(to_upper((j,), n) == (j + n,) for j in range(8) for n in range(1, 10))
    assert to_upper((), 3) == ()


def test_excess_examples():
    assert excess((15, 8)) == 7
    assert excess(()) == INFINITY
    assert excess((9, 5)) == 4


def test_round_trip_random_words():
    rng = random.Random(20240601)
    for _ in range(100_000):
        n = rng.randint(1, 64)
        J = tuple(rng.randint(0, 40) for _ in range(rng.randint(0, 7)))
        I = to_upper(J, n)
        assert to_lower(I, n) == J
        assert to_upper(to_lower(I, n), n) == I
        assert n + sum(I) == dim_lower(J, n)


@given(st.integers(1, 200), st.lists(st.integers(-5, 300), max_size=8))
def test_round_trip_property(n, I):
    assert to_upper(to_lower(I, n), n) == tuple(I)


def test_adem_examples():
    assert adem_normalize([[(5, 2)]], 1) == Element.zero(1)
    assert apply_Q(5, apply_Q(2, Element.x(1))) == Element.zero(1)
    sq = Element.x(3) * Element.x(3)
    assert apply_Q(3, Element.x(3)) == sq
    assert adem_normalize([[(3,)]], 3) == sq
    g = Element.word((9, 5), 3)
    assert adem_normalize(g) == g
    assert adem_normalize([[(9, 5)]], 3) == g


def test_products():
    x1 = Element.x(1)
    a = Element.word((3,), 1)
    assert x1 * Element.one(1) == x1
    assert a * a == a ** 2
    assert (x1 + a) * x1 == x1 * x1 + a * x1
    assert format_element(a * a) == "(Q^3x_1)^2"


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 6), st.lists(st.integers(0, 30), min_size=1, max_size=4))
def test_normal_form_is_admissible_and_graded(n, I):
    e = adem_normalize([[tuple(I)]], n)
    for p in e.terms:
        for w in p:
            assert is_generator(w, n) or w == ()
        assert sum(n + sum(w) for w in p) == n + sum(I) or not e
    assert adem_normalize(e) == e


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_basis_matches_independent_upper_enumeration(n):
    cap = 60
    lower = sorted(to_upper(J, n) for J in enumerate_basis(BasisQuery(INFINITY, n, cap)))
    assert lower == sorted(upper_generators(n, cap))


@pytest.mark.parametrize("l,n,cap", [(2, 1, 48), (4, 2, 48), (8, 3, 48), (INFINITY, 1, 32)])
def test_census_counts_normal_forms(l, n, cap):
    c = census(l, n, cap, products=True)
    monos = enumerate_basis(BasisQuery(l, n, cap), products=True)
    counts = {}
    for p in monos:
        d = sum(n + sum(w) for w in p)
        counts[d] = counts.get(d, 0) + 1
    assert {d: k for d, k in c.items() if k} == counts


def test_generators_are_admissible_with_large_excess():
    for n in range(1, 5):
        for J in enumerate_basis(BasisQuery(8, n, 80)):
            I = to_upper(J, n)
            assert is_admissible(I)
            assert excess(I) > n or not I
