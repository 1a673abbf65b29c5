from itertools import combinations
from math import comb, factorial

import pytest
import sympy as sp

from hodge_derham.bernstein import (
    bernstein_bound_check,
    bernstein_dimension,
    cech_dimension_bound,
    hilbert_function,
    lattice_count,
    leading_coefficient,
)
from hodge_derham.catalog import CATALOG
from hodge_derham.cech import MonomialLocalization
from hodge_derham.errors import InputError
from oracles import hilbert_polynomial, lattice_points


def loc(n, *sigma):
    return MonomialLocalization(n, frozenset(sigma))


def test_hilbert_examples():
    assert [hilbert_function(loc(1), v) for v in range(5)] == [1, 2, 3, 4, 5]
    assert [hilbert_function(loc(1, 0), v) for v in range(5)] == [1, 3, 5, 7, 9]
    # (0,0), (+-1,0), (+-2,0), (0,1), (+-1,1), (0,2)
    assert hilbert_function(loc(2, 0), 2) == 9 == lattice_points(2, {0}, 2)
    with pytest.raises(InputError):
        hilbert_function(loc(1), -1)


def test_polynomial_ring_counts():
    for n in range(4):
        for v in range(6):
            assert hilbert_function(loc(n), v) == comb(v + n, n)


@pytest.mark.parametrize("n", range(0, 5))
def test_dimension_and_multiplicity(n):
    for c in range(n + 1):
        for sigma in combinations(range(n), c):
            L = MonomialLocalization(n, frozenset(sigma))
            data = bernstein_dimension(L)
            assert data.fitted_degree == n
            assert data.leading_multiplicity == 2 ** c
            assert bernstein_bound_check(L)
            for v, h in data.samples:
                if v <= n + 2:
                    assert h == lattice_count(L, v)
            counts = [h for _, h in data.samples]
            assert counts == sorted(counts)


@pytest.mark.parametrize("n,sigma", [(1, {0}), (2, set()), (2, {1}), (3, {0, 2}), (3, {0, 1, 2})])
def test_against_interpolated_polynomial(n, sigma):
    poly, v = hilbert_polynomial(n, sigma)
    L = MonomialLocalization(n, frozenset(sigma))
    data = bernstein_dimension(L)
    assert sp.degree(poly, v) == data.fitted_degree
    lead = sp.Poly(poly, v).LC()
    assert lead == sp.Rational(leading_coefficient(data).numerator, leading_coefficient(data).denominator)
    assert lead * factorial(n) == 2 ** len(sigma)
    # agrees from v = 0 on (no threshold needed)
    for k in range(0, 3 * n + 1):
        assert poly.subs(v, k) == hilbert_function(L, k)


def test_cech_dimension_bound():
    for spec in CATALOG.values():
        assert cech_dimension_bound(spec) == spec.n
