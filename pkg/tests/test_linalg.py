from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hodge_derham.errors import ContainmentError
from hodge_derham.linalg import (
    RatMatrix,
    Subspace,
    image_basis,
    induced_map,
    kernel_basis,
    rank,
    subquotient,
)


def test_rank_examples():
    assert rank(RatMatrix.identity(2)) == 2
    assert rank(RatMatrix.zeros(2, 2)) == 0
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(3)).dim == 0
    assert kernel_basis(RatMatrix.zeros(2, 4)).dim == 4
    K = kernel_basis(RatMatrix.from_rows([[1, 1]]))
    assert K.dim == 1
    assert K.same_as(Subspace.span(2, [(1, -1)]))


def test_image_examples():
    assert image_basis(RatMatrix.identity(3)).dim == 3
    assert image_basis(RatMatrix.zeros(3, 2)).dim == 0
    im = image_basis(RatMatrix.from_rows([[1], [2]]))
    assert im.same_as(Subspace.span(2, [(1, 2)]))


def test_subquotient_examples():
    full = Subspace.full(3)
    assert subquotient(full, full).dim == 0
    assert subquotient(full, Subspace.zero(3)).dim == 3
    Z = Subspace.span(3, [(1, 0, 0), (0, 1, 0)])
    B = Subspace.span(3, [(1, 0, 0)])
    Q = subquotient(Z, B)
    assert Q.dim == 1
    assert Q.representatives() == [(0, 1, 0)]


def test_subquotient_rejects_non_containment():
    Z = Subspace.span(3, [(1, 0, 0)])
    B = Subspace.span(3, [(0, 1, 0)])
    with pytest.raises(ContainmentError):
        subquotient(Z, B)


def test_induced_map_examples():
    Z = Subspace.span(2, [(1, 0), (0, 1)])
    B = Subspace.span(2, [(1, 0)])
    Q = subquotient(Z, B)
    assert induced_map(RatMatrix.identity(2), Q, Q) == RatMatrix.identity(1)
    assert induced_map(RatMatrix.zeros(2, 2), Q, Q).is_zero()
    # e2 -> e1, which lies in B
    assert induced_map(RatMatrix.from_rows([[0, 1], [0, 0]]), Q, Q).is_zero()


def test_induced_map_names_failed_containment():
    Q = subquotient(Subspace.span(2, [(1, 0)]), Subspace.zero(2))
    swap = RatMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(ContainmentError, match=r"f\(Z_src\)"):
        induced_map(swap, Q, Q)
    Q2 = subquotient(Subspace.full(2), Subspace.span(2, [(1, 0)]))
    with pytest.raises(ContainmentError, match=r"f\(B_src\)"):
        induced_map(swap, Q2, Q2)


def test_bounds_checked_and_exact():
    M = RatMatrix(2, 2)
    with pytest.raises(IndexError):
        M[2, 0]
    M[0, 1] = Fraction(1, 3)
    assert M[0, 1] * 3 == 1
    with pytest.raises(TypeError):
        M[0, 0] = 0.5


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = [[draw(small_ints) for _ in range(c)] for _ in range(r)]
    return RatMatrix.from_rows(rows, cols=c), rows, r, c


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_against_sympy(data):
    M, rows, r, c = data
    expected = sp.Matrix(r, c, [x for row in rows for x in row]).rank() if r and c else 0
    assert rank(M) == expected
    K = kernel_basis(M)
    assert K.dim + rank(M) == c
    for v in K.vectors:
        assert not M.apply(v)
    assert image_basis(M).dim == rank(M)


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=5), st.data())
def test_subquotient_dim_basis_independent(data, draw):
    M, rows, r, c = data
    Z = kernel_basis(M)
    if not Z.dim:
        return
    # B = span of a few combinations of Z
    coeffs = [[draw.draw(small_ints) for _ in range(Z.dim)] for _ in range(draw.draw(st.integers(0, 3)))]
    bvecs = [tuple(sum(k * v[i] for k, v in zip(cs, Z.basis)) for i in range(c)) for cs in coeffs]
    B = Subspace.span(c, bvecs)
    base = subquotient(Z, B).dim
    # rescale and reorder the generating sets
    scales = [draw.draw(st.sampled_from([1, -1, 2, Fraction(1, 3)])) for _ in Z.basis]
    Z2 = Subspace.span(c, [tuple(s * x for x in v) for s, v in reversed(list(zip(scales, Z.basis)))])
    B2 = Subspace.span(c, list(reversed(bvecs)) + [tuple(2 * x for x in v) for v in bvecs])
    assert subquotient(Z2, B2).dim == base == Z.dim - B.dim


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_induced_map_composition(n, draw):
    """Maps of complexes ``C -> C' -> C''`` where every space is Q^n with the
    same Z/B: take diagonal-ish maps preserving a flag."""
    # flag B = span(e_0..e_{b-1}) <= Z = span(e_0..e_{z-1})
    z = draw.draw(st.integers(0, n))
    b = draw.draw(st.integers(0, z))
    Z = Subspace.coordinate(n, range(z))
    B = Subspace.coordinate(n, range(b))
    Q = subquotient(Z, B)

    def flag_map():
        # upper triangular w.r.t. the blocks [0,b), [b,z), [z,n) preserves B and Z
        M = RatMatrix(n, n)
        for i in range(n):
            for j in range(n):
                blk = lambda k: 0 if k < b else (1 if k < z else 2)
                if blk(i) <= blk(j):
                    M[i, j] = draw.draw(small_ints)
        return M

    f, g = flag_map(), flag_map()
    assert induced_map(g @ f, Q, Q) == induced_map(g, Q, Q) @ induced_map(f, Q, Q)
