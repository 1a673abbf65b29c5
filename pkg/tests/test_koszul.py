import pytest

from hodge_derham.cech import CechSpec, box
from hodge_derham.errors import InputError
from hodge_derham.koszul import (
    KoszulComplex,
    annihilator_dim,
    conormal_rank_check,
    conormal_sequence,
    ext_top_annihilator_check,
    koszul_complex,
    koszul_self_duality,
    quotient_dim,
    verify_koszul_resolution,
)


def test_c1_is_multiplication_by_z():
    K = koszul_complex(1, (0,))
    assert K.generic_differential(1) == [[{(1,): -1}]]
    # strand 1: e (coefficient 1) -> z
    assert K.differential(1, (1,)).to_lists() == [[-1]]


def test_c2_middle_differential_sign():
    K = koszul_complex(2, (0, 1))
    d2 = K.generic_differential(2)
    # e1 ^ e2 -> -z1 e2 + z2 e1
    assert d2 == [[{(0, 1): 1}], [{(1, 0): -1}]]
    d1 = K.generic_differential(1)
    # d1 d2 = z1 z2 - z2 z1 = 0, degree by degree
    for a in box(2, -1, 3):
        assert (K.differential(1, a) @ K.differential(2, a)).is_zero()
    assert len(d1[0]) == 2


def test_empty_coords_rejected():
    with pytest.raises(InputError):
        KoszulComplex(2, ())


def test_resolution_examples():
    K = koszul_complex(1, (0,))
    assert [K.homology_dims((a,))[0] for a in range(-2, 3)] == [0, 0, 1, 0, 0]
    assert verify_koszul_resolution(K, (-2, 2))
    K2 = koszul_complex(2, (0, 1))
    for a in box(2, -2, 2):
        dims = K2.homology_dims(a)
        assert dims[0] == quotient_dim(2, (0, 1), a)
        assert not any(v for t, v in dims.items() if t)
    Kx = koszul_complex(2, (0,))
    # H_0 = k[y]
    assert [Kx.homology_dims((0, b))[0] for b in range(-1, 3)] == [0, 1, 1, 1]


def test_annihilator_examples():
    assert ext_top_annihilator_check(1, (0,))
    x = CechSpec(1, ((1,),))
    assert annihilator_dim(x, 1, (-1,), (0,)) == 1
    assert annihilator_dim(x, 1, (-2,), (0,)) == 0
    # J = (x) in A^2: x^-1 k[y]
    xa = CechSpec(2, ((1, 0),))
    assert [annihilator_dim(xa, 1, (-1, b), (0,)) for b in range(-1, 3)] == [0, 1, 1, 1]
    assert annihilator_dim(xa, 1, (-2, 0), (0,)) == 0
    assert ext_top_annihilator_check(2, (0,))
    xy = CechSpec(2, ((1, 0), (0, 1)))
    assert annihilator_dim(xy, 2, (-1, -1), (0, 1)) == 1
    assert sum(annihilator_dim(xy, 2, a, (0, 1)) for a in box(2, -3, 3)) == 1
    assert ext_top_annihilator_check(2, (0, 1))


def test_ext_dims_concentrated_in_top_degree():
    K = koszul_complex(3, (0, 2))
    for a in box(3, -2, 2):
        dims = K.ext_dims(a)
        assert dims[0] == dims[1] == 0


def test_conormal_examples():
    assert conormal_rank_check(2, (1,))
    d = conormal_sequence(2, (1,), (1, 0))
    assert (d.cotangent, d.conormal) == (1, 0)
    d = conormal_sequence(2, (1,), (0, 1))
    assert (d.cotangent, d.conormal) == (0, 1)
    assert conormal_rank_check(2, (0, 1))
    assert sum(conormal_sequence(2, (0, 1), a).cotangent for a in box(2, -2, 2)) == 0
    assert conormal_rank_check(2, ())
    assert sum(conormal_sequence(2, (), a).conormal for a in box(2, -2, 2)) == 0


@pytest.mark.parametrize("n,coords", [(1, (0,)), (2, (1,)), (3, (0, 1, 2)), (4, (1, 3))])
def test_self_duality(n, coords):
    assert koszul_self_duality(koszul_complex(n, coords))
