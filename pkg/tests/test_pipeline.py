from itertools import permutations

import pytest

from hodge_derham.catalog import CATALOG
from hodge_derham.cech import CechSpec, MonomialLocalization
from hodge_derham.derham import strand_double_complex
from hodge_derham.errors import InputError
from hodge_derham.linalg import RatMatrix
from hodge_derham.pipeline import (
    compare_embeddings,
    hodge_derham_ss,
    psi_chain_map,
    smooth_case_ss,
    variety_dimension,
)
from hodge_derham.plus import iterated_phi
from hodge_derham.specseq import shifted_morphism_from_map


def test_hodge_derham_examples():
    rep = hodge_derham_ss(CechSpec(1, ((1,),)))
    assert rep.nonzero(2) == {(1, 1): 1}
    assert {i: v for i, v in rep.derham_homology.items() if v} == {0: 1}

    rep = hodge_derham_ss(CechSpec(2, ((1, 0), (0, 1))))
    assert rep.nonzero(2) == {(2, 2): 1}
    assert rep.derham_homology[0] == 1

    rep = hodge_derham_ss(CechSpec(2, ((1, 1),)))
    assert rep.nonzero(2) == {(1, 1): 2, (2, 1): 1}
    assert {i: v for i, v in rep.derham_homology.items() if v} == {1: 1, 2: 2}


def test_reports_are_independent_copies():
    a = hodge_derham_ss(CechSpec(1, ((1,),)))
    a.pages[2][(1, 1)] = 99
    assert hodge_derham_ss(CechSpec(1, ((1,),))).page(2)[(1, 1)] == 1


@pytest.mark.parametrize("s,n,cell", [(2, 2, (0, 0)), (0, 2, (2, 2)), (1, 2, (1, 1)), (3, 3, (0, 0))])
def test_smooth_case_examples(s, n, cell):
    assert smooth_case_ss(s, n).nonzero(2) == {cell: 1}


def test_smooth_case_rejects_bad_input():
    with pytest.raises(InputError):
        smooth_case_ss(3, 2)


def test_variety_dimension():
    assert variety_dimension(CATALOG["two_lines"]) == 1
    assert variety_dimension(CATALOG["plane_and_line"]) == 2
    assert variety_dimension(CATALOG["three_axes"]) == 1
    assert variety_dimension(CATALOG["point_A2"]) == 0


def test_psi_examples():
    # I = (x), one new coordinate: x^-1 dx -> (xy)^-1 dx ^ dy
    f = psi_chain_map(CechSpec(1, ((1,),)), 1)
    f.check()
    src = f.source.labels[(1, 1)]
    tgt = f.target.labels[(2, 2)]
    assert src == [((0,), (0,))] and tgt == [((0, 1), (0, 1))]
    assert f.block(1, 1).to_lists() == [[1]]
    # t = 0 is the identity
    spec = CATALOG["two_lines"]
    g = psi_chain_map(spec, 0)
    for (p, q), d in g.source.dims.items():
        if d:
            assert g.block(p, q) == RatMatrix.identity(d)
    with pytest.raises(InputError):
        psi_chain_map(spec, 1, CATALOG["plane_and_line"])


def test_psi_generator_of_point_embedding():
    # the generator (x1 .. xt)^-1 dx1 ^ .. ^ dxt sits at (t, t) and is hit by psi
    for t in (1, 2, 3):
        spec = CechSpec(1, ((1,),))
        f = psi_chain_map(spec, t)
        tgt = f.target.labels[(1 + t, 1 + t)]
        assert tgt == [(tuple(range(1 + t)), tuple(range(1 + t)))]


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_psi_is_chain_map_and_page_iso(name):
    spec = CATALOG[name]
    for t in (1, 2):
        f = psi_chain_map(spec, t)
        f.check()
        mor = shifted_morphism_from_map(f)
        assert all(ok for r, ok in mor.iso_pages.items() if r >= 2)


def test_compare_examples():
    rep = compare_embeddings(CechSpec(1, ((1,),)), CechSpec(2, ((1, 0), (0, 1))))
    assert rep.verdict and rep.shift == (1, 1) and rep.psi_checked
    rep = compare_embeddings(CechSpec(2, ((1, 1),)), CechSpec(3, ((1, 1, 0), (0, 0, 1))))
    assert rep.verdict
    same = CATALOG["three_axes"]
    rep = compare_embeddings(same, same)
    assert rep.verdict and rep.shift == (0, 0)


def test_compare_wrong_shift_reports_first_mismatch():
    rep = compare_embeddings(CechSpec(1, ((1,),)), CechSpec(2, ((1, 0), (0, 1))), shift=(0, 0))
    assert not rep.verdict
    assert rep.first_mismatch.startswith("E_2")


def test_compare_ignores_e1():
    rep = compare_embeddings(CATALOG["two_lines"], CATALOG["two_lines"].extend(1))
    assert rep.verdict
    assert all(r == 1 for r, *_ in rep.e1_differences)


def _permuted_pages(spec, perm):
    return hodge_derham_ss(spec.permuted(perm)).invariants()


@pytest.mark.parametrize("name", ["two_lines", "plane_and_line", "three_axes"])
def test_permutation_equivariance(name):
    spec = CATALOG[name]
    base = hodge_derham_ss(spec).invariants()
    for perm in permutations(range(spec.n)):
        assert _permuted_pages(spec, perm) == base


@pytest.mark.parametrize("name", ["point_A1", "two_lines", "plane_and_line"])
@pytest.mark.parametrize("t", [1, 2])
def test_iterated_phi_matches_psi_blocks(name, t):
    """On the Cech summand T_sigma(U), psi is t-fold phi for that localization."""
    spec = CATALOG[name]
    f = psi_chain_map(spec, t)
    new_gens = tuple(range(spec.m, spec.m + t))
    new_vars = set(range(spec.n, spec.n + t))
    for (p, q), labs in f.source.labels.items():
        for U in {U for _, U in labs}:
            base = MonomialLocalization(spec.n, spec.sigma(U))
            src_cx, tgt_cx, maps = iterated_phi(base, t)
            cols = [i for i, (S, V) in enumerate(labs) if V == U]
            tgt_labs = f.target.labels[(p + t, q + t)]
            # the plus layers only see forms carrying every new dy
            rows = [i for i, (S, V) in enumerate(tgt_labs) if V == U + new_gens and new_vars <= set(S)]
            block = f.block(p, q)
            assert [labs[i][0] for i in cols] == src_cx.labels[p]
            assert [tgt_labs[i][0] for i in rows] == tgt_cx.labels[p + t]
            phi = maps[p]
            for a, i in enumerate(rows):
                for b, j in enumerate(cols):
                    assert block[i, j] == phi[a, b]
            others = set(range(len(tgt_labs))) - set(rows)
            assert all(block[i, j] == 0 for i in others for j in cols)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_report_invariants(name):
    spec = CATALOG[name]
    rep = hodge_derham_ss(spec)
    dim_y = variety_dimension(spec)
    for r in range(1, rep.r_stab + 1):
        for v in rep.page(r).values():
            assert isinstance(v, int) and v >= 0
    for i, v in rep.derham_homology.items():
        if v:
            assert 0 <= i <= 2 * dim_y
    assert sum(rep.e_infinity.values()) == sum(rep.abutment.values())
    D = strand_double_complex(spec)
    assert rep.r_stab == max(D.width, D.height) + 2
