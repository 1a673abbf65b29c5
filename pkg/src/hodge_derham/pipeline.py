"""Hodge-de Rham spectral sequence of ``Y = V(I)`` in ``A^n`` for monomial ``I``.

``E_1^{p,q} = H^q_I(Omega^p)`` (0-strand), abutting to ``H^*(Tot)``.  De Rham
homology is reported as ``H^dR_i(Y) = dim H^(2n-i)(Tot)``.

Re-embedding ``Y`` into ``A^(n+t)`` by adding ``t`` coordinates as
generators shifts everything by ``(t, t)``; ``psi_chain_map`` realizes that
shift as an explicit map of double complexes: wedge with
``(y_1 .. y_t)^-1 dy_1 ^ .. ^ dy_t``.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .cech import CechSpec, unit
from .derham import StrandDoubleComplex, strand_double_complex
from .errors import InputError, InvariantViolation
from .linalg import RatMatrix
from .specseq import (
    DoubleComplexMap,
    SpectralSequence,
    check_abutment,
    check_page_consistency,
    from_double_complex,
    shifted_morphism_from_map,
)

EmbeddingSpec = CechSpec
Cell = tuple[int, int]


def variety_dimension(spec: CechSpec) -> int:
    """``dim V(I)``: n minus the smallest set of variables meeting every generator's support."""
    if not spec.generators:
        return spec.n
    supports = [spec.support(i) for i in range(spec.m)]
    for c in range(spec.n + 1):
        for cover in combinations(range(spec.n), c):
            if all(s & set(cover) for s in supports):
                return spec.n - c
    raise AssertionError("unreachable: all variables always cover")


@dataclass
class SSReport:
    n: int
    generators: list[list[int]]
    r_stab: int
    pages: dict[int, dict[Cell, int]]
    abutment: dict[int, int]
    derham_homology: dict[int, int]

    def page(self, r: int) -> dict[Cell, int]:
        if r < 1:
            raise InputError("pages start at r = 1")
        return self.pages[min(r, self.r_stab)]

    def nonzero(self, r: int) -> dict[Cell, int]:
        return {c: v for c, v in self.page(r).items() if v}

    @property
    def e_infinity(self) -> dict[Cell, int]:
        return self.pages[self.r_stab]

    def invariants(self) -> dict:
        """Everything except the presentation (generators, r_stab).

        Pages are listed up to the first one after which nothing changes, since
        ``r_stab`` depends on the number of generators.
        """
        last = self.r_stab
        stable = self.nonzero(last)
        while last > 1 and self.nonzero(last - 1) == stable:
            last -= 1
        return {
            "pages": {r: self.nonzero(r) for r in range(1, last + 1)},
            "stable": self.nonzero(last),
            "abutment": {k: v for k, v in self.abutment.items() if v},
            "derham_homology": {i: v for i, v in self.derham_homology.items() if v},
        }


@lru_cache(maxsize=64)
def _strand(spec: CechSpec) -> StrandDoubleComplex:
    return strand_double_complex(spec)


@lru_cache(maxsize=64)
def spectral_sequence(spec: CechSpec) -> SpectralSequence:
    return from_double_complex(_strand(spec))


def _validate(spec: CechSpec, S: SpectralSequence, report: SSReport) -> None:
    for r, tab in report.pages.items():
        for c, v in tab.items():
            if not isinstance(v, int) or v < 0:
                raise InvariantViolation(f"E_{r}{c} is not a finite nonnegative integer: {v!r}")
    if not check_page_consistency(S):
        raise InvariantViolation(f"page consistency fails for {spec}")
    if not check_abutment(S):
        raise InvariantViolation(f"E_inf does not match the abutment for {spec}")
    for k, v in report.abutment.items():
        if v and k > 2 * spec.n:
            raise InvariantViolation(f"H^{k}(Tot) != 0 above 2n for {spec}")
    dimY = variety_dimension(spec)
    for i, v in report.derham_homology.items():
        if v and not 0 <= i <= 2 * dimY:
            raise InvariantViolation(f"H^dR_{i} != 0 outside 0..2 dim Y for {spec}")


def hodge_derham_ss(spec: CechSpec) -> SSReport:
    return copy.deepcopy(_report(spec))


@lru_cache(maxsize=64)
def _report(spec: CechSpec) -> SSReport:
    S = spectral_sequence(spec)
    pages = S.pages()
    abut = S.abutment()
    n = spec.n
    homology = {i: abut.get(2 * n - i, 0) for i in range(2 * n + 1)}
    report = SSReport(
        n=n,
        generators=[list(g) for g in spec.generators],
        r_stab=S.r_stab,
        pages=pages,
        abutment=abut,
        derham_homology=homology,
    )
    _validate(spec, S, report)
    return report


def coordinate_spec(n: int, coords) -> CechSpec:
    """Spec of the ideal generated by the given coordinates (0-based)."""
    return CechSpec(n, tuple(unit(n, j) for j in sorted(coords)), allow_empty=True)


def smooth_case_ss(s: int, n: int) -> SSReport:
    """``Y = A^s`` cut out by ``x_(s+1) = .. = x_n = 0`` inside ``A^n``."""
    if not 0 <= s <= n or n < 1:
        raise InputError(f"need 0 <= s <= n and n >= 1, got s={s}, n={n}")
    return hodge_derham_ss(coordinate_spec(n, range(s, n)))


def psi_chain_map(spec_a: CechSpec, t: int, spec_b: CechSpec | None = None) -> DoubleComplexMap:
    """Bidegree ``(t, t)`` map ``(S, U) -> (S + new coords, U + new generators)``."""
    if t < 0:
        raise InputError("the number of extra coordinates must be nonnegative")
    expected = spec_a.extend(t)
    if spec_b is not None and spec_b != expected:
        raise InputError("target spec is not the coordinate re-embedding of the source spec")
    A = _strand(spec_a)
    B = _strand(expected)
    new_vars = tuple(range(spec_a.n, spec_a.n + t))
    new_gens = tuple(range(spec_a.m, spec_a.m + t))
    blocks = {}
    for (p, q), labs in A.labels.items():
        if not labs:
            continue
        index = {lab: i for i, lab in enumerate(B.labels.get((p + t, q + t), []))}
        M = RatMatrix(len(index), len(labs))
        for c, (S, U) in enumerate(labs):
            M[index[(S + new_vars, U + new_gens)], c] = 1
        blocks[(p, q)] = M
    return DoubleComplexMap(A, B, (t, t), blocks)


@dataclass
class IndependenceReport:
    shift: tuple[int, int]
    pages: list[tuple[int, int, int, int, int]]  # (r, p, q, dim_A(p,q), dim_B(p+a,q+b)) for r >= 2
    abutment: list[tuple[int, int, int]]  # (m, dim H^m(A), dim H^(m+a+b)(B))
    verdict: bool
    first_mismatch: str | None = None
    psi_checked: bool = False
    psi_iso_pages: dict[int, bool] = field(default_factory=dict)
    e1_differences: list[tuple[int, int, int, int, int]] = field(default_factory=list)


def _is_coordinate_extension(spec_a: CechSpec, spec_b: CechSpec) -> bool:
    t = spec_b.n - spec_a.n
    return t >= 0 and spec_b == spec_a.extend(t)


def _page_rows(A: SSReport, B: SSReport, r: int, a: int, b: int):
    pa, pb = A.page(r), B.page(r)
    cells = {(p, q) for (p, q), v in pa.items() if v}
    cells |= {(p - a, q - b) for (p, q), v in pb.items() if v}
    return [(r, p, q, pa.get((p, q), 0), pb.get((p + a, q + b), 0)) for p, q in sorted(cells)]


def compare_embeddings(spec_a: CechSpec, spec_b: CechSpec, shift=None) -> IndependenceReport:
    """Compare pages ``r >= 2`` and abutments of two embeddings of the same ``Y``."""
    t = spec_b.n - spec_a.n
    if shift is None:
        shift = (t, t)
    elif isinstance(shift, int):
        shift = (shift, shift)
    a, b = (int(x) for x in shift)
    A, B = hodge_derham_ss(spec_a), hodge_derham_ss(spec_b)
    last = max(A.r_stab, B.r_stab)
    rows = []
    for r in range(2, last + 1):
        rows.extend(_page_rows(A, B, r, a, b))
    abut = []
    degrees = {k for k, v in A.abutment.items() if v} | {k - a - b for k, v in B.abutment.items() if v}
    for k in sorted(degrees):
        abut.append((k, A.abutment.get(k, 0), B.abutment.get(k + a + b, 0)))
    e1 = [row for row in _page_rows(A, B, 1, a, b) if row[3] != row[4]]

    mismatch = None
    for r, p, q, x, y in rows:
        if x != y:
            mismatch = f"E_{r}: A({p},{q}) = {x} but B({p + a},{q + b}) = {y}"
            break
    if mismatch is None:
        for k, x, y in abut:
            if x != y:
                mismatch = f"abutment: H^{k}(A) = {x} but H^{k + a + b}(B) = {y}"
                break

    psi_checked = False
    iso_pages: dict[int, bool] = {}
    if (a, b) == (t, t) and _is_coordinate_extension(spec_a, spec_b):
        f = psi_chain_map(spec_a, t, spec_b)
        mor = shifted_morphism_from_map(f, spectral_sequence(spec_a), spectral_sequence(spec_b))
        psi_checked = True
        iso_pages = {r: ok for r, ok in mor.iso_pages.items() if r >= 2}
        if mismatch is None:
            bad = [r for r, ok in iso_pages.items() if not ok]
            if bad:
                mismatch = f"psi does not induce an isomorphism on page E_{bad[0]}"
    return IndependenceReport(
        shift=(a, b),
        pages=rows,
        abutment=abut,
        verdict=mismatch is None,
        first_mismatch=mismatch,
        psi_checked=psi_checked,
        psi_iso_pages=iso_pages,
        e1_differences=e1,
    )
