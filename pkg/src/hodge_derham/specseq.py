"""Column-filtered spectral sequence of a bounded first-quadrant double complex.

Pages are computed directly inside the total complex.  With

    Z_r^p = {x in F^p Tot : dx in F^(p+r) Tot}

the page entries are

    E_r^{p,q} = Z_r^p / (Z_(r-1)^(p+1) + d Z_(r-1)^(p-r+1))      (in Tot^(p+q))

and ``d_r`` is the map induced by the total differential.  No bookkeeping of
representatives from page to page is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import DoubleComplex, TotalComplex
from .errors import ChainMapError, InputError, InvariantViolation
from .linalg import (
    RatMatrix,
    Subquotient,
    Subspace,
    induced_map,
    is_isomorphism,
    kernel_vectors,
    rank,
)

Cell = tuple[int, int]


@dataclass
class Page:
    r: int
    entries: dict[Cell, Subquotient]
    differentials: dict[Cell, RatMatrix]

    def dims(self) -> dict[Cell, int]:
        return {c: e.dim for c, e in self.entries.items()}


class SpectralSequence:
    """Pages ``E_1 .. E_{r_stab}`` of the column filtration of ``D``.

    Entries and differentials are computed lazily and cached.
    """

    def __init__(self, D: DoubleComplex):
        if not isinstance(D, DoubleComplex):
            raise InputError("expected a DoubleComplex")
        self.D = D
        self.tot: TotalComplex = D.total()
        self.max_p = D.max_p
        self.max_q = D.max_q
        self.r_stab = max(D.width, D.height) + 2
        self._Z: dict = {}
        self._E: dict = {}
        self._d: dict = {}
        self._H: dict = {}

    # -- filtration pieces ---------------------------------------------------

    def Z(self, r: int, p: int, k: int) -> Subspace:
        """``Z_r^p`` inside ``Tot^k``."""
        tot = self.tot
        dim = tot.dim(k)
        top = self.max_p + 1
        f = min(max(p, 0), top)
        thr = min(max(p + r, f), top)
        key = (k, f, thr)
        if key in self._Z:
            return self._Z[key]
        start = tot.filtration_start(k, f)
        if thr <= f or start == dim:
            Zs = Subspace.coordinate(dim, range(start, dim))
        else:
            cut = tot.filtration_start(k + 1, thr)
            Dk = tot.differential(k)
            sub = RatMatrix(cut, dim - start)
            for i, row in Dk.row_items():
                if i >= cut:
                    break
                for j, x in row.items():
                    if j >= start:
                        sub[i, j - start] = x
            vecs = [{j + start: x for j, x in v.items()} for v in kernel_vectors(sub)]
            Zs = Subspace(dim, vecs, _independent=True)
        self._Z[key] = Zs
        return Zs

    def term(self, r: int, p: int, q: int) -> Subquotient:
        """``E_r^{p,q}`` as a subquotient of ``Tot^(p+q)``."""
        if r < 1:
            raise InputError("pages start at r = 1")
        r = min(r, self.r_stab)
        key = (r, p, q)
        if key in self._E:
            return self._E[key]
        k = p + q
        dim = self.tot.dim(k)
        if p < 0 or q < 0 or p > self.max_p or q > self.max_q:
            E = Subquotient(Subspace.zero(dim), Subspace.zero(dim))
        else:
            num = self.Z(r, p, k)
            lower = self.Z(r - 1, p + 1, k)
            src = self.Z(r - 1, p - r + 1, k - 1)
            Dk = self.tot.differential(k - 1)
            bnd = Subspace.span(dim, list(lower.vectors) + [Dk.apply(v) for v in src.vectors])
            E = Subquotient(num, bnd)
        self._E[key] = E
        return E

    def differential(self, r: int, p: int, q: int) -> RatMatrix:
        """``d_r^{p,q}: E_r^{p,q} -> E_r^{p+r, q-r+1}``."""
        if r < 1:
            raise InputError("pages start at r = 1")
        key = (r, p, q)
        if key not in self._d:
            src = self.term(r, p, q)
            tgt = self.term(r, p + r, q - r + 1)
            self._d[key] = induced_map(self.tot.differential(p + q), src, tgt)
        return self._d[key]

    def cells(self) -> list[Cell]:
        return [(p, q) for p in range(self.max_p + 1) for q in range(self.max_q + 1)]

    def page(self, r: int) -> Page:
        if r < 1:
            raise InputError("pages start at r = 1")
        entries = {c: self.term(r, *c) for c in self.cells()}
        diffs = {c: self.differential(r, *c) for c in self.cells()}
        return Page(min(r, self.r_stab), entries, diffs)

    def page_dims(self, r: int) -> dict[Cell, int]:
        if r < 1:
            raise InputError("pages start at r = 1")
        return {c: self.term(r, *c).dim for c in self.cells()}

    def pages(self) -> dict[int, dict[Cell, int]]:
        return {r: self.page_dims(r) for r in range(1, self.r_stab + 1)}

    # -- abutment -------------------------------------------------------------

    def cohomology(self, k: int) -> Subquotient:
        if k not in self._H:
            self._H[k] = self.tot.cohomology(k)
        return self._H[k]

    def abutment(self) -> dict[int, int]:
        return {k: self.cohomology(k).dim for k in range(self.tot.top + 1)}

    def filtration(self, k: int) -> dict[int, int]:
        """``dim F^t H^k`` for ``t = 0 .. max_p + 1``."""
        H = self.cohomology(k)
        out = {}
        for t in range(self.max_p + 2):
            Zt = self.Z(self.r_stab, t, k)
            out[t] = Subspace.span(H.ambient_dim, list(H.B.vectors) + list(Zt.vectors)).dim - H.B.dim
        return out


def from_double_complex(D: DoubleComplex, check: bool = True) -> SpectralSequence:
    if check:
        D.check()
    return SpectralSequence(D)


def page(S: SpectralSequence, r) -> dict[Cell, int]:
    """Dimension table of ``E_r``; ``r = "inf"`` gives the stable page."""
    if r in ("inf", "infinity", float("inf")):
        r = S.r_stab
    return S.page_dims(int(r))


def check_page_consistency(S: SpectralSequence) -> bool:
    """``dim E_(r+1) = dim ker d_r - rank d_r(incoming)`` everywhere, and ``d_r d_r = 0``."""
    for r in range(1, S.r_stab + 1):
        for p, q in S.cells():
            out = S.differential(r, p, q)
            if p - r >= 0 and q + r - 1 <= S.max_q:
                inc = S.differential(r, p - r, q + r - 1)
                if not (out @ inc).is_zero():
                    return False
                inc_rank = rank(inc)
            else:
                inc_rank = 0
            expected = S.term(r, p, q).dim - rank(out) - inc_rank
            if S.term(r + 1, p, q).dim != expected:
                return False
    return True


def check_abutment(S: SpectralSequence) -> bool:
    """``sum_{p+q=k} dim E_inf^{p,q} = dim H^k`` and the graded pieces of F match E_inf."""
    einf = S.page_dims(S.r_stab)
    for k, h in S.abutment().items():
        cells = [(p, k - p) for p in range(k + 1) if (p, k - p) in einf]
        if sum(einf[c] for c in cells) != h:
            return False
        F = S.filtration(k)
        if F[0] != h:
            return False
        for t in range(S.max_p + 1):
            if F[t] - F[t + 1] != einf.get((t, k - t), 0):
                return False
    return True


@dataclass
class DoubleComplexMap:
    """A map of double complexes of bidegree ``(a, b)``:
    ``blocks[(p, q)]: C^{p,q} -> C'^{p+a, q+b}`` (missing blocks are zero)."""

    source: DoubleComplex
    target: DoubleComplex
    bidegree: tuple[int, int]
    blocks: dict[Cell, RatMatrix] = field(default_factory=dict)

    def block(self, p: int, q: int) -> RatMatrix:
        a, b = self.bidegree
        m = self.blocks.get((p, q))
        shape = (self.target.dim(p + a, q + b), self.source.dim(p, q))
        if m is None:
            return RatMatrix.zeros(*shape)
        if m.shape != shape:
            raise InputError(f"block ({p}, {q}) has shape {m.shape}, expected {shape}")
        return m

    def check(self) -> None:
        a, b = self.bidegree
        s, t = self.source, self.target
        for p, q in s.cells():
            f = self.block(p, q)
            if t.hor(p + a, q + b) @ f != self.block(p + 1, q) @ s.hor(p, q):
                raise ChainMapError(f"horizontal square at source cell ({p}, {q}) does not commute")
            if t.ver(p + a, q + b) @ f != self.block(p, q + 1) @ s.ver(p, q):
                raise ChainMapError(f"vertical square at source cell ({p}, {q}) does not commute")

    def total(self, src: TotalComplex, tgt: TotalComplex, k: int) -> RatMatrix:
        """Induced map ``Tot^k -> Tot'^(k+a+b)`` with sign ``(-1)^(b p)``,
        which makes it a chain map for the ``d_ver + (-1)^q d_hor`` convention."""
        a, b = self.bidegree
        M = RatMatrix(tgt.dim(k + a + b), src.dim(k))
        for p in range(k + 1):
            q = k - p
            if not self.source.dim(p, q) or not self.target.dim(p + a, q + b):
                continue
            so = src.offsets[(p, q)]
            to = tgt.offsets[(p + a, q + b)]
            sign = -1 if (b * p) % 2 else 1
            for i, row in self.block(p, q).row_items():
                for j, x in row.items():
                    M[to + i, so + j] = sign * x
        return M


@dataclass
class ShiftedMorphism:
    """Maps ``E_r^{p,q} -> E'_r^{p+a,q+b}`` on every page."""

    bidegree: tuple[int, int]
    source: SpectralSequence
    target: SpectralSequence
    maps: dict[int, dict[Cell, RatMatrix]]
    iso_pages: dict[int, bool]

    @property
    def iso_from(self) -> int | None:
        """First page from which every later page map is an isomorphism."""
        first = None
        for r in sorted(self.iso_pages, reverse=True):
            if not self.iso_pages[r]:
                break
            first = r
        return first

    def ranks(self, r: int) -> dict[Cell, int]:
        return {c: rank(m) for c, m in self.maps[r].items()}


def shifted_morphism_from_map(
    f: DoubleComplexMap,
    source: SpectralSequence | None = None,
    target: SpectralSequence | None = None,
) -> ShiftedMorphism:
    f.check()
    S = source if source is not None else SpectralSequence(f.source)
    T = target if target is not None else SpectralSequence(f.target)
    if S.D is not f.source or T.D is not f.target:
        raise InputError("spectral sequences do not belong to the map's complexes")
    a, b = f.bidegree
    tot_maps = {}
    for k in range(S.tot.top + 1):
        F = f.total(S.tot, T.tot, k)
        if T.tot.differential(k + a + b) @ F != f.total(S.tot, T.tot, k + 1) @ S.tot.differential(k):
            raise InvariantViolation(f"total map does not commute with d in degree {k}")
        tot_maps[k] = F
    last = max(S.r_stab, T.r_stab)
    maps: dict[int, dict[Cell, RatMatrix]] = {}
    iso: dict[int, bool] = {}
    for r in range(1, last + 1):
        page_maps = {}
        ok = True
        for p, q in S.cells():
            m = induced_map(tot_maps[p + q], S.term(r, p, q), T.term(r, p + a, q + b))
            page_maps[(p, q)] = m
            ok = ok and is_isomorphism(m)
        # every nonzero target entry must be hit by some source cell
        for p2, q2 in T.cells():
            if (p2 - a, q2 - b) not in page_maps and T.term(r, p2, q2).dim:
                ok = False
        maps[r] = page_maps
        iso[r] = ok
    return ShiftedMorphism((a, b), S, T, maps, iso)
