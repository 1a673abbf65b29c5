"""The plus operation ``M_+ = M (x) (B_z / B)`` and its de Rham chain map.

For a monomial module ``M`` in n variables, ``M_+`` lives in n + 1
variables (the last one is ``z``) and has the piece ``m / z^i`` at degree
``(a, -i)`` for each piece ``m`` of ``M`` at ``a`` and each ``i >= 1``.
``z`` lowers ``i`` by one (killing ``i = 1``), ``d/dz`` sends ``m / z^i`` to
``-i m / z^(i+1)``; both come out of the generic monomial rules in
:mod:`hodge_derham.cech`.

``phi`` sends ``m dx_S`` to ``(m / z) dx_S ^ dz``; it raises form degree by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cech import CechSpec, GradedModule, box, local_cohomology_dim, unit
from .complexes import CochainComplex
from .derham import derham_complex
from .errors import ChainMapError
from .linalg import RatMatrix, induced_map, is_isomorphism, rank


@dataclass(frozen=True)
class PlusModule(GradedModule):
    base: GradedModule

    @property
    def n(self) -> int:
        return self.base.n + 1

    def contains(self, a) -> bool:
        return a[-1] <= -1 and self.base.contains(a[:-1])

    def z_mult(self, a: Sequence[int]):
        return self.x_mult(self.base.n, a)

    def dz_action(self, a: Sequence[int]):
        return self.del_action(self.base.n, a)


def plus(base: GradedModule) -> PlusModule:
    return PlusModule(base)


def iterated_plus(base: GradedModule, t: int) -> GradedModule:
    M = base
    for _ in range(t):
        M = PlusModule(M)
    return M


@dataclass
class PhiMap:
    """``phi^p: Omega^p(M)_0 -> Omega^(p+1)(M_+)_0`` for all p."""

    source: CochainComplex
    target: CochainComplex
    maps: dict[int, RatMatrix]

    def check(self) -> None:
        for p in range(self.source.lo, self.source.hi + 1):
            lhs = self.target.differential(p + 1) @ self.maps[p]
            rhs = self.maps[p + 1] @ self.source.differential(p) if p + 1 in self.maps else None
            if rhs is None:
                rhs = RatMatrix.zeros(*lhs.shape)
            if lhs != rhs:
                raise ChainMapError(f"phi does not commute with d at form degree {p}")


def phi_chain_map(base: GradedModule) -> PhiMap:
    src = derham_complex(base)
    tgt = derham_complex(plus(base))
    z = base.n
    maps = {}
    for p in range(src.lo, src.hi + 1):
        index = {S: i for i, S in enumerate(tgt.labels.get(p + 1, []))}
        M = RatMatrix(len(index), src.dim(p))
        for c, S in enumerate(src.labels[p]):
            M[index[S + (z,)], c] = 1
        maps[p] = M
    f = PhiMap(src, tgt, maps)
    f.check()
    return f


def iterated_phi(base: GradedModule, t: int) -> tuple[CochainComplex, CochainComplex, dict[int, RatMatrix]]:
    """Compose ``phi`` t times: ``Omega^p(M)_0 -> Omega^(p+t)(M_{+...+})_0``."""
    src = derham_complex(base)
    maps = {p: RatMatrix.identity(src.dim(p)) for p in range(src.lo, src.hi + 1)}
    M, tgt = base, src
    for k in range(t):
        step = phi_chain_map(M)
        maps = {p: step.maps[p + k] @ m for p, m in maps.items()}
        M, tgt = plus(M), step.target
    return src, tgt, maps


@dataclass
class PhiIsoResult:
    ok: bool
    source_dims: dict[int, int]
    target_dims: dict[int, int]
    ranks: dict[int, int]

    def __bool__(self) -> bool:
        return self.ok


def verify_phi_iso(base: GradedModule) -> PhiIsoResult:
    """Check that ``phi_*: h^p(Omega(M)) -> h^(p+1)(Omega(M_+))`` is an isomorphism for all p."""
    f = phi_chain_map(base)
    src_dims, tgt_dims, ranks = {}, {}, {}
    ok = True
    for p in range(f.source.lo, f.source.hi + 1):
        hs = f.source.cohomology(p)
        ht = f.target.cohomology(p + 1)
        m = induced_map(f.maps[p], hs, ht)
        src_dims[p], tgt_dims[p + 1], ranks[p] = hs.dim, ht.dim, rank(m)
        ok = ok and is_isomorphism(m)
    h0 = f.target.cohomology(0).dim
    tgt_dims[0] = h0
    ok = ok and h0 == 0
    return PhiIsoResult(ok, src_dims, dict(sorted(tgt_dims.items())), ranks)


def plus_spec(spec: CechSpec) -> CechSpec:
    """``(I, z)`` in one more variable."""
    n = spec.n + 1
    gens = tuple(tuple(g) + (0,) for g in spec.generators) + (unit(n, spec.n),)
    return CechSpec(n, gens)


def plus_local_cohomology_table(spec: CechSpec, i: int, window: tuple[int, int] = (-3, 3)):
    """``[(degree, dim (H^i_I)_+, dim H^(i+1)_(I,z))]`` over the window box."""
    lo, hi = window
    big = plus_spec(spec)
    rows = []
    for deg in box(spec.n + 1, lo, hi):
        a, c = deg[:-1], deg[-1]
        lhs = local_cohomology_dim(spec, i, a) if c <= -1 else 0
        rhs = local_cohomology_dim(big, i + 1, deg)
        rows.append((deg, lhs, rhs))
    return rows


def verify_plus_local_cohomology(spec: CechSpec, i: int, window: tuple[int, int] = (-3, 3)) -> bool:
    return all(lhs == rhs for _, lhs, rhs in plus_local_cohomology_table(spec, i, window))
