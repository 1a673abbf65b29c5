"""Koszul complexes on coordinate variables, Ext^c(T/J, T), and the
J-annihilated part of H^c_J(T).

``J = (z_1, .., z_c)`` is generated by the coordinates listed in ``coords``
(0-based).  ``wedge^t P`` has basis ``e_K`` for t-subsets K of ``coords``
(lex order) and ``e_K`` has degree ``chi_K``, so every differential is
homogeneous.  The differential is

    d(e_{k1} ^ .. ^ e_{kt}) = sum_j (-1)^j z_{kj} e_{k1} ^ .. (omit kj) .. ^ e_{kt}

with j counted from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cech import CechSpec, box, cech_strand_basis, local_cohomology_piece, unit
from .complexes import CochainComplex
from .errors import InputError, InvariantViolation
from .linalg import RatMatrix, induced_map, rank

Window = tuple[int, int]


def _nonneg(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a)


def quotient_dim(n: int, coords: Iterable[int], a: Sequence[int]) -> int:
    """``dim (T/J)_a``."""
    coords = set(coords)
    return 1 if _nonneg(a) and all(a[j] == 0 for j in coords) else 0


@dataclass(frozen=True)
class KoszulComplex:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(sorted(set(self.coords)))
        if not coords:
            raise InputError("the Koszul complex needs at least one coordinate")
        if any(not 0 <= j < self.n for j in coords):
            raise InputError(f"coordinates {coords} out of range for n = {self.n}")
        object.__setattr__(self, "coords", coords)

    @property
    def c(self) -> int:
        return len(self.coords)

    def term(self, t: int) -> list[tuple[int, ...]]:
        if not 0 <= t <= self.c:
            return []
        return list(combinations(self.coords, t))

    def _deg(self, a, K) -> tuple[int, ...]:
        return tuple(x - (1 if i in K else 0) for i, x in enumerate(a))

    def basis(self, t: int, a: Sequence[int]) -> list[tuple[int, ...]]:
        """``e_K`` in ``(wedge^t)_a``: those K with ``T_(a - chi_K) != 0``."""
        return [K for K in self.term(t) if _nonneg(self._deg(a, K))]

    def differential(self, t: int, a: Sequence[int]) -> RatMatrix:
        """``d_t: (wedge^t)_a -> (wedge^(t-1))_a``."""
        src = self.basis(t, a)
        tgt = self.basis(t - 1, a)
        index = {K: i for i, K in enumerate(tgt)}
        M = RatMatrix(len(tgt), len(src))
        for col, K in enumerate(src):
            for j, k in enumerate(K, start=1):
                L = K[: j - 1] + K[j:]
                M[index[L], col] = (-1) ** j
        return M

    def generic_differential(self, t: int) -> list[list[dict]]:
        """``d_t`` as a matrix of polynomials ``{exponent: coeff}``, rows ``wedge^(t-1)``."""
        src, tgt = self.term(t), self.term(t - 1)
        index = {K: i for i, K in enumerate(tgt)}
        M = [[{} for _ in src] for _ in tgt]
        for col, K in enumerate(src):
            for j, k in enumerate(K, start=1):
                M[index[K[: j - 1] + K[j:]]][col] = {unit(self.n, k): (-1) ** j}
        return M

    def graded(self, a: Sequence[int]) -> CochainComplex:
        """Degree-a strand as a cochain complex at positions ``-c .. 0``
        (position ``-t`` holds ``wedge^t``)."""
        a = tuple(a)
        if len(a) != self.n:
            raise InputError(f"degree {a} has length {len(a)}, expected {self.n}")
        labels = {-t: self.basis(t, a) for t in range(self.c + 1)}
        d = {-t: self.differential(t, a) for t in range(1, self.c + 1)}
        return CochainComplex(-self.c, 0, labels, d)

    def homology_dims(self, a: Sequence[int]) -> dict[int, int]:
        """``{t: dim H_t(K)_a}``."""
        return {-i: v for i, v in self.graded(a).cohomology_dims().items()}

    def ext_dims(self, a: Sequence[int]) -> dict[int, int]:
        """``{t: dim Ext^t(T/J, T)_a}`` from ``Hom(K, T)``.

        ``Hom(wedge^t, T)_a`` has basis ``e_K^*`` with ``T_(a + chi_K) != 0``
        and the coboundary is the transpose of ``d``.
        """
        a = tuple(a)
        labels = {}
        for t in range(self.c + 1):
            labels[t] = [K for K in self.term(t) if _nonneg(tuple(x + (1 if i in K else 0) for i, x in enumerate(a)))]
        d = {}
        for t in range(self.c):
            src, tgt = labels[t], labels[t + 1]
            index = {K: i for i, K in enumerate(src)}
            M = RatMatrix(len(tgt), len(src))
            for row, K in enumerate(tgt):
                for j, k in enumerate(K, start=1):
                    L = K[: j - 1] + K[j:]
                    if L in index:
                        M[row, index[L]] = (-1) ** j
            d[t] = M
        cx = CochainComplex(0, self.c, labels, d)
        cx.check()
        return cx.cohomology_dims()

    def dual_piece_dim(self, t: int, a: Sequence[int]) -> int:
        return sum(1 for K in self.term(t) if _nonneg(tuple(x + (1 if i in K else 0) for i, x in enumerate(a))))


def koszul_complex(n: int, coords: Iterable[int]) -> KoszulComplex:
    return KoszulComplex(n, tuple(coords))


def verify_koszul_resolution(K: KoszulComplex, window: Window = (-3, 3)) -> bool:
    lo, hi = window
    for a in box(K.n, lo, hi):
        cx = K.graded(a)
        cx.check()
        dims = {-i: v for i, v in cx.cohomology_dims().items()}
        if dims[0] != quotient_dim(K.n, K.coords, a):
            return False
        if any(v for t, v in dims.items() if t != 0):
            return False
    return True


def koszul_self_duality(K: KoszulComplex, window: Window = (-3, 3)) -> bool:
    """``dim Hom(wedge^t, T)_a = dim (wedge^(c-t))_(a + chi_J)`` on the window."""
    lo, hi = window
    chi = tuple(1 if i in K.coords else 0 for i in range(K.n))
    for a in box(K.n, lo, hi):
        shifted = tuple(x + y for x, y in zip(a, chi))
        for t in range(K.c + 1):
            if K.dual_piece_dim(t, a) != len(K.basis(K.c - t, shifted)):
                return False
    return True


def annihilator_dim(spec: CechSpec, q: int, a: Sequence[int], ideal_vars: Iterable[int]) -> int:
    """``dim`` of the part of ``H^q_I(T)_a`` killed by every ``x_j``, ``j`` in ``ideal_vars``."""
    src = local_cohomology_piece(spec, q, a)
    if not src.dim:
        return 0
    cols = []
    for j in ideal_vars:
        b = tuple(x + (1 if i == j else 0) for i, x in enumerate(a))
        tgt = local_cohomology_piece(spec, q, b)
        mult = _x_mult_strand(spec, q, a, j)
        m = induced_map(mult, src, tgt)
        cols.append(m)
    stacked_rows = sum(m.rows for m in cols)
    S = RatMatrix(stacked_rows, src.dim)
    r0 = 0
    for m in cols:
        for i, row in m.row_items():
            for k, x in row.items():
                S[r0 + i, k] = x
        r0 += m.rows
    return src.dim - rank(S)


def _x_mult_strand(spec: CechSpec, q: int, a: Sequence[int], j: int) -> RatMatrix:
    """Multiplication by ``x_j`` from Cech term q at degree a to degree a + e_j."""
    b = tuple(x + (1 if i == j else 0) for i, x in enumerate(a))
    src = cech_strand_basis(spec, q, a)
    tgt = {U: i for i, U in enumerate(cech_strand_basis(spec, q, b))}
    M = RatMatrix(len(tgt), len(src))
    for c, U in enumerate(src):
        M[tgt[U], c] = 1
    return M


def ext_top_annihilator_check(n: int, coords: Iterable[int], window: Window = (-3, 3)) -> bool:
    """The J-annihilated part of ``H^c_J(T)``, twisted by ``wedge^c`` (degree
    ``chi_J``), has the graded dimensions of ``T/J`` and is generated by
    ``(z_1 .. z_c)^-1``; ``Ext^c(T/J, T)`` has the same dimensions."""
    coords = tuple(sorted(set(coords)))
    if not coords:
        raise InputError("need a nonzero coordinate ideal")
    c = len(coords)
    spec = CechSpec(n, tuple(unit(n, j) for j in coords))
    K = KoszulComplex(n, coords)
    chi = tuple(1 if i in coords else 0 for i in range(n))
    gen_deg = tuple(-x for x in chi)
    gen = local_cohomology_piece(spec, c, gen_deg)
    if gen.dim != 1 or annihilator_dim(spec, c, gen_deg, coords) != 1:
        return False
    lo, hi = window
    for a in box(n, lo, hi):
        twisted = tuple(x + y for x, y in zip(a, chi))
        ann = annihilator_dim(spec, c, a, coords)
        if ann != quotient_dim(n, coords, twisted):
            return False
        if K.ext_dims(a)[c] != ann:
            return False
        if ann and not _generated_by_inverse_monomial(spec, c, gen_deg, a):
            return False
    return True


def _generated_by_inverse_monomial(spec: CechSpec, q: int, gen_deg, a) -> bool:
    """The class at degree ``a`` is ``x^(a - gen_deg)`` times the generator."""
    step = list(gen_deg)
    cur = local_cohomology_piece(spec, q, gen_deg)
    M = RatMatrix.identity(cur.dim)
    for j in range(spec.n):
        for _ in range(a[j] - gen_deg[j]):
            nxt_deg = tuple(step[i] + (1 if i == j else 0) for i in range(spec.n))
            nxt = local_cohomology_piece(spec, q, nxt_deg)
            M = induced_map(_x_mult_strand(spec, q, tuple(step), j), cur, nxt) @ M
            step, cur = list(nxt_deg), nxt
    return cur.dim == 1 and rank(M) == 1


@dataclass
class ConormalData:
    degree: tuple[int, ...]
    conormal: int
    ambient: int
    cotangent: int
    rank_first: int
    rank_second: int


def conormal_sequence(n: int, coords: Iterable[int], a: Sequence[int]) -> ConormalData:
    """Degree-a piece of ``0 -> J/J^2 -> R (x) Omega_T -> Omega_R -> 0``, ``R = T/J``.

    ``J/J^2`` is free on ``z_j`` (degree e_j), ``R (x) Omega_T`` free on ``dx_i``
    (degree e_i), ``Omega_R`` free on ``dx_i`` for ``i`` outside J.  The first
    map is ``z_j -> dz_j``, the second kills the ``dz_j``.
    """
    coords = tuple(sorted(set(coords)))
    a = tuple(a)
    others = [i for i in range(n) if i not in coords]

    def R(i):
        return quotient_dim(n, coords, tuple(x - (1 if k == i else 0) for k, x in enumerate(a)))

    conormal = [j for j in coords if R(j)]
    ambient = [i for i in range(n) if R(i)]
    cotangent = [i for i in others if R(i)]
    ai = {i: k for k, i in enumerate(ambient)}
    ci = {i: k for k, i in enumerate(cotangent)}
    first = RatMatrix(len(ambient), len(conormal))
    for col, j in enumerate(conormal):
        first[ai[j], col] = 1
    second = RatMatrix(len(cotangent), len(ambient))
    for col, i in enumerate(ambient):
        if i in ci:
            second[ci[i], col] = 1
    if not (second @ first).is_zero():
        raise InvariantViolation("conormal sequence is not a complex")
    return ConormalData(a, len(conormal), len(ambient), len(cotangent), rank(first), rank(second))


def conormal_rank_check(n: int, coords: Iterable[int], window: Window = (-3, 3)) -> bool:
    """Split exactness at rank level: ``Omega_R`` free of rank ``n - c`` and
    the conormal module free of rank ``c``, degree by degree on the window."""
    coords = tuple(sorted(set(coords)))
    c = len(coords)
    lo, hi = window
    for a in box(n, lo, hi):
        data = conormal_sequence(n, coords, a)
        # injective, exact in the middle, surjective
        if data.rank_first != data.conormal:
            return False
        if data.ambient - data.rank_second != data.rank_first:
            return False
        if data.rank_second != data.cotangent:
            return False
        if data.ambient != data.conormal + data.cotangent:
            return False
    # ranks over R read off at the generator degrees e_i
    s = sum(conormal_sequence(n, coords, unit(n, i)).cotangent for i in range(n))
    comp = sum(conormal_sequence(n, coords, unit(n, i)).conormal for i in range(n))
    return s == n - c and comp == c
