"""Z^n-graded monomial D-modules and the stable Cech complex of a monomial ideal.

Every module here has graded pieces of dimension 0 or 1, spanned by a
Laurent monomial ``x^a``.  Variables are indexed from 0.  The Weyl algebra
acts by

* ``x_j``: ``x^a -> x^(a + e_j)`` with scalar 1,
* ``d_j``: ``x^a -> a_j x^(a - e_j)``,

where the image is zero whenever the target degree is not a piece of the
module (this is how quotients such as ``T_x / T`` kill monomials).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import InputError
from .linalg import RatMatrix, Subquotient, Subspace, kernel_basis

MultiDegree = tuple[int, ...]


def unit(n: int, j: int) -> MultiDegree:
    return tuple(1 if i == j else 0 for i in range(n))


def indicator(n: int, S: Iterable[int]) -> MultiDegree:
    S = set(S)
    return tuple(1 if i in S else 0 for i in range(n))


def neg_indicator(n: int, S: Iterable[int]) -> MultiDegree:
    """Degree ``-chi_S`` of the coefficient of ``dx_S`` in the 0-strand."""
    S = set(S)
    return tuple(-1 if i in S else 0 for i in range(n))


def _add(a: Sequence[int], b: Sequence[int]) -> MultiDegree:
    return tuple(x + y for x, y in zip(a, b))


class GradedModule:
    """Base class: a monomial module described by which degrees carry a piece."""

    n: int

    def contains(self, a: MultiDegree) -> bool:
        raise NotImplementedError

    def _degree(self, a: Sequence[int]) -> MultiDegree:
        a = tuple(int(x) for x in a)
        if len(a) != self.n:
            raise InputError(f"degree {a} has length {len(a)}, module has {self.n} variables")
        return a

    def piece_dim(self, a: Sequence[int]) -> int:
        return 1 if self.contains(self._degree(a)) else 0

    def x_mult(self, j: int, a: Sequence[int]) -> tuple[int, MultiDegree]:
        """Multiplication by ``x_j`` on the piece at ``a``: ``(scalar, target)``.

        The scalar is 0 when the target monomial is zero in the module.
        """
        a = self._nonzero_source(a, j)
        b = _add(a, unit(self.n, j))
        return (1 if self.contains(b) else 0), b

    def del_action(self, j: int, a: Sequence[int]) -> tuple[int, MultiDegree]:
        """``d/dx_j`` on the piece at ``a``: ``(a_j, a - e_j)``, scalar 0 if the image vanishes."""
        a = self._nonzero_source(a, j)
        b = _add(a, tuple(-x for x in unit(self.n, j)))
        return (a[j] if self.contains(b) else 0), b

    def _nonzero_source(self, a, j) -> MultiDegree:
        a = self._degree(a)
        if not 0 <= j < self.n:
            raise InputError(f"variable index {j} out of range for {self.n} variables")
        if not self.contains(a):
            raise InputError(f"the piece at degree {a} is zero")
        return a


@dataclass(frozen=True)
class MonomialLocalization(GradedModule):
    """``T_sigma``: polynomials in n variables with the variables in ``sigma`` inverted."""

    n: int
    sigma: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        if self.n < 0 or any(not 0 <= i < self.n for i in self.sigma):
            raise InputError(f"sigma {sorted(self.sigma)} not a subset of range({self.n})")

    def contains(self, a: MultiDegree) -> bool:
        return all(x >= 0 for i, x in enumerate(a) if i not in self.sigma)

    def __str__(self):
        inv = "".join(f"x{i + 1}" for i in sorted(self.sigma))
        return f"T[{self.n}]_{{{inv}}}" if inv else f"T[{self.n}]"


@dataclass(frozen=True)
class LocalizationQuotient(GradedModule):
    """``T_sigma / T_tau`` for ``tau`` a subset of ``sigma``."""

    n: int
    sigma: frozenset
    tau: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        object.__setattr__(self, "tau", frozenset(self.tau))
        if not self.tau <= self.sigma:
            raise InputError("tau must be a subset of sigma")
        if any(not 0 <= i < self.n for i in self.sigma):
            raise InputError(f"sigma {sorted(self.sigma)} not a subset of range({self.n})")

    def contains(self, a: MultiDegree) -> bool:
        in_sigma = all(x >= 0 for i, x in enumerate(a) if i not in self.sigma)
        in_tau = all(x >= 0 for i, x in enumerate(a) if i not in self.tau)
        return in_sigma and not in_tau


def piece_dim(loc: GradedModule, a: Sequence[int]) -> int:
    return loc.piece_dim(a)


def x_mult(loc: GradedModule, j: int, a: Sequence[int]) -> tuple[int, MultiDegree]:
    return loc.x_mult(j, a)


def del_action(loc: GradedModule, j: int, a: Sequence[int]) -> tuple[int, MultiDegree]:
    return loc.del_action(j, a)


@dataclass(frozen=True)
class CechSpec:
    """Monomial ideal ``I = (x^g for g in generators)`` in ``k[x_1..x_n]``."""

    n: int
    generators: tuple
    # the zero ideal only appears internally (Y = A^n); user input must have I != 0
    allow_empty: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n!r}")
        gens = tuple(tuple(g) for g in self.generators)
        if not gens and not self.allow_empty:
            raise InputError("at least one generator is required")
        for g in gens:
            if len(g) != self.n:
                raise InputError(f"generator {list(g)} has length {len(g)}, expected {self.n}")
            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in g):
                raise InputError(f"generator {list(g)} must have nonnegative integer exponents")
            if not any(g):
                raise InputError("the unit monomial is not allowed as a generator (I would be T)")
        object.__setattr__(self, "generators", gens)

    @property
    def m(self) -> int:
        return len(self.generators)

    def support(self, i: int) -> frozenset:
        return frozenset(j for j, e in enumerate(self.generators[i]) if e)

    def subsets(self, t: int) -> list[tuple[int, ...]]:
        return list(combinations(range(self.m), t))

    def sigma(self, U: Iterable[int]) -> frozenset:
        out: frozenset = frozenset()
        for i in U:
            out |= self.support(i)
        return out

    def extend(self, extra: int) -> "CechSpec":
        """Zero-extend to ``n + extra`` variables and add the new coordinates as generators."""
        n = self.n + extra
        gens = [tuple(g) + (0,) * extra for g in self.generators]
        gens += [unit(n, self.n + i) for i in range(extra)]
        return CechSpec(n, tuple(gens), allow_empty=self.allow_empty)

    def permuted(self, perm: Sequence[int]) -> "CechSpec":
        """Relabel variables: old variable ``i`` becomes ``perm[i]``."""
        gens = []
        for g in self.generators:
            h = [0] * self.n
            for i, e in enumerate(g):
                h[perm[i]] = e
            gens.append(tuple(h))
        return CechSpec(self.n, tuple(gens), allow_empty=self.allow_empty)

    def __str__(self):
        def mono(g):
            s = "".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g) if e)
            return s or "1"

        return f"({', '.join(mono(g) for g in self.generators)}) in A^{self.n}"


def cech_term(spec: CechSpec, t: int) -> list[MonomialLocalization]:
    """Localizations in Cech position t, one per t-subset of generators (lex order)."""
    if not 0 <= t <= spec.m:
        raise InputError(f"Cech position {t} outside 0..{spec.m}")
    return [MonomialLocalization(spec.n, spec.sigma(U)) for U in spec.subsets(t)]


def _check_degree(spec: CechSpec, a: Sequence[int]) -> MultiDegree:
    a = tuple(int(x) for x in a)
    if len(a) != spec.n:
        raise InputError(f"degree {a} has length {len(a)}, expected {spec.n}")
    return a


def cech_strand_basis(spec: CechSpec, t: int, a: Sequence[int]) -> list[tuple[int, ...]]:
    """Subsets U (lex order) whose localization has a nonzero piece at degree a."""
    a = _check_degree(spec, a)
    if not 0 <= t <= spec.m:
        return []
    out = []
    for U in spec.subsets(t):
        sig = spec.sigma(U)
        if all(x >= 0 for i, x in enumerate(a) if i not in sig):
            out.append(U)
    return out


def insertion_sign(U: Sequence[int], i: int) -> int:
    """``(-1)^(position of i in sorted(U + {i}))``."""
    return -1 if sum(1 for u in U if u < i) % 2 else 1


def cech_differential_strand(spec: CechSpec, t: int, a: Sequence[int]) -> RatMatrix:
    """Degree-a component of the Cech differential ``C^t -> C^(t+1)``."""
    src = cech_strand_basis(spec, t, a)
    tgt = cech_strand_basis(spec, t + 1, a)
    index = {U: r for r, U in enumerate(tgt)}
    M = RatMatrix(len(tgt), len(src))
    for c, U in enumerate(src):
        for i in range(spec.m):
            if i in U:
                continue
            V = tuple(sorted(U + (i,)))
            r = index.get(V)
            if r is not None:
                M[r, c] = insertion_sign(U, i)
    return M


@lru_cache(maxsize=None)
def _local_cohomology(spec: CechSpec, q: int, a: MultiDegree) -> Subquotient:
    Z = kernel_basis(cech_differential_strand(spec, q, a))
    if q == 0:
        B = Subspace.zero(Z.ambient_dim)
    else:
        B = Subspace.span(Z.ambient_dim, cech_differential_strand(spec, q - 1, a).columns())
    return Subquotient(Z, B)


def local_cohomology_piece(spec: CechSpec, q: int, a: Sequence[int]) -> Subquotient:
    """Degree-a piece of ``H^q_I(T)`` as Cech cohomology at position q."""
    if q < 0:
        raise InputError("local cohomology index must be nonnegative")
    return _local_cohomology(spec, q, _check_degree(spec, a))


def local_cohomology_dim(spec: CechSpec, q: int, a: Sequence[int]) -> int:
    if q > spec.m:
        return 0
    return local_cohomology_piece(spec, q, a).dim


def box(n: int, lo: int, hi: int) -> Iterable[MultiDegree]:
    """All degrees in ``{lo..hi}^n`` in lexicographic order."""
    return product(range(lo, hi + 1), repeat=n)
