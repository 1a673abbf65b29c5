"""Finite cochain complexes and bounded first-quadrant double complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable

from .errors import InputError, InvariantViolation
from .linalg import RatMatrix, Subquotient, Subspace, kernel_basis, rank


@dataclass
class CochainComplex:
    """``C^lo -> C^lo+1 -> ... -> C^hi`` with ``d[i]: C^i -> C^(i+1)``.

    ``labels[i]`` names the basis of ``C^i``; ``d`` entries may be omitted
    for zero maps.
    """

    lo: int
    hi: int
    labels: dict[int, list[Hashable]]
    d: dict[int, RatMatrix] = field(default_factory=dict)

    def dim(self, i: int) -> int:
        return len(self.labels.get(i, ())) if self.lo <= i <= self.hi else 0

    def differential(self, i: int) -> RatMatrix:
        m = self.d.get(i)
        if m is None:
            return RatMatrix.zeros(self.dim(i + 1), self.dim(i))
        if m.shape != (self.dim(i + 1), self.dim(i)):
            raise InvariantViolation(f"differential {i} has shape {m.shape}")
        return m

    def check(self) -> None:
        for i in range(self.lo, self.hi):
            if not (self.differential(i + 1) @ self.differential(i)).is_zero():
                raise InvariantViolation(f"d^2 != 0 at position {i}")

    def cohomology(self, i: int) -> Subquotient:
        Z = kernel_basis(self.differential(i))
        B = Subspace.span(self.dim(i), self.differential(i - 1).columns())
        return Subquotient(Z, B)

    def cohomology_dims(self) -> dict[int, int]:
        """Dimensions by rank count; ``cohomology(i).dim`` gives the same numbers."""
        ranks = {i: rank(self.differential(i)) for i in range(self.lo - 1, self.hi + 1)}
        return {i: self.dim(i) - ranks[i] - ranks[i - 1] for i in range(self.lo, self.hi + 1)}

    def is_exact(self) -> bool:
        return all(v == 0 for v in self.cohomology_dims().values())


Cell = tuple[int, int]


@dataclass
class DoubleComplex:
    """Bounded first-quadrant double complex of finite dimensional Q-spaces.

    ``d_hor[(p, q)]: C^{p,q} -> C^{p+1,q}`` and ``d_ver[(p, q)]: C^{p,q} ->
    C^{p,q+1}`` commute; the total differential is ``d_ver + (-1)^q d_hor``.
    Missing differentials are zero.
    """

    dims: dict[Cell, int]
    d_hor: dict[Cell, RatMatrix] = field(default_factory=dict)
    d_ver: dict[Cell, RatMatrix] = field(default_factory=dict)
    labels: dict[Cell, list[Hashable]] = field(default_factory=dict)

    def __post_init__(self):
        for (p, q), n in self.dims.items():
            if p < 0 or q < 0:
                if n:
                    raise InputError(f"cell ({p}, {q}) lies outside the first quadrant")
            if n < 0:
                raise InputError(f"negative dimension at ({p}, {q})")
        for name, maps, step in (("d_hor", self.d_hor, (1, 0)), ("d_ver", self.d_ver, (0, 1))):
            for (p, q), m in maps.items():
                want = (self.dim(p + step[0], q + step[1]), self.dim(p, q))
                if m.shape != want:
                    raise InputError(f"{name} at ({p}, {q}) has shape {m.shape}, expected {want}")

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    @property
    def max_p(self) -> int:
        return max((p for (p, q), n in self.dims.items() if n), default=0)

    @property
    def max_q(self) -> int:
        return max((q for (p, q), n in self.dims.items() if n), default=0)

    @property
    def width(self) -> int:
        return self.max_p + 1

    @property
    def height(self) -> int:
        return self.max_q + 1

    def hor(self, p: int, q: int) -> RatMatrix:
        m = self.d_hor.get((p, q))
        return m if m is not None else RatMatrix.zeros(self.dim(p + 1, q), self.dim(p, q))

    def ver(self, p: int, q: int) -> RatMatrix:
        m = self.d_ver.get((p, q))
        return m if m is not None else RatMatrix.zeros(self.dim(p, q + 1), self.dim(p, q))

    def cells(self) -> list[Cell]:
        return sorted(c for c, n in self.dims.items() if n)

    def check(self) -> None:
        """Raise InvariantViolation unless d_hor^2 = d_ver^2 = 0 and they commute."""
        for p, q in self.cells():
            if not (self.hor(p + 1, q) @ self.hor(p, q)).is_zero():
                raise InvariantViolation(f"d_hor^2 != 0 at ({p}, {q})")
            if not (self.ver(p, q + 1) @ self.ver(p, q)).is_zero():
                raise InvariantViolation(f"d_ver^2 != 0 at ({p}, {q})")
            if self.ver(p + 1, q) @ self.hor(p, q) != self.hor(p, q + 1) @ self.ver(p, q):
                raise InvariantViolation(f"d_hor and d_ver do not commute at ({p}, {q})")

    def total(self) -> "TotalComplex":
        return TotalComplex(self)


class TotalComplex:
    """``Tot^k = (+)_{p+q=k} C^{p,q}``, basis ordered by p then cell basis.

    Because of that ordering the column filtration ``F^p Tot^k`` is always a
    suffix of the coordinates.
    """

    def __init__(self, D: DoubleComplex):
        self.D = D
        self.max_p = D.max_p
        self.top = D.max_p + D.max_q
        self.offsets: dict[Cell, int] = {}
        self.dims: dict[int, int] = {}
        self.column_of: dict[int, list[int]] = {}
        for k in range(self.top + 1):
            off = 0
            cols: list[int] = []
            for p in range(0, k + 1):
                n = D.dim(p, k - p)
                self.offsets[(p, k - p)] = off
                off += n
                cols.extend([p] * n)
            self.dims[k] = off
            self.column_of[k] = cols
        self._d: dict[int, RatMatrix] = {}

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)

    def filtration_start(self, k: int, p: int) -> int:
        """First coordinate of ``F^p Tot^k``."""
        if p <= 0 or not 0 <= k <= self.top:
            return 0
        if p > min(k, self.max_p):
            return self.dim(k)
        return self.offsets[(p, k - p)]

    def differential(self, k: int) -> RatMatrix:
        """``Tot^k -> Tot^(k+1)``."""
        if k in self._d:
            return self._d[k]
        D = self.D
        M = RatMatrix(self.dim(k + 1), self.dim(k))
        if 0 <= k <= self.top:
            for p in range(0, k + 1):
                q = k - p
                n = D.dim(p, q)
                if not n:
                    continue
                src = self.offsets[(p, q)]
                if D.dim(p, q + 1):
                    tgt = self.offsets[(p, q + 1)]
                    for i, row in D.ver(p, q).row_items():
                        for j, x in row.items():
                            M[tgt + i, src + j] = x
                if D.dim(p + 1, q):
                    tgt = self.offsets[(p + 1, q)]
                    sign = -1 if q % 2 else 1
                    for i, row in D.hor(p, q).row_items():
                        for j, x in row.items():
                            M[tgt + i, src + j] = sign * x
        self._d[k] = M
        return M

    def cohomology(self, k: int) -> Subquotient:
        Z = kernel_basis(self.differential(k))
        B = Subspace.span(self.dim(k), self.differential(k - 1).columns())
        return Subquotient(Z, B)

    def cohomology_dims(self) -> dict[int, int]:
        return {k: self.cohomology(k).dim for k in range(self.top + 1)}

    def embed(self, p: int, q: int, vec: dict) -> dict:
        """Place a vector of ``C^{p,q}`` into ``Tot^{p+q}``."""
        off = self.offsets[(p, q)]
        return {off + i: x for i, x in vec.items()}
