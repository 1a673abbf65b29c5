"""Exact linear algebra over Q.

Everything here works with :class:`fractions.Fraction` and never rounds.
Vectors are stored sparsely as ``{index: Fraction}`` dicts without explicit
zeros; matrices keep one such dict per row.  The complexes built elsewhere in
the package are block diagonal with entries in {-1, 0, 1}, so sparse
elimination stays inside each block and the rational entries stay small.

Conventions: a ``RatMatrix`` of shape ``(rows, cols)`` acts on column
vectors, i.e. a map ``Q^cols -> Q^rows``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import ContainmentError

Vector = dict  # dict[int, Fraction]
VectorLike = Union[Mapping[int, object], Sequence[object]]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed; use int or Fraction")
    return Fraction(x)


def as_vector(v: VectorLike, dim: int | None = None) -> Vector:
    """Normalise a dense sequence or sparse mapping into a sparse vector."""
    if isinstance(v, Mapping):
        out = {}
        for i, x in v.items():
            if dim is not None and not 0 <= i < dim:
                raise IndexError(f"index {i} outside ambient dimension {dim}")
            x = _frac(x)
            if x:
                out[int(i)] = x
        return out
    if dim is not None and len(v) != dim:
        raise ValueError(f"vector of length {len(v)} in ambient dimension {dim}")
    return {i: _frac(x) for i, x in enumerate(v) if x}


def dense(v: Mapping[int, Fraction], dim: int) -> tuple[Fraction, ...]:
    return tuple(v.get(i, _ZERO) for i in range(dim))


def _axpy(y: Vector, a: Fraction, x: Mapping[int, Fraction]) -> None:
    """In place ``y += a * x``."""
    for k, xv in x.items():
        nv = y.get(k, _ZERO) + a * xv
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


class RatMatrix:
    """Sparse exact rational matrix (row dict storage)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        self._data: dict[int, Vector] = {}
        if entries:
            for (i, j), x in entries.items():
                self[i, j] = x

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> "RatMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        m = cls(len(rows), cols)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError("ragged row list")
            r = as_vector(row)
            if r:
                m._data[i] = r
        return m

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[VectorLike]) -> "RatMatrix":
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, x in as_vector(col, rows).items():
                m._data.setdefault(i, {})[j] = x
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        m = cls(n, n)
        for i in range(n):
            m._data[i] = {i: _ONE}
        return m

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        self._check(i, j)
        return self._data.get(i, {}).get(j, _ZERO)

    def __setitem__(self, ij: tuple[int, int], x) -> None:
        i, j = ij
        self._check(i, j)
        x = _frac(x)
        row = self._data.setdefault(i, {})
        if x:
            row[j] = x
        else:
            row.pop(j, None)
            if not row:
                del self._data[i]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> Vector:
        return dict(self._data.get(i, {}))

    def row_items(self) -> Iterable[tuple[int, Vector]]:
        """Nonzero rows as ``(index, sparse row)``; do not mutate the rows."""
        return sorted(self._data.items())

    def columns(self) -> list[Vector]:
        cols: list[Vector] = [{} for _ in range(self.cols)]
        for i, row in self._data.items():
            for j, x in row.items():
                cols[j][i] = x
        return cols

    def transpose(self) -> "RatMatrix":
        t = RatMatrix(self.cols, self.rows)
        for j, col in enumerate(self.columns()):
            if col:
                t._data[j] = col
        return t

    def apply(self, v: VectorLike) -> Vector:
        v = as_vector(v, self.cols)
        out: Vector = {}
        if not v:
            return out
        for i, row in self._data.items():
            s = _ZERO
            if len(row) < len(v):
                for j, x in row.items():
                    y = v.get(j)
                    if y is not None:
                        s += x * y
            else:
                for j, y in v.items():
                    x = row.get(j)
                    if x is not None:
                        s += x * y
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = RatMatrix(self.rows, other.cols)
        for i, row in self._data.items():
            acc: Vector = {}
            for k, x in row.items():
                orow = other._data.get(k)
                if orow:
                    _axpy(acc, x, orow)
            if acc:
                out._data[i] = acc
        return out

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = self.copy()
        for i, row in other._data.items():
            acc = out._data.setdefault(i, {})
            _axpy(acc, _ONE, row)
            if not acc:
                del out._data[i]
        return out

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def scale(self, c) -> "RatMatrix":
        c = _frac(c)
        out = RatMatrix(self.rows, self.cols)
        if c:
            out._data = {i: {j: c * x for j, x in row.items()} for i, row in self._data.items()}
        return out

    def copy(self) -> "RatMatrix":
        out = RatMatrix(self.rows, self.cols)
        out._data = {i: dict(row) for i, row in self._data.items()}
        return out

    def is_zero(self) -> bool:
        return not self._data

    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def to_lists(self) -> list[list[Fraction]]:
        return [list(dense(self._data.get(i, {}), self.cols)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = [[str(x) for x in row] for row in self.to_lists()]
            return f"RatMatrix({self.rows}x{self.cols}, {body})"
        return f"RatMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


class Echelon:
    """Incremental row echelon form with optional tag bookkeeping.

    Each stored row has a leading 1 in its pivot column and zeros in every
    pivot column inserted before it.  Reduction eliminates pivot columns in
    insertion order, so a row can only reintroduce later pivots and the loop
    terminates.  Tags are sparse vectors carried along linearly; they let
    callers recover coordinates with respect to the inserted vectors.
    """

    __slots__ = ("_rows", "_order")

    def __init__(self):
        self._rows: dict[int, tuple[Vector, Vector]] = {}
        self._order: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._order, key=self._order.__getitem__)

    def reduce(self, v: Mapping[int, Fraction]) -> tuple[Vector, Vector]:
        """Return ``(residual, combo)`` with ``v = residual + sum combo-weighted rows``.

        ``combo`` is the matching combination of row tags.
        """
        v = dict(v)
        combo: Vector = {}
        rows, order = self._rows, self._order
        heap = [(order[c], c) for c in v if c in rows]
        heapq.heapify(heap)
        while heap:
            _, c = heapq.heappop(heap)
            coef = v.get(c)
            if not coef:
                continue
            row, tag = rows[c]
            for k, x in row.items():
                nv = v.get(k, _ZERO) - coef * x
                if nv:
                    if k not in v and k in rows:
                        heapq.heappush(heap, (order[k], k))
                    v[k] = nv
                else:
                    v.pop(k, None)
            if tag:
                _axpy(combo, coef, tag)
        return v, combo

    def insert(self, v: Mapping[int, Fraction], tag: Mapping[int, Fraction] | None = None) -> bool:
        """Add ``v``; return False (and store nothing) if it is already in the span."""
        res, combo = self.reduce(v)
        if not res:
            return False
        t = dict(tag) if tag else {}
        _axpy(t, Fraction(-1), combo)
        c = min(res)
        inv = 1 / res[c]
        if inv != 1:
            res = {k: x * inv for k, x in res.items()}
            t = {k: x * inv for k, x in t.items()}
        self._order[c] = len(self._order)
        self._rows[c] = (res, t)
        return True

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)[0]

    def rref_rows(self) -> dict[int, Vector]:
        """Fully reduced rows keyed by pivot column (tags discarded)."""
        rows = {c: dict(r) for c, (r, _) in self._rows.items()}
        for c in sorted(self._order, key=self._order.__getitem__, reverse=True):
            row = rows[c]
            for k in [k for k in row if k != c and k in rows]:
                coef = row.get(k)
                if coef:
                    _axpy(row, -coef, rows[k])
        return rows


def _row_echelon(M: RatMatrix) -> Echelon:
    ech = Echelon()
    for _, row in M.row_items():
        ech.insert(row)
    return ech


def rank(M: RatMatrix) -> int:
    """Rank of ``M`` over Q."""
    return len(_row_echelon(M))


def kernel_vectors(M: RatMatrix) -> list[Vector]:
    """Sparse basis of ``{v : Mv = 0}``, one vector per free column (ascending)."""
    rref = _row_echelon(M).rref_rows()
    free_hits: dict[int, list[tuple[int, Fraction]]] = {}
    for c, row in rref.items():
        for k, x in row.items():
            if k != c:
                free_hits.setdefault(k, []).append((c, x))
    out = []
    for f in range(M.cols):
        if f in rref:
            continue
        v = {f: _ONE}
        for c, x in free_hits.get(f, ()):
            v[c] = -x
        out.append(v)
    return out


def kernel_basis(M: RatMatrix) -> "Subspace":
    return Subspace(M.cols, kernel_vectors(M), _independent=True)


def image_basis(M: RatMatrix) -> "Subspace":
    """Column space of ``M``, spanned by the columns of ``M`` that are
    independent of the columns before them."""
    return Subspace.span(M.rows, M.columns())


class Subspace:
    """A subspace of ``Q^ambient_dim`` given by an independent basis."""

    __slots__ = ("ambient_dim", "_basis", "_ech")

    def __init__(self, ambient_dim: int, basis: Iterable[VectorLike] = (), _independent: bool = False):
        self.ambient_dim = ambient_dim
        vecs = [as_vector(v, ambient_dim) for v in basis]
        self._ech: Echelon | None = None
        if not _independent:
            ech = Echelon()
            for v in vecs:
                if not ech.insert(v):
                    raise ValueError("basis vectors are linearly dependent")
            self._ech = ech
        self._basis = vecs

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[VectorLike]) -> "Subspace":
        """Greedy basis: keep each vector that is independent of those kept so far."""
        ech = Echelon()
        kept = []
        for v in vectors:
            v = as_vector(v, ambient_dim)
            if v and ech.insert(v):
                kept.append(v)
        s = cls(ambient_dim, kept, _independent=True)
        s._ech = ech
        return s

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), _independent=True)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.coordinate(ambient_dim, range(ambient_dim))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        return cls(ambient_dim, ({i: _ONE} for i in indices), _independent=True)

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def vectors(self) -> list[Vector]:
        return self._basis

    @property
    def basis(self) -> list[tuple[Fraction, ...]]:
        return [dense(v, self.ambient_dim) for v in self._basis]

    def echelon(self) -> Echelon:
        if self._ech is None:
            ech = Echelon()
            for v in self._basis:
                ech.insert(v)
            self._ech = ech
        return self._ech

    def contains(self, v: VectorLike) -> bool:
        return self.echelon().contains(as_vector(v, self.ambient_dim))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        ech = self.echelon()
        return all(ech.contains(v) for v in other._basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.span(self.ambient_dim, list(self._basis) + list(other._basis))

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def same_as(self, other: "Subspace") -> bool:
        return self.dim == other.dim and self <= other

    def image(self, f: RatMatrix) -> "Subspace":
        if f.cols != self.ambient_dim:
            raise ValueError("map does not start at this ambient space")
        return Subspace.span(f.rows, (f.apply(v) for v in self._basis))

    def _same_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class Subquotient:
    """``Z / B`` inside a common ambient space, with chosen representatives.

    The representatives are the basis vectors of ``Z`` that are independent
    modulo ``B``, taken in basis order, so they are reproducible.
    """

    __slots__ = ("Z", "B", "reps", "_coord")

    def __init__(self, Z: Subspace, B: Subspace):
        if Z.ambient_dim != B.ambient_dim:
            raise ContainmentError("numerator and denominator live in different spaces")
        if not Z.contains_subspace(B):
            raise ContainmentError("ill-formed subquotient: B is not contained in Z")
        self.Z = Z
        self.B = B
        coord = Echelon()
        for v in B.vectors:
            coord.insert(v)
        reps = []
        for v in Z.vectors:
            if coord.insert(v, {len(reps): _ONE}):
                reps.append(v)
        self.reps = reps
        self._coord = coord

    @property
    def ambient_dim(self) -> int:
        return self.Z.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.reps)

    def representatives(self) -> list[tuple[Fraction, ...]]:
        return [dense(v, self.ambient_dim) for v in self.reps]

    def coordinates(self, v: VectorLike) -> list[Fraction]:
        """Coordinates of the class of ``v`` (which must lie in Z) in the representatives."""
        res, combo = self._coord.reduce(as_vector(v, self.ambient_dim))
        if res:
            raise ContainmentError("vector does not lie in the numerator Z")
        return [combo.get(i, _ZERO) for i in range(self.dim)]

    def is_zero_class(self, v: VectorLike) -> bool:
        return not any(self.coordinates(v))

    def __repr__(self) -> str:
        return f"Subquotient(dim={self.dim}, Z={self.Z.dim}, B={self.B.dim}, ambient={self.ambient_dim})"


def subquotient(Z: Subspace, B: Subspace) -> Subquotient:
    return Subquotient(Z, B)


def induced_map(f: RatMatrix, src: Subquotient, tgt: Subquotient) -> RatMatrix:
    """Matrix of the map ``src -> tgt`` induced by ``f`` on representatives."""
    if f.cols != src.ambient_dim or f.rows != tgt.ambient_dim:
        raise ValueError(
            f"map of shape {f.shape} does not go from ambient {src.ambient_dim} to {tgt.ambient_dim}"
        )
    tZ = tgt.Z.echelon()
    for v in src.Z.vectors:
        if not tZ.contains(f.apply(v)):
            raise ContainmentError("induced map ill-defined: f(Z_src) is not contained in Z_tgt")
    tB = tgt.B.echelon()
    for v in src.B.vectors:
        if not tB.contains(f.apply(v)):
            raise ContainmentError("induced map ill-defined: f(B_src) is not contained in B_tgt")
    cols = [tgt.coordinates(f.apply(v)) for v in src.reps]
    return RatMatrix.from_columns(tgt.dim, cols)


def is_isomorphism(M: RatMatrix) -> bool:
    return M.rows == M.cols and rank(M) == M.rows
