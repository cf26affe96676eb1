"""
The commutative grid quiver and its canonical representation.

Vertices are pairs ``(i, j)`` with ``1 <= i <= n + 1`` (rows) and
``1 <= j <= n`` (columns).  Horizontal arrows go ``(i, j) -> (i, j + 1)``,
vertical arrows ``(i, j) -> (i + 1, j)``, and every unit square carries one
commutativity relation, recorded as a count ``r((i, j), (i + 1, j + 1)) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping

from .errors import EntryExceedsAmbient, NTooSmall, ShapeMismatch
from .linalg import FieldSpec, check_field, coerce, sparse_rank

Vertex = tuple[int, int]
Arrow = tuple[Vertex, Vertex]

__all__ = [
    "GridQuiver", "DimensionVector", "GridRep", "build_quiver", "build_M", "zero_rep",
    "euler_form", "expected_grassmannian_dim", "hom_dimension", "dim_M",
]


@dataclass(frozen=True)
class GridQuiver:
    n: int

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple((i, j) for i in range(1, self.n + 2) for j in range(1, self.n + 1))

    @cached_property
    def horizontal_arrows(self) -> tuple[Arrow, ...]:
        return tuple(((i, j), (i, j + 1)) for i in range(1, self.n + 2) for j in range(1, self.n))

    @cached_property
    def vertical_arrows(self) -> tuple[Arrow, ...]:
        return tuple(((i, j), (i + 1, j)) for i in range(1, self.n + 1) for j in range(1, self.n + 1))

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.horizontal_arrows + self.vertical_arrows

    @cached_property
    def relations(self) -> dict[Arrow, int]:
        """Sparse relation counts ``r(source, target)``; one per unit square."""
        return {((i, j), (i + 1, j + 1)): 1 for i in range(1, self.n + 1) for j in range(1, self.n)}

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n + 1, self.n)


def build_quiver(n: int) -> GridQuiver:
    if n < 2:
        raise NTooSmall(f"grid quiver needs n >= 2, got {n}")
    return GridQuiver(n)


@dataclass(frozen=True)
class DimensionVector:
    """An ``(n+1) x n`` grid of naturals, addressed 1-based as ``d[i, j]``."""
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n + 1 or any(len(r) != self.n for r in rows):
            raise ShapeMismatch(f"expected {self.n + 1} rows of {self.n} entries")

    def __getitem__(self, ij: Vertex) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def get(self, i: int, j: int) -> int:
        """Entry with the zero boundary convention outside the grid."""
        if i < 1 or j < 1:
            return 0
        return self.rows[i - 1][j - 1]

    def _check(self, other: "DimensionVector") -> None:
        if not isinstance(other, DimensionVector) or other.n != self.n:
            raise ShapeMismatch("dimension vectors of different shapes")

    def __add__(self, other: "DimensionVector") -> "DimensionVector":
        self._check(other)
        return DimensionVector(self.n, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "DimensionVector") -> "DimensionVector":
        self._check(other)
        return DimensionVector(self.n, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def total(self) -> int:
        return sum(map(sum, self.rows))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "DimensionVector":
        return cls(int(obj["n"]), tuple(tuple(r) for r in obj["rows"]))

    @classmethod
    def zero(cls, n: int) -> "DimensionVector":
        return cls(n, tuple((0,) * n for _ in range(n + 1)))

    def render(self) -> str:
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


def dim_M(n: int) -> DimensionVector:
    return DimensionVector(n, tuple((i,) * n for i in range(1, n + 2)))


Matrix = tuple[tuple, ...]


def _matmul(a: Matrix, b: Matrix, field: FieldSpec) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        vals = []
        for c in range(cols):
            s = sum(row[k] * b[k][c] for k in range(inner))
            vals.append(s if field == "Q" else s % field)
        out.append(tuple(vals))
    return tuple(out)


@dataclass(frozen=True)
class GridRep:
    """
    A representation of the grid quiver: a dimension per vertex and a matrix
    per arrow (``dim target`` rows by ``dim source`` columns).
    """
    n: int
    field: FieldSpec
    dims: Mapping[Vertex, int]
    maps: Mapping[Arrow, Matrix] = dc_field(default_factory=dict)

    def __post_init__(self):
        check_field(self.field)
        quiver = GridQuiver(self.n)
        for arrow in quiver.arrows:
            src, tgt = arrow
            mat = self.maps[arrow]
            if len(mat) != self.dims[tgt] or any(len(r) != self.dims[src] for r in mat):
                raise ShapeMismatch(f"map on arrow {arrow} has the wrong shape")
        if not self.satisfies_relations():
            raise ValueError("representation violates a commutativity relation")

    @property
    def quiver(self) -> GridQuiver:
        return GridQuiver(self.n)

    def satisfies_relations(self) -> bool:
        for i in range(1, self.n + 1):
            for j in range(1, self.n):
                right = self.maps[((i, j), (i, j + 1))]
                down_after = self.maps[((i, j + 1), (i + 1, j + 1))]
                down = self.maps[((i, j), (i + 1, j))]
                right_after = self.maps[((i + 1, j), (i + 1, j + 1))]
                if _matmul(down_after, right, self.field) != _matmul(right_after, down, self.field):
                    return False
        return True

    def dimension_vector(self) -> DimensionVector:
        return DimensionVector(self.n, tuple(tuple(self.dims[(i, j)] for j in range(1, self.n + 1))
                                             for i in range(1, self.n + 2)))


def _identity(k: int, field: FieldSpec) -> Matrix:
    return tuple(tuple(coerce(field, int(r == c)) for c in range(k)) for r in range(k))


def _inclusion(k: int, field: FieldSpec) -> Matrix:
    # F^k -> F^(k+1), first k coordinates
    return tuple(tuple(coerce(field, int(r == c)) for c in range(k)) for r in range(k + 1))


def build_M(q: GridQuiver, field: FieldSpec = "Q") -> GridRep:
    field = check_field(field)
    dims = {(i, j): i for (i, j) in q.vertices}
    maps = {}
    for (src, tgt) in q.horizontal_arrows:
        maps[(src, tgt)] = _identity(src[0], field)
    for (src, tgt) in q.vertical_arrows:
        maps[(src, tgt)] = _inclusion(src[0], field)
    return GridRep(q.n, field, dims, maps)


def zero_rep(q: GridQuiver, field: FieldSpec = "Q") -> GridRep:
    dims = {v: 0 for v in q.vertices}
    return GridRep(q.n, check_field(field), dims, {a: () for a in q.arrows})


def euler_form(q: GridQuiver, d1: DimensionVector, d2: DimensionVector) -> int:
    for d in (d1, d2):
        if not isinstance(d, DimensionVector) or d.n != q.n:
            raise ShapeMismatch(f"dimension vector does not fit the n={q.n} grid")
    total = sum(d1[v] * d2[v] for v in q.vertices)
    total -= sum(d1[s] * d2[t] for s, t in q.arrows)
    total += sum(c * d1[s] * d2[t] for (s, t), c in q.relations.items())
    return total


def expected_grassmannian_dim(q: GridQuiver, e: DimensionVector) -> int:
    """``<e, dim M - e>``: the dimension of the quiver Grassmannian when non-empty."""
    if not isinstance(e, DimensionVector) or e.n != q.n:
        raise ShapeMismatch(f"dimension vector does not fit the n={q.n} grid")
    ambient = dim_M(q.n)
    for v in q.vertices:
        if e[v] > ambient[v] or e[v] < 0:
            raise EntryExceedsAmbient(f"entry {e[v]} at {v} outside 0..{ambient[v]}")
    return euler_form(q, e, ambient - e)


def hom_dimension(r1: GridRep, r2: GridRep) -> int:
    """
    ``dim Hom(r1, r2)``: nullity of the system ``phi_t A1 = A2 phi_s`` over
    all arrows, one unknown matrix ``phi_v`` (``d2(v) x d1(v)``) per vertex.
    """
    if r1.n != r2.n or r1.field != r2.field:
        raise ShapeMismatch("representations live on different quivers or fields")
    field = r1.field
    quiver = r1.quiver
    offset = {}
    nvars = 0
    for v in quiver.vertices:
        offset[v] = nvars
        nvars += r2.dims[v] * r1.dims[v]

    def var(v, a, b):  # entry (a, b) of phi_v
        return offset[v] + a * r1.dims[v] + b

    rows = []
    for arrow in quiver.arrows:
        s, t = arrow
        A1, A2 = r1.maps[arrow], r2.maps[arrow]
        # entry (a, b) of phi_t A1 - A2 phi_s, a < d2(t), b < d1(s)
        for a in range(r2.dims[t]):
            for b in range(r1.dims[s]):
                row: dict[int, object] = {}
                for k in range(r1.dims[t]):
                    c = A1[k][b]
                    if c:
                        key = var(t, a, k)
                        row[key] = row.get(key, 0) + c
                for k in range(r2.dims[s]):
                    c = A2[a][k]
                    if c:
                        key = var(s, k, b)
                        row[key] = row.get(key, 0) - c
                if row:
                    rows.append(row)
    return nvars - sparse_rank(rows, field)
