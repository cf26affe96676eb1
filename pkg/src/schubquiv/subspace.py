"""
Subspaces of F_q^m in canonical (reduced row-echelon) form.

Vectors are coordinate tuples; coordinate ``t`` (0-based) is the
coefficient of ``b_{t+1}``, so the standard flag is ``F_i = <b_1, ..., b_i>``.
Each subspace also has an *element mask*: bit ``code(v)`` is set for every
vector ``v`` it contains, with ``code(v) = sum_t v_t q^t``.  Containment and
intersection then reduce to bitwise operations on masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import BadSandwich
from .linalg import rref_mod_p

__all__ = ["Subspace", "standard_flag_space", "enumerate_subspaces", "gaussian_binomial", "vector_code"]

Vector = tuple[int, ...]


def vector_code(v: Sequence[int], q: int) -> int:
    code = 0
    for t in reversed(v):
        code = code * q + t
    return code


@lru_cache(maxsize=None)
def _mask(q: int, ambient: int, basis: tuple[Vector, ...]) -> int:
    vecs = [(0,) * ambient]
    for b in basis:
        vecs = [tuple((x + c * y) % q for x, y in zip(v, b)) for v in vecs for c in range(q)]
    mask = 0
    for v in vecs:
        mask |= 1 << vector_code(v, q)
    return mask


def _decode(code: int, q: int, ambient: int) -> Vector:
    out = []
    for _ in range(ambient):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class Subspace:
    ambient: int
    q: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, q: int, ambient: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        rows = [tuple(v) for v in vectors]
        if any(len(r) != ambient for r in rows):
            raise ValueError("vector length differs from the ambient dimension")
        basis, _ = rref_mod_p(rows, q)
        return cls(ambient, q, basis)

    @classmethod
    def zero(cls, q: int, ambient: int) -> "Subspace":
        return cls(ambient, q, ())

    @classmethod
    def full(cls, q: int, ambient: int) -> "Subspace":
        return standard_flag_space(q, ambient, ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def mask(self) -> int:
        return _mask(self.q, self.ambient, self.basis)

    def elements(self) -> set[Vector]:
        m, out, code = self.mask, set(), 0
        while m:
            if m & 1:
                out.add(_decode(code, self.q, self.ambient))
            m >>= 1
            code += 1
        return out

    def __le__(self, other: "Subspace") -> bool:  # type: ignore[override]
        return self.mask & ~other.mask == 0

    def contains(self, other: "Subspace") -> bool:
        return other <= self

    def join(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.q, self.ambient, self.basis + other.basis)

    def meet_dim(self, other: "Subspace") -> int:
        size = bin(self.mask & other.mask).count("1")
        d = 0
        while size > 1:
            size //= self.q
            d += 1
        return d


def standard_flag_space(q: int, ambient: int, i: int) -> Subspace:
    return Subspace(ambient, q, tuple(tuple(int(t == s) for t in range(ambient)) for s in range(i)))


def gaussian_binomial(m: int, k: int, q: int) -> int:
    if k < 0 or k > m:
        return 0
    num = den = 1
    for t in range(k):
        num *= q ** (m - t) - 1
        den *= q ** (t + 1) - 1
    return num // den


def _rref_shapes(rank: int, cols: int, q: int) -> Iterator[list[list[int]]]:
    """All ``rank x cols`` reduced row-echelon matrices over F_q of full rank."""
    for pivots in combinations(range(cols), rank):
        free = [(r, c) for r in range(rank) for c in range(pivots[r] + 1, cols) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            mat = [[0] * cols for _ in range(rank)]
            for r, c in enumerate(pivots):
                mat[r][c] = 1
            for (r, c), x in zip(free, values):
                mat[r][c] = x
            yield mat


def enumerate_subspaces(q: int, ambient: int, dim: int,
                        lower: Subspace | None = None, upper: Subspace | None = None) -> Iterator[Subspace]:
    """
    Every ``S`` with ``lower <= S <= upper`` and ``dim S = dim``, once each,
    in lexicographic order of canonical bases.

    Works in the quotient ``upper / lower``: a complement of ``lower`` inside
    ``upper`` is picked from the basis of ``upper`` and every full-rank
    echelon matrix on that complement gives one subspace.
    """
    lower = Subspace.zero(q, ambient) if lower is None else lower
    upper = Subspace.full(q, ambient) if upper is None else upper
    if lower.q != q or upper.q != q or lower.ambient != ambient or upper.ambient != ambient:
        raise BadSandwich("bounds live in a different space")
    if not lower <= upper:
        raise BadSandwich("lower bound is not contained in the upper bound")
    if not lower.dim <= dim <= upper.dim:
        raise BadSandwich(f"dimension {dim} outside {lower.dim}..{upper.dim}")

    complement: list[Vector] = []
    acc = lower
    for b in upper.basis:
        bigger = acc.join(Subspace.span(q, ambient, [b]))
        if bigger.dim > acc.dim:
            complement.append(b)
            acc = bigger
    k = len(complement)
    found = []
    for coeffs in _rref_shapes(dim - lower.dim, k, q):
        vecs = [tuple(sum(c * v[t] for c, v in zip(row, complement)) % q for t in range(ambient))
                for row in coeffs]
        found.append(Subspace.span(q, ambient, list(lower.basis) + vecs))
    found.sort(key=lambda s: s.basis)
    yield from found
