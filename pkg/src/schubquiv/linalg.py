"""
Exact linear algebra over the rationals and prime fields.

Fields are described by a *field spec*: the string ``"Q"`` for the rationals
or a prime ``p`` for F_p.  Dense helpers work on lists of row tuples; the
sparse rank routine is used for the (few hundred unknown) Hom systems.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

FieldSpec = Union[str, int]

__all__ = ["FieldSpec", "check_field", "coerce", "rref_mod_p", "rank_mod_p", "sparse_rank"]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def check_field(field: FieldSpec) -> FieldSpec:
    if field == "Q":
        return "Q"
    if isinstance(field, int) and _is_prime(field):
        return field
    raise ValueError(f"unsupported field spec {field!r}; use 'Q' or a prime")


def coerce(field: FieldSpec, x):
    return Fraction(x) if field == "Q" else int(x) % field


def rref_mod_p(rows: Iterable[Sequence[int]], p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """
    Reduced row-echelon form over F_p.

    Returns ``(basis, pivots)`` with zero rows dropped; the basis is the
    canonical representative of the row space.
    """
    mat = [[x % p for x in r] for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(mat)) if mat[k][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c]:
                f = mat[k][c]
                mat[k] = [(a - f * b) % p for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def rank_mod_p(rows: Iterable[Sequence[int]], p: int) -> int:
    return len(rref_mod_p(rows, p)[1])


def sparse_rank(rows: Iterable[dict], field: FieldSpec) -> int:
    """
    Rank of a sparse matrix given as ``{column: coefficient}`` dicts.

    Plain Gaussian elimination keyed by pivot column; each incoming row is
    reduced against the pivots found so far.  Exact in both field kinds.
    """
    field = check_field(field)
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: coerce(field, v) for c, v in raw.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                lead = row[c]
                if field == "Q":
                    row = {k: v / lead for k, v in row.items()}
                else:
                    inv = pow(lead, field - 2, field)
                    row = {k: (v * inv) % field for k, v in row.items()}
                pivots[c] = row
                break
            f = row[c]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if field != "Q":
                    nv %= field
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)
