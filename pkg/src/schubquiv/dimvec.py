"""
Permutation-indexed dimension vectors on the grid quiver.

``rank_vector(w)`` holds ``#{k <= j : w(k) <= i}``; ``smooth_vector(w)`` is
the companion vector for smooth ``w``, which keeps the rank entry only where
it is extremal (0 or ``min(i, j)``) and otherwise copies the larger of the
upper and left neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import LengthDecrease, NotSmooth, WindowTooSmall
from .gridquiver import DimensionVector
from .perm import Permutation, is_smooth

__all__ = [
    "FreeVertex", "InclusionConditions", "rank_vector", "apply_simple_update",
    "free_vertices", "smooth_vector", "extract_inclusions", "crossing_pairs",
]


@dataclass(frozen=True, order=True)
class FreeVertex:
    row: int
    col: int
    value: int

    def to_json(self) -> dict:
        return {"row": self.row, "col": self.col, "value": self.value}


@dataclass(frozen=True)
class Inclusion:
    q: int
    lower: int  # F_lower <= V_q; 0 means no condition
    upper: int  # V_q <= F_upper; n + 1 means no condition


@dataclass(frozen=True)
class InclusionConditions:
    n: int
    columns: tuple[Inclusion, ...]

    def lower(self, q: int) -> int:
        return self.columns[q - 1].lower

    def upper(self, q: int) -> int:
        return self.columns[q - 1].upper

    def to_json(self) -> dict:
        return {"columns": [{"q": c.q, "lower": c.lower, "upper": c.upper} for c in self.columns]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "InclusionConditions":
        cols = tuple(Inclusion(int(c["q"]), int(c["lower"]), int(c["upper"])) for c in obj["columns"])
        return cls(len(cols), cols)

    def describe(self) -> list[str]:
        """Human-readable list, e.g. ``['V_1 <= F_3', 'F_1 <= V_2 <= F_3']``."""
        out = []
        for c in self.columns:
            parts = []
            if c.lower > 0:
                parts.append(f"F_{c.lower}")
            parts.append(f"V_{c.q}")
            if c.upper < self.n + 1:
                parts.append(f"F_{c.upper}")
            if len(parts) > 1:
                out.append(" <= ".join(parts))
        return out


def rank_vector(w: Permutation) -> DimensionVector:
    if w.window < 3:
        raise WindowTooSmall(f"grid quiver needs window >= 3, got {w.window}")
    n = w.window - 1
    rows = []
    for i in range(1, n + 2):
        acc, row = 0, []
        for j in range(1, n + 1):
            acc += w(j) <= i
            row.append(acc)
        rows.append(tuple(row))
    return DimensionVector(n, tuple(rows))


def apply_simple_update(rv: DimensionVector, w: Permutation, i: int) -> DimensionVector:
    """
    Rank vector of ``s_i w`` from that of ``w``: row ``i`` drops by one on the
    columns ``w^{-1}(i) <= q < w^{-1}(i+1)``, nothing else moves.
    """
    q_lo, q_hi = w.position(i), w.position(i + 1)
    if q_lo > q_hi:
        raise LengthDecrease(f"s_{i} shortens {w}")
    rows = [list(r) for r in rv.rows]
    for q in range(q_lo, min(q_hi, rv.n + 1)):
        rows[i - 1][q - 1] -= 1
    return DimensionVector(rv.n, tuple(map(tuple, rows)))


def free_vertices(rv: DimensionVector) -> list[FreeVertex]:
    out = []
    for p in range(1, rv.n + 2):
        for q in range(1, rv.n + 1):
            r = rv[p, q]
            if r < p and r > rv.get(p - 1, q) and r > rv.get(p, q - 1):
                out.append(FreeVertex(p, q, r))
    return out


def smooth_vector(w: Permutation, order: str = "row") -> DimensionVector:
    """
    ``order`` selects row-major or column-major evaluation; both respect the
    grid partial order and must agree.
    """
    if not is_smooth(w):
        raise NotSmooth(f"{w} contains [4231] or [3412]")
    rv = rank_vector(w)
    n = rv.n
    e = [[0] * (n + 1) for _ in range(n + 2)]  # padded with a zero boundary
    cells = [(i, j) for i in range(1, n + 2) for j in range(1, n + 1)]
    if order == "col":
        cells.sort(key=lambda ij: (ij[1], ij[0]))
    for i, j in cells:
        r = rv[i, j]
        e[i][j] = r if r in (0, min(i, j)) else max(e[i - 1][j], e[i][j - 1])
    return DimensionVector(n, tuple(tuple(e[i][1:]) for i in range(1, n + 2)))


def extract_inclusions(w: Permutation, check_smooth: bool = True) -> InclusionConditions:
    """
    Per column ``q``: ``V_q <= F_upper`` with ``upper`` the first row where the
    rank entry reaches ``q``, and ``F_lower <= V_q`` with ``lower`` the last
    row where it equals the row index.  Redundant conditions are kept.

    With ``check_smooth=False`` a singular ``w`` is accepted and only the
    inclusion-type consequences of its rank conditions are returned (these
    no longer cut out ``X_w``).
    """
    if check_smooth and not is_smooth(w):
        raise NotSmooth(f"{w} contains [4231] or [3412]")
    rv = rank_vector(w)
    n = rv.n
    cols = []
    for q in range(1, n + 1):
        upper = min(i for i in range(1, n + 2) if rv[i, q] == q)
        lower = max([i for i in range(1, n + 2) if rv[i, q] == i], default=0)
        cols.append(Inclusion(q, lower, upper))
    return InclusionConditions(n, tuple(cols))


def crossing_pairs(inc: InclusionConditions) -> list[tuple[int, int]]:
    """
    Pairs ``(q, q')``, ``q < q'``, where ``V_q <= F_p`` and ``F_p' <= V_q'``
    cross (``p > p'``).

    Only conditions not already implied along the chain are compared: an
    upper bound on ``V_q`` is implied when some ``V_q''``, ``q'' > q``, has an
    upper bound at most as large, and dually for lower bounds.
    """
    n = inc.n
    uppers = [c.upper for c in inc.columns]
    lowers = [c.lower for c in inc.columns]
    upper_kept = [uppers[k] < n + 1 and all(uppers[k] < u for u in uppers[k + 1:]) for k in range(n)]
    lower_kept = [lowers[k] > 0 and all(lowers[k] > l for l in lowers[:k]) for k in range(n)]
    pairs = []
    for a in range(n):
        if not upper_kept[a]:
            continue
        for b in range(a + 1, n):
            if lower_kept[b] and uppers[a] > lowers[b]:
                pairs.append((a + 1, b + 1))
    return pairs
