"""
Letter-to-vertex dictionary between a compatible word and the grid.

Letter ``k`` (counted from the right) with index ``i_k`` goes to row
``i_k + 1 + n_k``, where ``n_k`` counts earlier (further right) copies of the
same letter, and to the column of the unique free vertex of that row whose
value is ``i_k``.

That rule is not total: for some compatible words the row ``i_k + 1 + n_k``
holds no free vertex of the right value (``[312]`` with its only word
``s_2 s_1`` is the smallest case).  ``rule="row-order"`` instead sends the
``c``-th copy of letter ``i`` to the ``c``-th free vertex of value ``i`` in
row order; it agrees with the first rule wherever that one succeeds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimvec import FreeVertex, free_vertices, rank_vector
from .errors import NoSuchFreeVertex, NotCompatible
from .perm import Permutation, identity, left_multiply_simple
from .words import ReducedWord, is_geometrically_compatible

__all__ = [
    "Target", "VertexAssignment", "bs_vertex_assignment", "column_offsets",
    "FlagStep", "bs_flag_constraints", "RULES",
]


@dataclass(frozen=True)
class Target:
    k: int
    letter: int
    row: int
    col: int


@dataclass(frozen=True)
class VertexAssignment:
    word: ReducedWord
    targets: tuple[Target, ...]  # ordered by k = 1..N

    def to_json(self) -> dict:
        return {
            "word": list(self.word.letters),
            "targets": [{"k": t.k, "letter": t.letter, "row": t.row, "col": t.col} for t in self.targets],
        }

    def target(self, k: int) -> Target:
        return self.targets[k - 1]


RULES = ("row", "row-order")


def bs_vertex_assignment(word: ReducedWord, w: Permutation, rule: str = "row") -> VertexAssignment:
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    if not is_geometrically_compatible(word, w):
        raise NotCompatible(f"{word} is not geometrically compatible for {w}")
    fvs = free_vertices(rank_vector(w))
    if rule == "row-order":
        return _assign_in_row_order(word, fvs)
    by_row_value: dict[tuple[int, int], FreeVertex] = {}
    for fv in fvs:
        # values strictly increase along a row, so (row, value) is a key
        assert (fv.row, fv.value) not in by_row_value
        by_row_value[(fv.row, fv.value)] = fv

    seen: dict[int, int] = {}
    targets = []
    for k in range(1, len(word) + 1):
        i = word.letter(k)
        n_k = seen.get(i, 0)
        seen[i] = n_k + 1
        row = i + 1 + n_k
        fv = by_row_value.get((row, i))
        if fv is None:
            raise NoSuchFreeVertex(f"no free vertex of value {i} in row {row} (letter k={k})")
        targets.append(Target(k, i, row, fv.col))

    if sorted((t.row, t.col) for t in targets) != sorted((fv.row, fv.col) for fv in fvs):
        raise NoSuchFreeVertex("assignment is not a bijection onto the free vertices")
    return VertexAssignment(word, tuple(targets))


def _assign_in_row_order(word: ReducedWord, fvs) -> VertexAssignment:
    by_value: dict[int, list[FreeVertex]] = {}
    for fv in sorted(fvs, key=lambda f: (f.row, f.col)):
        by_value.setdefault(fv.value, []).append(fv)
    seen: dict[int, int] = {}
    targets = []
    for k in range(1, len(word) + 1):
        i = word.letter(k)
        c = seen.get(i, 0)
        seen[i] = c + 1
        # compatibility guarantees enough free vertices of each value
        fv = by_value[i][c]
        targets.append(Target(k, i, fv.row, fv.col))
    return VertexAssignment(word, tuple(targets))


def column_offsets(assignment: VertexAssignment) -> list[tuple[int, int]]:
    """
    For each letter, ``(col - i_k, m_k)`` where ``m_k`` recounts the letters
    ``j > k`` whose swapped positions ``q_{i_j} <= col < q_{i_j + 1}`` (taken in
    the partial product before letter ``j``) straddle the target column.
    """
    word = assignment.word
    partials = [identity(word.window)]
    for k in range(1, len(word) + 1):
        partials.append(left_multiply_simple(word.letter(k), partials[-1]))
    out = []
    for t in assignment.targets:
        m = 0
        for j in range(t.k + 1, len(word) + 1):
            u = partials[j - 1]
            a = word.letter(j)
            if u.position(a) <= t.col < u.position(a + 1):
                m += 1
        out.append((t.col - t.letter, m))
    return out


@dataclass(frozen=True)
class FlagStep:
    """Step ``k``: ``V^k`` equals ``V^{k-1}`` except at ``position``."""
    k: int
    position: int
    # chain[a - 1] = step at which V_a was last chosen (0 = standard flag)
    chain: tuple[int, ...]


def bs_flag_constraints(word: ReducedWord) -> list[FlagStep]:
    chain = [0] * (word.window - 1)
    steps = []
    for k in range(1, len(word) + 1):
        i = word.letter(k)
        chain[i - 1] = k
        steps.append(FlagStep(k, i, tuple(chain)))
    return steps
