"""
Brute-force point counts over prime fields.

Four independent counters:

* ``count_subrepresentations``: subrepresentations of ``M`` over F_q with a
  given dimension vector, enumerated cell by cell in column-major order;
* ``count_schubert_points``: flags satisfying the Schubert rank conditions;
* ``count_bott_samelson_points``: towers of flags, one position moved per
  letter;
* ``bruhat_interval_point_count``: ``sum_{u <= w} q^{l(u)}``.

The first two run on the counting kernel (compiled when available).
Enumeration budgets are hard errors; ``SQ_BUDGET_MS`` caps wall time.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import kernel
from .errors import BudgetExceeded, EntryExceedsAmbient, NotReduced, ShapeMismatch
from .gridquiver import DimensionVector
from .linalg import check_field
from .perm import Permutation, all_permutations, bruhat_leq, length, rank_matrix
from .subspace import Subspace, enumerate_subspaces, standard_flag_space
from .words import ReducedWord, is_reduced

__all__ = [
    "FlagPoint", "enumerate_flags", "count_subrepresentations", "count_schubert_points",
    "count_bott_samelson_points", "bruhat_interval_point_count", "budget_deadline",
    "MAX_SUBREP_N", "MAX_FLAG_WINDOW",
]

MAX_SUBREP_N = 4
MAX_FLAG_WINDOW = 5
MAX_INTERVAL_WINDOW = 8
DEFAULT_BUDGET_MS = 120_000


def budget_deadline() -> float:
    ms = int(os.environ.get("SQ_BUDGET_MS", DEFAULT_BUDGET_MS))
    return time.monotonic() + ms / 1000.0


def _check_prime(q: int) -> int:
    if isinstance(q, bool) or not isinstance(q, int):
        raise ValueError("point counts need a prime field")
    return check_field(q)


@dataclass(frozen=True)
class FlagPoint:
    q: int
    window: int
    chain: tuple[Subspace, ...]

    def __post_init__(self):
        if len(self.chain) != self.window - 1:
            raise ValueError("a full flag has window - 1 proper subspaces")
        for k, v in enumerate(self.chain, start=1):
            if v.dim != k or v.ambient != self.window or v.q != self.q:
                raise ValueError(f"V_{k} has the wrong dimension or ambient space")
        for a, b in zip(self.chain, self.chain[1:]):
            if not a <= b:
                raise ValueError("flag is not a chain")


def enumerate_flags(q: int, window: int) -> Iterator[FlagPoint]:
    """Every full flag of F_q^window (plain recursion, no kernel)."""
    full = Subspace.full(q, window)

    def rec(chain):
        k = len(chain)
        if k == window - 1:
            yield FlagPoint(q, window, tuple(chain))
            return
        lower = chain[-1] if chain else Subspace.zero(q, window)
        for s in enumerate_subspaces(q, window, k + 1, lower, full):
            yield from rec(chain + [s])

    yield from rec([])


@lru_cache(maxsize=None)
def _masks_in_flag_space(q: int, ambient: int, i: int, d: int) -> tuple[int, ...]:
    upper = standard_flag_space(q, ambient, i)
    return tuple(s.mask for s in enumerate_subspaces(q, ambient, d, None, upper))


def count_subrepresentations(n: int, q: int, e: DimensionVector, backend: str | None = None) -> int:
    """
    Number of F_q-subrepresentations ``N`` of ``M`` with ``dim N = e``.

    Every ``N_{i,j}`` is a subspace of ``F_i`` (the coordinate copy of
    F_q^i inside F_q^{n+1}); the arrow maps force ``N_{i-1,j} + N_{i,j-1}``
    into ``N_{i,j}``, which is the only check once candidates are drawn from
    ``F_i``.
    """
    q = _check_prime(q)
    if not isinstance(e, DimensionVector) or e.n != n:
        raise ShapeMismatch(f"dimension vector does not fit the n={n} grid")
    for i in range(1, n + 2):
        for j in range(1, n + 1):
            if not 0 <= e[i, j] <= i:
                raise EntryExceedsAmbient(f"entry {e[i, j]} at ({i},{j}) outside 0..{i}")
    if n > MAX_SUBREP_N:
        raise BudgetExceeded(f"subrepresentation enumeration is limited to n <= {MAX_SUBREP_N}")
    deadline = budget_deadline()
    ambient = n + 1
    order = [(i, j) for j in range(1, n + 1) for i in range(1, n + 2)]
    index = {cell: k for k, cell in enumerate(order)}
    candidates, contains = [], []
    for i, j in order:
        candidates.append(list(_masks_in_flag_space(q, ambient, i, e[i, j])))
        contains.append([index[c] for c in ((i - 1, j), (i, j - 1)) if c in index])
    within = [[] for _ in order]
    return kernel.count_cells(candidates, contains, within, deadline, backend=backend)


@lru_cache(maxsize=None)
def _subspace_masks(q: int, ambient: int, d: int) -> tuple[Subspace, ...]:
    return tuple(enumerate_subspaces(q, ambient, d))


def count_schubert_points(w: Permutation, q: int, backend: str | None = None) -> int:
    """Flags ``V`` of F_q^m with ``dim(F_p & V_k) >= #{t <= k : w(t) <= p}``."""
    q = _check_prime(q)
    m = w.window
    if m > MAX_FLAG_WINDOW:
        raise BudgetExceeded(f"flag enumeration is limited to window <= {MAX_FLAG_WINDOW}")
    deadline = budget_deadline()
    r = rank_matrix(w)
    flag = [standard_flag_space(q, m, p) for p in range(1, m + 1)]
    candidates = []
    for k in range(1, m):
        keep = []
        for s in _subspace_masks(q, m, k):
            if all(s.meet_dim(flag[p - 1]) >= r[p - 1][k - 1] for p in range(1, m + 1)):
                keep.append(s.mask)
        candidates.append(keep)
    contains = [[]] + [[k - 1] for k in range(1, m - 1)]
    within = [[] for _ in candidates]
    return kernel.count_cells(candidates, contains, within, deadline, backend=backend)


def count_bott_samelson_points(word: ReducedWord, q: int) -> int:
    """
    Towers ``(V^1, ..., V^N)`` with ``V^0`` the standard flag and ``V^k``
    agreeing with ``V^{k-1}`` away from position ``i_k``.  Step ``k`` ranges
    over the subspaces between ``V^{k-1}_{i_k - 1}`` and ``V^{k-1}_{i_k + 1}``.
    """
    q = _check_prime(q)
    if not is_reduced(word):
        raise NotReduced(f"{word} is not reduced")
    m = word.window
    if m > MAX_FLAG_WINDOW:
        raise BudgetExceeded(f"flag enumeration is limited to window <= {MAX_FLAG_WINDOW}")
    deadline = budget_deadline()
    letters = [word.letter(k) for k in range(1, len(word) + 1)]
    # positions 0 and m hold the fixed 0 and F_q^m
    start = tuple(standard_flag_space(q, m, a) for a in range(0, m + 1))
    choices: dict[tuple, list[Subspace]] = {}
    ticks = 0

    def rec(k: int, flag: tuple[Subspace, ...]) -> int:
        nonlocal ticks
        if k == len(letters):
            return 1
        i = letters[k]
        key = (flag[i - 1].basis, flag[i + 1].basis, i)
        opts = choices.get(key)
        if opts is None:
            opts = list(enumerate_subspaces(q, m, i, flag[i - 1], flag[i + 1]))
            choices[key] = opts
        ticks += 1
        if ticks % 4096 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("enumeration exceeded its wall-time budget")
        total = 0
        for s in opts:
            total += rec(k + 1, flag[:i] + (s,) + flag[i + 1:])
        return total

    return rec(0, start)


def bruhat_interval_point_count(w: Permutation, q: int) -> int:
    """Cell-decomposition count ``sum_{u <= w} q^{l(u)}``."""
    if w.window > MAX_INTERVAL_WINDOW:
        raise BudgetExceeded(f"interval enumeration is limited to window <= {MAX_INTERVAL_WINDOW}")
    return sum(q ** length(u) for u in all_permutations(w.window) if bruhat_leq(u, w))
