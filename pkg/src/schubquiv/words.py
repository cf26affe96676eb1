"""
Reduced words in the simple transpositions of S_m and their rewriting.

A :class:`ReducedWord` stores its letters as written, left to right, so
``(1, 2, 3, 1, 2, 1, 4)`` is ``s_1 s_2 s_3 s_1 s_2 s_1 s_4``; the rightmost
letter acts first.  Letter ``k`` in the 1-based right-to-left count is
``letters[-k]``.

Geometric compatibility compares the letter multiset with the multiset of
free-vertex values of the rank vector.  :func:`geometrically_compatible_word`
repairs an arbitrary reduced word by commute-then-braid moves, each of which
shifts one letter count to a neighbouring index, and falls back to an
exhaustive breadth-first search of the rewriting graph if that stalls.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .dimvec import free_vertices, rank_vector
from .errors import (
    LetterOutOfRange,
    NotABraid,
    NotCommuting,
    NotReduced,
    WordDoesNotEvaluateToW,
)
from .perm import Permutation, identity, left_multiply_simple, length, some_reduced_word

__all__ = [
    "ReducedWord", "parse_word", "evaluate_word", "is_reduced", "commutation_move",
    "braid_move", "is_geometrically_compatible", "geometrically_compatible_word",
    "target_multiset", "repair", "reduced_words", "Move",
]


@dataclass(frozen=True)
class ReducedWord:
    window: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for a in self.letters:
            if not 1 <= a < self.window:
                raise LetterOutOfRange(f"s_{a} is not a letter of S_{self.window}")

    def __len__(self) -> int:
        return len(self.letters)

    def letter(self, k: int) -> int:
        """``i_k``, counting from the right end (``k = 1`` acts first)."""
        return self.letters[-k]

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


def parse_word(text: str, window: int) -> ReducedWord:
    tokens = text.replace(",", " ").split()
    if any(not t.isdigit() for t in tokens):
        from .errors import MalformedInput
        raise MalformedInput(f"cannot parse word {text!r}")
    return ReducedWord(window, tuple(int(t) for t in tokens))


def evaluate_word(word: ReducedWord) -> Permutation:
    w = identity(word.window)
    for a in reversed(word.letters):
        w = left_multiply_simple(a, w)
    return w


def is_reduced(word: ReducedWord) -> bool:
    return len(word) == length(evaluate_word(word))


def commutation_move(word: ReducedWord, pos: int) -> ReducedWord:
    """Swap the letters at 1-based positions ``pos`` and ``pos + 1``."""
    L = list(word.letters)
    if not 1 <= pos < len(L):
        raise NotCommuting(f"no letter pair at position {pos}")
    a, b = L[pos - 1], L[pos]
    if abs(a - b) < 2:
        raise NotCommuting(f"s_{a} and s_{b} do not commute")
    L[pos - 1], L[pos] = b, a
    return ReducedWord(word.window, tuple(L))


def braid_move(word: ReducedWord, pos: int) -> ReducedWord:
    """Replace ``a b a`` at positions ``pos..pos+2`` by ``b a b`` (``|a - b| = 1``)."""
    L = list(word.letters)
    if not 1 <= pos <= len(L) - 2:
        raise NotABraid(f"no letter triple at position {pos}")
    a, b, c = L[pos - 1:pos + 2]
    if a != c or abs(a - b) != 1:
        raise NotABraid(f"s_{a} s_{b} s_{c} is not a braid")
    L[pos - 1:pos + 2] = [b, a, b]
    return ReducedWord(word.window, tuple(L))


def target_multiset(w: Permutation) -> Counter:
    return Counter(fv.value for fv in free_vertices(rank_vector(w)))


def is_geometrically_compatible(word: ReducedWord, w: Permutation) -> bool:
    if evaluate_word(word) != w:
        raise WordDoesNotEvaluateToW(f"{word} does not evaluate to {w}")
    if not is_reduced(word):
        raise NotReduced(f"{word} is not reduced")
    return Counter(word.letters) == target_multiset(w)


@dataclass(frozen=True)
class Move:
    kind: str  # "commute" or "braid"
    pos: int
    result: ReducedWord


def _prefix_gap(counts: Counter, target: Counter, upto: int) -> int:
    return sum(counts[a] for a in range(1, upto + 1)) - sum(target[a] for a in range(1, upto + 1))


def _find_repair(word: ReducedWord, target: Counter) -> list[Move] | None:
    """
    One commute-then-braid step that moves a letter count towards ``target``.

    Scans pairs of consecutive occurrences of a letter ``a`` (leftmost
    first) with exactly one non-commuting letter ``b = a +- 1`` between them;
    such a pair can be commuted into ``a b a`` and braided to ``b a b``.
    The step is taken only if it lowers ``sum_i |C_i - D_i|`` over prefix
    counts, which is zero exactly for compatible words.
    """
    L = word.letters
    counts = Counter(L)
    for x in range(len(L)):
        a = L[x]
        y = next((k for k in range(x + 1, len(L)) if L[k] == a), None)
        if y is None:
            continue
        blockers = [k for k in range(x + 1, y) if abs(L[k] - a) == 1]
        if len(blockers) != 1:
            continue
        mid = blockers[0]
        b = L[mid]
        gap = _prefix_gap(counts, target, min(a, b))
        if (b < a and gap >= 0) or (b > a and gap <= 0):
            continue
        moves = []
        cur = word
        left, right = x, y
        while left + 1 < mid:  # push the left copy rightwards
            cur = commutation_move(cur, left + 1)
            moves.append(Move("commute", left + 1, cur))
            left += 1
        while right - 1 > mid:  # pull the right copy leftwards
            cur = commutation_move(cur, right)
            moves.append(Move("commute", right, cur))
            right -= 1
        cur = braid_move(cur, left + 1)
        moves.append(Move("braid", left + 1, cur))
        return moves
    return None


def _neighbours(word: ReducedWord) -> list[ReducedWord]:
    L = word.letters
    out = []
    for p in range(1, len(L)):
        if abs(L[p - 1] - L[p]) >= 2:
            out.append(commutation_move(word, p))
    for p in range(1, len(L) - 1):
        if L[p - 1] == L[p + 1] and abs(L[p - 1] - L[p]) == 1:
            out.append(braid_move(word, p))
    return sorted(out, key=lambda u: u.letters)


def _bfs_compatible(start: ReducedWord, target: Counter) -> ReducedWord:
    seen = {start.letters}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if Counter(cur.letters) == target:
            return cur
        for nb in _neighbours(cur):
            if nb.letters not in seen:
                seen.add(nb.letters)
                queue.append(nb)
    raise AssertionError("rewriting graph exhausted without a compatible word")


def repair(word: ReducedWord, w: Permutation) -> tuple[list[Move], bool]:
    """
    Directed repair transcript from ``word``.

    Returns the list of moves performed and whether the final word is
    compatible (``False`` means the directed procedure stalled).
    """
    target = target_multiset(w)
    moves: list[Move] = []
    cur = word
    while Counter(cur.letters) != target:
        step = _find_repair(cur, target)
        if step is None:
            return moves, False
        moves.extend(step)
        cur = step[-1].result
    return moves, True


def geometrically_compatible_word(w: Permutation, start: ReducedWord | None = None) -> ReducedWord:
    word = some_reduced_word(w) if start is None else start
    moves, ok = repair(word, w)
    cur = moves[-1].result if moves else word
    if ok:
        return cur
    return _bfs_compatible(cur, target_multiset(w))


def reduced_words(w: Permutation) -> Iterator[ReducedWord]:
    """Every reduced word of ``w`` (exponential; for small windows)."""

    def rec(u: Permutation) -> Iterator[tuple[int, ...]]:
        pos = u.inverse().images
        descents = [i for i in range(1, u.window) if pos[i] < pos[i - 1]]
        if not descents:
            yield ()
            return
        for i in descents:
            for rest in rec(left_multiply_simple(i, u)):
                yield (i,) + rest

    for letters in rec(w):
        yield ReducedWord(w.window, letters)
