"""
Permutations of ``{1, ..., m}`` in one-line notation.

A :class:`Permutation` stores its images ``w(1), ..., w(m)``; ``m`` is the
*window* (``n + 1`` in the grid-quiver setting).  Left multiplication by the
simple transposition ``s_i`` swaps the *values* ``i`` and ``i + 1``.

>>> w = from_one_line("34251")
>>> left_multiply_simple(3, w)
Permutation(4, 3, 2, 5, 1)
>>> length(from_one_line("43251"))
7
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .errors import (
    IndexOutOfRange,
    MalformedInput,
    NotABijection,
    PatternTooLong,
    WindowMismatch,
)

__all__ = [
    "Permutation", "from_one_line", "identity", "length", "left_multiply_simple",
    "contains_pattern", "is_smooth", "rank_matrix", "bruhat_leq",
    "some_reduced_word", "all_permutations", "format_one_line",
]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise NotABijection("a permutation needs window >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise NotABijection(f"{list(images)} is not a bijection on 1..{len(images)}")

    @property
    def window(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.window
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def position(self, value: int) -> int:
        """``w^{-1}(value)``, 1-based."""
        return self.images.index(value) + 1

    def __repr__(self) -> str:
        return f"Permutation{self.images}" if self.window > 1 else f"Permutation({self.images[0]},)"

    def __str__(self) -> str:
        return format_one_line(self)


def format_one_line(w: Permutation) -> str:
    if w.window <= 9:
        return "".join(str(v) for v in w.images)
    return ",".join(str(v) for v in w.images)


def from_one_line(text: str) -> Permutation:
    text = text.strip().strip("[]")
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    elif " " in text:
        tokens = text.split()
    else:
        tokens = list(text)
    if not tokens or any(not t.isdigit() for t in tokens):
        raise MalformedInput(f"cannot parse permutation from {text!r}")
    return Permutation(tuple(int(t) for t in tokens))


def identity(window: int) -> Permutation:
    return Permutation(tuple(range(1, window + 1)))


def all_permutations(window: int) -> Iterator[Permutation]:
    """All of S_window in lexicographic order of one-line notation."""
    for p in permutations(range(1, window + 1)):
        yield Permutation(p)


def length(w: Permutation) -> int:
    im = w.images
    return sum(1 for a, b in combinations(range(len(im)), 2) if im[a] > im[b])


def left_multiply_simple(i: int, w: Permutation) -> Permutation:
    if not 1 <= i < w.window:
        raise IndexOutOfRange(f"s_{i} is not a simple transposition of S_{w.window}")
    swap = {i: i + 1, i + 1: i}
    return Permutation(tuple(swap.get(v, v) for v in w.images))


def _standardize(seq) -> tuple[int, ...]:
    order = sorted(seq)
    return tuple(order.index(v) + 1 for v in seq)


def contains_pattern(w: Permutation, pattern: Permutation) -> bool:
    k = pattern.window
    if k > w.window:
        raise PatternTooLong(f"pattern of size {k} longer than window {w.window}")
    target = pattern.images
    return any(_standardize(sub) == target for sub in combinations(w.images, k))


_P4231 = Permutation((4, 2, 3, 1))
_P3412 = Permutation((3, 4, 1, 2))


def is_smooth(w: Permutation) -> bool:
    """True iff ``w`` avoids both [4231] and [3412]."""
    if w.window < 4:
        return True
    return not (contains_pattern(w, _P4231) or contains_pattern(w, _P3412))


def rank_matrix(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """Full ``m x m`` table ``#{k <= j : w(k) <= i}`` (row i, column j, 0-based storage)."""
    m = w.window
    rows = []
    for i in range(1, m + 1):
        row, acc = [], 0
        for j in range(1, m + 1):
            if w(j) <= i:
                acc += 1
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Chevalley-Bruhat comparison by the rank-matrix criterion."""
    if u.window != w.window:
        raise WindowMismatch(f"windows {u.window} and {w.window} differ")
    ru, rw = rank_matrix(u), rank_matrix(w)
    return all(a >= b for row_u, row_w in zip(ru, rw) for a, b in zip(row_u, row_w))


def some_reduced_word(w: Permutation):
    """
    Deterministic reduced word for ``w``.

    Repeatedly strips the largest left descent: if ``i + 1`` sits to the left
    of ``i`` then ``w = s_i (s_i w)`` with ``s_i w`` one shorter.  Letters are
    returned in written order, so ``w = s_{a_1} s_{a_2} ... s_{a_N}``.
    """
    from .words import ReducedWord

    letters = []
    cur = w
    while True:
        pos = cur.inverse().images
        descents = [i for i in range(1, cur.window) if pos[i] < pos[i - 1]]
        if not descents:
            break
        i = descents[-1]
        letters.append(i)
        cur = left_multiply_simple(i, cur)
    return ReducedWord(w.window, tuple(letters))
