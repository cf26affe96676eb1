"""
Exhaustive invariant suites over one symmetric group, used by ``verify``.

Each suite returns a list of :class:`Check` rows; a row fails if any
permutation violates it, and ``detail`` names the first offender.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bsmap import bs_vertex_assignment
from .dimvec import (
    apply_simple_update, crossing_pairs, extract_inclusions, free_vertices, rank_vector, smooth_vector,
)
from .errors import NoSuchFreeVertex
from .fforacle import (
    bruhat_interval_point_count, count_bott_samelson_points, count_schubert_points, count_subrepresentations,
)
from .gridquiver import build_M, build_quiver, dim_M, euler_form, expected_grassmannian_dim, hom_dimension
from .perm import (
    all_permutations, bruhat_leq, format_one_line, is_smooth, left_multiply_simple, length, some_reduced_word,
)
from .words import evaluate_word, geometrically_compatible_word, is_geometrically_compatible, repair

__all__ = ["Check", "SUITES", "WORD_SUITES", "COUNT_SUITES", "MAX_WORD_WINDOW", "MAX_COUNT_WINDOW", "run_suite"]

MAX_WORD_WINDOW = 5
MAX_COUNT_WINDOW = 4


@dataclass
class Check:
    name: str
    passed: bool = True
    checked: int = 0
    detail: str = ""

    def record(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.detail = f"first failure: {what}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "detail": self.detail}


def _perm_suite(k: int, q: int) -> list[Check]:
    perms = list(all_permutations(k))
    top = max(perms, key=length)
    bottom = min(perms, key=length)
    inverse = Check("length is preserved by inversion")
    extremes = Check("identity <= w <= longest in Bruhat order")
    for w in perms:
        inverse.record(length(w) == length(w.inverse()), format_one_line(w))
        extremes.record(bruhat_leq(bottom, w) and bruhat_leq(w, top), format_one_line(w))
    return [inverse, extremes]


def _dimvec_suite(k: int, q: int) -> list[Check]:
    free = Check("free-vertex count equals length")
    update = Check("simple update matches the rank vector of s_i w")
    rows = Check("free-vertex values increase along each row")
    smooth = Check("row-major and column-major smooth vectors agree")
    cross = Check("smooth permutations have no crossing inclusions")
    for w in all_permutations(k):
        name = format_one_line(w)
        rv = rank_vector(w)
        fvs = free_vertices(rv)
        free.record(len(fvs) == length(w), name)
        by_row: dict[int, list] = {}
        for fv in fvs:
            by_row.setdefault(fv.row, []).append(fv)
        rows.record(all([f.value for f in sorted(r)] == sorted({f.value for f in r}) for r in by_row.values()), name)
        for i in range(1, k):
            if w.position(i) < w.position(i + 1):
                update.record(apply_simple_update(rv, w, i) == rank_vector(left_multiply_simple(i, w)), f"s_{i} {name}")
        if is_smooth(w):
            smooth.record(smooth_vector(w, "row") == smooth_vector(w, "col"), name)
            cross.record(not crossing_pairs(extract_inclusions(w)), name)
    return [free, update, rows, smooth, cross]


def _words_suite(k: int, q: int) -> list[Check]:
    exists = Check("a geometrically compatible word exists")
    directed = Check("directed repair never stalls")
    preserved = Check("every repair move preserves the evaluation")
    for w in all_permutations(k):
        name = format_one_line(w)
        word = geometrically_compatible_word(w)
        exists.record(evaluate_word(word) == w and is_geometrically_compatible(word, w), name)
        moves, ok = repair(some_reduced_word(w), w)
        directed.record(ok, name)
        preserved.record(all(evaluate_word(m.result) == w for m in moves), name)
    return [exists, directed, preserved]


def _bsmap_suite(k: int, q: int) -> list[Check]:
    literal = Check("row rule i_k+1+n_k gives a bijection onto the free vertices")
    ordered = Check("row-order rule gives a bijection with matching values")
    for w in all_permutations(k):
        name = format_one_line(w)
        word = geometrically_compatible_word(w)
        fvs = sorted((fv.row, fv.col, fv.value) for fv in free_vertices(rank_vector(w)))
        for rule, check in (("row", literal), ("row-order", ordered)):
            try:
                a = bs_vertex_assignment(word, w, rule=rule)
            except NoSuchFreeVertex:
                check.record(False, f"{name} ({word})")
                continue
            check.record(sorted((t.row, t.col, t.letter) for t in a.targets) == fvs, f"{name} ({word})")
    return [literal, ordered]


def _quiver_suite(k: int, q: int) -> list[Check]:
    n = k - 1
    quiver = build_quiver(n)
    hom = Check("dim Hom(M, M) equals <dim M, dim M> equals (n+1)(n+2)/2")
    M = build_M(quiver)
    target = (n + 1) * (n + 2) // 2
    hom.record(hom_dimension(M, M) == euler_form(quiver, dim_M(n), dim_M(n)) == target, f"n={n}")
    dim_r = Check("<r^w, dim M - r^w> equals length")
    dim_e = Check("<e^w, dim M - e^w> equals length for smooth w")
    for w in all_permutations(k):
        name = format_one_line(w)
        dim_r.record(expected_grassmannian_dim(quiver, rank_vector(w)) == length(w), name)
        if is_smooth(w):
            dim_e.record(expected_grassmannian_dim(quiver, smooth_vector(w)) == length(w), name)
    return [hom, dim_r, dim_e]


def _counts_suite(k: int, q: int) -> list[Check]:
    n = k - 1
    bs = Check(f"subrepresentations of r^w = Bott-Samelson points = (q+1)^l over F_{q}")
    sch = Check(f"subrepresentations of e^w = Schubert points = Bruhat sum over F_{q} (smooth w)")
    for w in all_permutations(k):
        name = format_one_line(w)
        expect = (q + 1) ** length(w)
        word = geometrically_compatible_word(w)
        bs.record(count_subrepresentations(n, q, rank_vector(w)) == count_bott_samelson_points(word, q) == expect, name)
        if is_smooth(w):
            got = count_subrepresentations(n, q, smooth_vector(w))
            sch.record(got == count_schubert_points(w, q) == bruhat_interval_point_count(w, q), name)
    return [bs, sch]


SUITES = {
    "perm": _perm_suite,
    "dimvec": _dimvec_suite,
    "words": _words_suite,
    "bsmap": _bsmap_suite,
    "quiver": _quiver_suite,
    "counts": _counts_suite,
}
WORD_SUITES = ("perm", "dimvec", "words", "bsmap", "quiver")
COUNT_SUITES = ("counts",)


def run_suite(name: str, window: int, q: int = 2) -> list[Check]:
    return SUITES[name](window, q)
