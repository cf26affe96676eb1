"""
Command-line front end.

Exit codes: 0 success, 1 a verification or consistency failure, 2 bad usage
or input (including requests beyond the enumeration budgets).  ``--json``
prints canonical JSON (sorted keys, no floats) that re-serializes to the
same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernel
from .bsmap import RULES, bs_vertex_assignment, column_offsets
from .dimvec import crossing_pairs, extract_inclusions, free_vertices, rank_vector, smooth_vector
from .errors import NoSuchFreeVertex, SchubQuivError
from .fforacle import (
    bruhat_interval_point_count, count_bott_samelson_points, count_schubert_points, count_subrepresentations,
)
from .gridquiver import build_quiver, expected_grassmannian_dim
from .perm import format_one_line, from_one_line, is_smooth, length
from .suites import COUNT_SUITES, MAX_COUNT_WINDOW, MAX_WORD_WINDOW, SUITES, run_suite
from .words import geometrically_compatible_word, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _perm(text: str):
    w = from_one_line(text)
    if w.window < 3:
        raise UsageError("permutations need window >= 3 for the grid quiver")
    return w


def _vector(w, which: str):
    return rank_vector(w) if which == "r" else smooth_vector(w)


def _assignment(word, w, rule):
    a = bs_vertex_assignment(word, w, rule=rule)
    return {**a.to_json(), "rule": rule}


def _print_grid(title: str, rows) -> None:
    print(f"{title}:")
    width = max(len(str(x)) for r in rows for x in r)
    for r in rows:
        print("  " + " ".join(str(x).rjust(width) for x in r))


def cmd_analyze(args) -> tuple[dict, int]:
    w = _perm(args.perm)
    quiver = build_quiver(w.window - 1)
    rv = rank_vector(w)
    fvs = free_vertices(rv)
    report = {
        "permutation": format_one_line(w),
        "length": length(w),
        "smooth": is_smooth(w),
        "rank_vector": rv.to_json(),
        "free_vertices": [fv.to_json() for fv in fvs],
        "dim_r": expected_grassmannian_dim(quiver, rv),
    }
    if report["smooth"]:
        ev = smooth_vector(w)
        inc = extract_inclusions(w)
        report["smooth_vector"] = ev.to_json()
        report["dim_e"] = expected_grassmannian_dim(quiver, ev)
        report["inclusions"] = inc.to_json()
        report["crossings"] = [list(p) for p in crossing_pairs(inc)]
    consistent = report["length"] == len(fvs) == report["dim_r"]
    report["consistent"] = consistent
    if not args.json:
        print(f"w = [{report['permutation']}]  length {report['length']}  "
              f"{'smooth' if report['smooth'] else 'singular'}")
        _print_grid("rank vector r^w", rv.rows)
        print("free vertices: " + ", ".join(f"({f.row},{f.col})={f.value}" for f in fvs))
        print(f"<r^w, dim M - r^w> = {report['dim_r']}")
        if report["smooth"]:
            _print_grid("smooth vector e^w", ev.rows)
            print(f"<e^w, dim M - e^w> = {report['dim_e']}")
            print("inclusions: " + ("; ".join(inc.describe()) or "none"))
    return report, EXIT_OK if consistent else EXIT_FAIL


def cmd_decompose(args) -> tuple[dict, int]:
    w = _perm(args.perm)
    word = geometrically_compatible_word(w)
    report = {"permutation": format_one_line(w), "word": list(word.letters)}
    if not args.json:
        print(f"compatible word: {word or '(empty)'}")
    return _with_assignment(report, word, w, args)


def cmd_bs_map(args) -> tuple[dict, int]:
    w = _perm(args.perm)
    word = parse_word(args.word, w.window) if args.word is not None else geometrically_compatible_word(w)
    report = {"permutation": format_one_line(w), "word": list(word.letters)}
    if not args.json:
        print(f"word: {word or '(empty)'}")
    report, code = _with_assignment(report, word, w, args)
    if code == EXIT_OK:
        offsets = column_offsets(bs_vertex_assignment(word, w, rule=args.rule))
        report["column_offsets"] = [{"col_minus_letter": a, "m": m} for a, m in offsets]
        if not args.json:
            print("col - i_k vs recounted m_k: " + ", ".join(f"{a}/{m}" for a, m in offsets))
    return report, code


def _with_assignment(report, word, w, args) -> tuple[dict, int]:
    try:
        report["assignment"] = _assignment(word, w, args.rule)
    except NoSuchFreeVertex as exc:
        report["assignment_error"] = str(exc)
        if not args.json:
            print(f"vertex assignment failed: {exc}")
        return report, EXIT_FAIL
    if not args.json:
        for t in report["assignment"]["targets"]:
            print(f"  k={t['k']}  s_{t['letter']} -> ({t['row']},{t['col']})")
    return report, EXIT_OK


def cmd_euler(args) -> tuple[dict, int]:
    w = _perm(args.perm)
    d = expected_grassmannian_dim(build_quiver(w.window - 1), _vector(w, args.vector))
    report = {"permutation": format_one_line(w), "vector": args.vector, "dimension": d, "length": length(w)}
    if not args.json:
        print(f"<{args.vector}^w, dim M - {args.vector}^w> = {d}  (length {length(w)})")
    return report, EXIT_OK


def cmd_count(args) -> tuple[dict, int]:
    w = _perm(args.perm)
    oracle = args.oracle
    if oracle == "subrep":
        count = count_subrepresentations(w.window - 1, args.q, _vector(w, args.vector))
    elif oracle == "schubert":
        count = count_schubert_points(w, args.q)
    elif oracle == "bott-samelson":
        count = count_bott_samelson_points(geometrically_compatible_word(w), args.q)
    else:
        count = bruhat_interval_point_count(w, args.q)
    report = {"count": count, "oracle": oracle, "q": args.q, "permutation": format_one_line(w)}
    if oracle == "subrep":
        report["vector"] = args.vector
    if not args.json:
        print(f"{oracle} count over F_{args.q}: {count}")
    return report, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    k = args.window
    names = list(SUITES) if args.suite == "all" else [args.suite]
    limit = MAX_COUNT_WINDOW if any(s in COUNT_SUITES for s in names) else MAX_WORD_WINDOW
    if not 3 <= k <= limit:
        raise UsageError(f"--window must lie in 3..{limit} for suite {args.suite!r}")
    rows = []
    for name in names:
        for check in run_suite(name, k, args.q):
            rows.append({"suite": name, **check.to_json()})
    ok = all(r["passed"] for r in rows)
    if not args.json:
        for r in rows:
            mark = "PASS" if r["passed"] else "FAIL"
            extra = f"  ({r['detail']})" if r["detail"] else ""
            print(f"{mark}  [{r['suite']}] {r['name']}  n={r['checked']}{extra}")
    return {"window": k, "q": args.q, "passed": ok, "checks": rows}, EXIT_OK if ok else EXIT_FAIL


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print canonical JSON instead of text")
    parser = argparse.ArgumentParser(prog="schubquiv", parents=[common],
                                     description="Grid-quiver models of type A Schubert varieties.")
    parser.add_argument("--version", action="version", version=f"%(prog)s (kernel: {kernel.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="rank vector, free vertices, smoothness, dimensions")
    p.add_argument("perm")
    p.set_defaults(func=cmd_analyze)

    for name, func, helptext in (("decompose", cmd_decompose, "compatible word and its vertex assignment"),
                                 ("bs-map", cmd_bs_map, "vertex assignment for a given or computed word")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("perm")
        p.add_argument("--rule", choices=RULES, default="row")
        if name == "bs-map":
            p.add_argument("--word", help='letters left to right, e.g. "1 2 3 1 2 1 4"')
        p.set_defaults(func=func)

    p = sub.add_parser("euler", parents=[common], help="expected quiver Grassmannian dimension")
    p.add_argument("perm")
    p.add_argument("--vector", choices=("r", "e"), required=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("count", parents=[common], help="F_q point count")
    p.add_argument("perm")
    p.add_argument("--vector", choices=("r", "e"), default="r")
    p.add_argument("--q", type=_prime, required=True)
    p.add_argument("--oracle", choices=("subrep", "schubert", "bott-samelson", "bruhat"), default="subrep")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="exhaustive invariant suites over S_k")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--q", type=_prime, default=2)
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    try:
        report, code = args.func(args)
    except (UsageError, SchubQuivError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
