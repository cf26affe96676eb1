"""
Compiled vs pure-Python counting kernel.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row times one point count on both backends and checks that they agree.
"""

import argparse
import time

from schubquiv import kernel
from schubquiv.dimvec import rank_vector, smooth_vector
from schubquiv.fforacle import count_schubert_points, count_subrepresentations
from schubquiv.perm import from_one_line

CASES = [
    ("subrep r^[4321] q=2", lambda b: count_subrepresentations(3, 2, rank_vector(from_one_line("4321")), backend=b)),
    ("subrep r^[4321] q=3", lambda b: count_subrepresentations(3, 3, rank_vector(from_one_line("4321")), backend=b)),
    ("subrep r^[53421] q=2", lambda b: count_subrepresentations(4, 2, rank_vector(from_one_line("53421")), backend=b)),
    ("subrep e^[54321] q=2", lambda b: count_subrepresentations(4, 2, smooth_vector(from_one_line("54321")), backend=b)),
    ("schubert [4231] q=3", lambda b: count_schubert_points(from_one_line("4231"), 3, backend=b)),
    ("schubert [54321] q=2", lambda b: count_schubert_points(from_one_line("54321"), 2, backend=b)),
]


def best_of(fn, repeat):
    best, value = None, None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, value


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = sorted(kernel.BACKENDS)
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is timed")
    print(f"{'case':26s}" + "".join(f"{b:>12s}" for b in backends) + "   speedup   count")
    for name, fn in CASES:
        fn(backends[0])  # warm the candidate caches
        times, values = [], set()
        for b in backends:
            dt, v = best_of(lambda: fn(b), args.repeat)
            times.append(dt)
            values.add(v)
        if len(values) != 1:
            raise SystemExit(f"backends disagree on {name}: {values}")
        speed = f"{times[backends.index('python')] / times[backends.index('cython')]:8.1f}x" if len(times) > 1 else ""
        print(f"{name:26s}" + "".join(f"{t * 1000:10.1f}ms" for t in times) + f"  {speed}   {values.pop()}")


if __name__ == "__main__":
    main()
