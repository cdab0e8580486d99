"""Compare the compiled and pure-Python canonical-form kernels.

    python3 benchmarks/bench_canon.py [--repeat 3]

Two workloads: every mask on n vertices (the enumeration hot loop) and
single certificates of random graphs with 9 to 11 vertices.
"""

import argparse
import random
import time

from cdgraph import canon
from cdgraph.canon import _canon_py


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def random_rows(rng, n, p=0.5):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if canon.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing the Python kernel only")

    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for n in (5, 6):
        top = 1 << _canon_py.slot_count(n)
        row = [best_of(args.repeat, lambda b=b: canon.canon_range(n, 0, top, b)) for b in backends]
        print(f"{f'all {top} masks, n={n}':<28}" + "".join(f"{t:>11.3f}s" for t in row) + _speedup(row))

    rng = random.Random(0)
    for n in (9, 11):
        graphs = [random_rows(rng, n) for _ in range(args.samples)]
        row = []
        for b in backends:
            k = canon.kernel(b)
            row.append(best_of(args.repeat, lambda k=k: [k.certificate(n, g) for g in graphs]))
        print(f"{f'{args.samples} random graphs, n={n}':<28}" + "".join(f"{t:>11.3f}s" for t in row) + _speedup(row))


def _speedup(row):
    return f"{row[0] / row[1]:>9.1f}x" if len(row) == 2 and row[1] > 0 else ""


if __name__ == "__main__":
    main()
