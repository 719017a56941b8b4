"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--n-sep 9]
"""

from __future__ import annotations

import argparse
import itertools
import time

from gammadesk.kernels import available_backends


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(n_sep: int) -> dict:
    sep = [(2, 4, 1, 3), (3, 1, 4, 2)]
    len5 = [(1, 3, 2, 5, 4), (4, 5, 2, 3, 1)]
    words = list(itertools.permutations(range(1, 9)))
    return {
        f"avoiders S_{n_sep}(2413,3142)": lambda k: k.avoiders(n_sep, sep),
        "avoiders S_8(13254,45231)": lambda k: k.avoiders(8, len5),
        "stat_scan over S_8": lambda k: [k.stat_scan(w) for w in words],
        "contains 3142 over S_8": lambda k: [k.contains(w, (3, 1, 4, 2)) for w in words],
    }


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n-sep", type=int, default=9)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is available")
    names = sorted(backends)
    print(f"{'workload':34}" + "".join(f"{nm:>12}" for nm in names) + ("     speedup" if len(names) > 1 else ""))
    for label, job in workloads(args.n_sep).items():
        t = {nm: best_of(lambda: job(backends[nm]), args.repeat) for nm in names}
        row = f"{label:34}" + "".join(f"{t[nm]:11.3f}s" for nm in names)
        if len(names) > 1:
            row += f"{t['python'] / t['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
