"""Compare the numba and numpy chain-census backends.

    python benchmarks/bench_census.py [--repeat 3] [--workers 4]

Each row times one exhaustive census per backend and checks that both
return the same counts. The first numba call (JIT compile, or cache load)
is timed separately and excluded from the per-run numbers.
"""

import argparse
import time

from qlattice import _kernels
from qlattice.analysis import census_chains
from qlattice.encoder import encode
from qlattice.lattice import builtin_cubic_diag, builtin_fcc

CASES = [
    ("fcc", builtin_fcc, 5),
    ("fcc", builtin_fcc, 6),
    ("cubic-diag", builtin_cubic_diag, 4),
    ("cubic-diag", builtin_cubic_diag, 5),
]


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args(argv)

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled; timing numpy only")
    else:
        t0 = time.perf_counter()
        census_chains(encode(builtin_fcc(1)), 2, backend="numba")
        print(f"numba warm-up: {time.perf_counter() - t0:.2f}s")

    print(f"{'lattice':<11} {'m':>2} {'bitstrings':>11} "
          + " ".join(f"{b:>9}" for b in backends) + "   speedup  agree")
    for name, factory, m in CASES:
        enc = encode(factory(1))
        timings, results = {}, {}
        for b in backends:
            partitions = max(1, args.workers * 4)
            timings[b], results[b] = best_of(
                lambda b=b: census_chains(enc, m, partitions, args.workers, backend=b), args.repeat)
        agree = len(set(results.values())) == 1
        speedup = timings["numpy"] / timings["numba"] if "numba" in timings else float("nan")
        total = results["numpy"].total_bitstrings
        print(f"{name:<11} {m:>2} {total:>11} "
              + " ".join(f"{timings[b]:>8.3f}s" for b in backends)
              + f"   {speedup:>6.1f}x  {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
