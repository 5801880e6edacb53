"""Time ``min_distance`` with the compiled and the pure-Python scan kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--threads 1]
"""

from __future__ import annotations

import argparse
import random
import time

from lincode import FieldMatrix, LinearCode, PrimeField, min_distance
from lincode import _backend
from lincode.errors import DegenerateGeneratorError

CASES = [(2, 5, 15), (2, 6, 20), (2, 8, 24), (2, 10, 26), (3, 4, 12), (5, 3, 10)]


def random_code(rng: random.Random, q: int, k: int, n: int) -> LinearCode:
    field = PrimeField(q)
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        try:
            return LinearCode(FieldMatrix.from_rows(field, rows))
        except DegenerateGeneratorError:
            pass


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    kernels = {"python": _backend.python_kernel}
    if _backend.compiled_kernel is not None:
        kernels["cython"] = _backend.compiled_kernel
    else:
        print("compiled kernel not built; timing the Python kernel only")

    rng = random.Random(args.seed)
    header = f"{'code':>14} {'d':>3} {'subsets':>9}" + "".join(f" {name + ' s':>10}" for name in kernels)
    if len(kernels) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for q, k, n in CASES:
        code = random_code(rng, q, k, n)
        rep = min_distance(code, threads=args.threads)
        subsets = sum(rep.subsets_examined.values())
        row = f"{f'[{n},{k}]_{q}':>14} {rep.d:>3} {subsets:>9}"
        timings = {}
        for name, kern in kernels.items():
            timings[name] = best_of(lambda: min_distance(code, threads=args.threads, kernel=kern), args.repeat)
            row += f" {timings[name]:>10.4f}"
        if len(kernels) == 2:
            row += f" {timings['python'] / timings['cython']:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
