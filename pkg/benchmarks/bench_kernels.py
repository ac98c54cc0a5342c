"""Compare the compiled and pure-Python integer kernels.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""
import argparse
import random
import timeit

from hermitian_cascade import _kernels_py, kernels


def random_matrix(rng, nrows, ncols, bound, rank=None):
    if rank is None:
        return [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]
    a = [[rng.randint(-bound, bound) for _ in range(rank)] for _ in range(nrows)]
    b = [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(rank)]
    return _kernels_py.matmul_int(a, b)


CASES = [
    ("10x16 small entries", dict(nrows=10, ncols=16, bound=3)),
    ("27x27 rank 9", dict(nrows=27, ncols=27, bound=2, rank=9)),
    ("40x40 full rank", dict(nrows=40, ncols=40, bound=1)),
    ("20x20 big entries", dict(nrows=20, ncols=20, bound=10**15)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    backends = sorted(kernels.BACKENDS)
    print(f"backends available: {', '.join(backends)}")
    print(f"{'case':<24}" + "".join(f"{b + ' (ms)':>16}" for b in backends) + f"{'speedup':>10}")
    for name, spec in CASES:
        mats = [random_matrix(rng, **spec) for _ in range(5)]
        ranks = {b: [kernels.BACKENDS[b].rank_int(m) for m in mats] for b in backends}
        assert len({tuple(v) for v in ranks.values()}) == 1, "backends disagree"
        times = {}
        for b in backends:
            fn = kernels.BACKENDS[b].rank_int
            t = timeit.timeit(lambda: [fn(m) for m in mats], number=args.repeat)
            times[b] = 1000 * t / (args.repeat * len(mats))
        speed = times["python"] / times["cython"] if "cython" in times else 1.0
        print(f"{name:<24}" + "".join(f"{times[b]:>16.3f}" for b in backends) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
