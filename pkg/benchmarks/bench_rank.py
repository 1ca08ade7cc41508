"""Compare the compiled and pure-Python exact rank backends.

Workload: nullities of the bidiagonal block matrices used for Weyr extraction,
built from scrambled realizations of random pencils.

    python3 benchmarks/bench_rank.py --instances 40 --size 4 --depth 4
"""

import argparse
import random
import time

from pencilstrat.eigenvalue import Infinity
from pencilstrat.exact import available_backends, build_P, rank_exact
from pencilstrat.exact.rank import gaussian_integer_rank
from pencilstrat.realize import realize_kcf, scramble
from pencilstrat.suites import random_structure


def workload(instances: int, size: int, depth: int, seed: int):
    rng = random.Random(seed)
    mats = []
    for _ in range(instances):
        s = random_structure(rng, max_rows=size, max_cols=size, min_rows=size, min_cols=size)
        L = scramble(realize_kcf(s), rng.randrange(1 << 30))
        finite = [mu for mu in s.eigenvalues if not isinstance(mu, Infinity)]
        mats.append(build_P(L, finite[0] if finite else 0, depth))
    return mats


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--instances", type=int, default=40)
    ap.add_argument("--size", type=int, default=4)
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    mats = workload(args.instances, args.size, args.depth, args.seed)
    shape = f"{mats[0].rows}x{mats[0].cols}"
    print(f"{len(mats)} matrices of shape {shape}")
    ints = [(*M.gaussian_integer_rows(), M.rows, M.cols) for M in mats]
    ranks = {}
    for backend in available_backends():
        end_to_end = min(_timed(lambda: [rank_exact(M, backend) for M in mats]) for _ in range(args.repeat))
        kernel = min(_timed(lambda: [gaussian_integer_rank(*a, backend) for a in ints]) for _ in range(args.repeat))
        ranks[backend] = [gaussian_integer_rank(*a, backend) for a in ints]
        print(f"{backend:>7}: end-to-end {end_to_end * 1e3:8.1f} ms, rank only {kernel * 1e3:8.1f} ms"
              f"  ({kernel / len(mats) * 1e6:7.1f} us/matrix)")
    if len(set(map(tuple, ranks.values()))) != 1:
        raise SystemExit("backends disagree")
    print("backends agree on every rank")


if __name__ == "__main__":
    main()
