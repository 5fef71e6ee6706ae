"""Compare the compiled graph kernels against the pure-Python fallback.

Run: python3 benchmarks/bench_kernels.py [--sizes 2000 20000] [--repeat 3]

Two measurements: the raw kernels on random sparse graphs, and whole
verification runs on a few benchmark instances (where graph work is only
one part of the cost).
"""

from __future__ import annotations

import argparse
import random
import time

from sohyper import graph
from sohyper.encodings import ck_instances, mazurkiewicz_instance, muddy_instance
from sohyper.engine import CheckConfig, verify


def random_graph(n: int, degree: int, seed: int):
    rng = random.Random(seed)
    succ = [[rng.randrange(n) for _ in range(rng.randint(0, degree))] for _ in range(n)]
    return graph.csr(n, succ)


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def kernels(n: int, repeat: int) -> dict:
    indptr, indices = random_graph(n, 3, seed=n)
    sources = list(range(0, n, max(1, n // 10)))
    targets = bytes(1 if v == n - 1 else 0 for v in range(n))
    allowed = bytes([1]) * n
    jobs = {
        "scc": lambda: graph.scc(n, indptr, indices),
        "reachable": lambda: graph.reachable(n, indptr, indices, sources),
        "bfs_path": lambda: graph.bfs_path(n, indptr, indices, sources, targets, allowed),
    }
    return {name: best_of(job, repeat) for name, job in jobs.items()}


def end_to_end(repeat: int) -> dict:
    cases = {
        "ck_a_10": (ck_instances(10)[1], CheckConfig()),
        "muddy_3_3": (muddy_instance(3, 3), CheckConfig()),
        "SwapA learn": (mazurkiewicz_instance("SwapA"), CheckConfig(method="learn")),
    }
    return {name: best_of(lambda i=inst, c=cfg: verify(i.system, i.formula, c), repeat)
            for name, (inst, cfg) in cases.items()}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[2_000, 20_000, 200_000])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        graph.use(True)
    except ImportError:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")

    print(f"{'case':<22}{'compiled ms':>14}{'pure ms':>12}{'speedup':>10}")
    rows = []
    for n in args.sizes:
        for compiled in (True, False):
            graph.use(compiled)
            rows.append((n, compiled, kernels(n, args.repeat)))
    for n in args.sizes:
        fast = next(r for m, c, r in rows if m == n and c)
        slow = next(r for m, c, r in rows if m == n and not c)
        for name in fast:
            print(f"{name + ' n=' + str(n):<22}{fast[name] * 1e3:>14.2f}{slow[name] * 1e3:>12.2f}"
                  f"{slow[name] / max(fast[name], 1e-9):>9.1f}x")
    graph.use(True)
    fast = end_to_end(args.repeat)
    graph.use(False)
    slow = end_to_end(args.repeat)
    graph.use(True)
    for name in fast:
        print(f"{name:<22}{fast[name] * 1e3:>14.1f}{slow[name] * 1e3:>12.1f}{slow[name] / fast[name]:>9.2f}x")


if __name__ == "__main__":
    main()
