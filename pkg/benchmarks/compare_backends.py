"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/compare_backends.py [--sizes 200,400,800] [--repeat 3] [--csv out.csv]

Each workload is run on both backends on the same seeded game; results are
checked for equality and the speed-up is reported.
"""
import argparse
import csv
import sys
import time

import numpy as np

from parityops import (
    EVEN, GenSpec, as_view, attract, biconnected_components, gen_block_cactus, gen_random,
    gen_single_player, gen_weak_tournament, kernels, solve_brute_force, solve_single_player,
    solve_weak_tournament, solve_zielonka,
)


def _workloads(n, seed):
    rand = gen_random(GenSpec("random", n, n, min(1.0, 8 / max(n, 1)), seed))
    view = as_view(rand)
    top = rand.priority >= np.quantile(rand.priority, 0.9)
    sp = gen_single_player(GenSpec("single-player", n, n, min(1.0, 4 / max(n, 1)), seed))
    wt = gen_weak_tournament(GenSpec("weak-tournament", n, 2 * n, 0.5, seed))
    cactus = gen_block_cactus(max(1, n // 4), seed=seed)
    small = gen_random(GenSpec("random", 7, 6, 0.5, seed))
    return {
        "attract": lambda: attract(view, EVEN, top).mask,
        "single-player": lambda: solve_single_player(sp).winner,
        "zielonka": lambda: solve_zielonka(rand).regions.winner,
        "weak-tournament": lambda: solve_weak_tournament(wt).winner,
        "blocks": lambda: len(biconnected_components(cactus).blocks),
        "brute-force(n=7)": lambda: solve_brute_force(small).winner,
    }


def _time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="200,400,800")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--csv")
    args = ap.parse_args(argv)
    if "compiled" not in kernels.available():
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)
        return 1
    rows = []
    for n in (int(x) for x in args.sizes.split(",") if x):
        for name, fn in _workloads(n, args.seed).items():
            res = {}
            for backend in ("compiled", "python"):
                with kernels.use_backend(backend):
                    res[backend] = _time(fn, args.repeat)
            same = np.array_equal(res["compiled"][1], res["python"][1])
            tc, tp = res["compiled"][0], res["python"][0]
            rows.append(dict(workload=name, n=n, compiled_s=tc, python_s=tp, speedup=tp / tc if tc else float("inf"),
                             identical=same))
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}} {'n':>6} {'compiled':>10} {'python':>10} {'speed-up':>9}  same")
    for r in rows:
        print(f"{r['workload']:<{width}} {r['n']:>6} {r['compiled_s']:>9.4f}s {r['python_s']:>9.4f}s "
              f"{r['speedup']:>8.1f}x  {r['identical']}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    return 0 if all(r["identical"] for r in rows) else 2


if __name__ == "__main__":
    sys.exit(main())
