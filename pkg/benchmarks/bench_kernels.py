"""Time the compiled kernels against the pure-Python fallback.

Run from the repository root after building the extension:

    python3 benchmarks/bench_kernels.py --n 60 --repeat 5
"""

import argparse
import timeit

import numpy as np

from gsacds import _pykernels, constructor, graph, neighborhood, objective
from gsacds.annealer import SAParams, run
from gsacds.constructor import generate_greedy
from gsacds.instances import GeneratorConfig, generate_instance, max_edges

try:
    from gsacds import _ckernels
except ImportError:
    _ckernels = None

KERNEL_USERS = (graph, objective, constructor, neighborhood)


def use(mod):
    for m in KERNEL_USERS:
        m.kernels = mod


def time_call(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def bench_backend(mod, g, flags, draws, args):
    use(mod)
    empty = np.zeros(g.n, dtype=np.uint8)
    rows = {
        "repair_greedy": time_call(lambda: mod.repair(g, empty, 0), args.repeat, args.number),
        "repair_random": time_call(lambda: mod.repair(g, empty, 0, draws), args.repeat, args.number),
        "eval_weight": time_call(lambda: mod.eval_weight(g, flags), args.repeat, args.number),
        "dominating": time_call(lambda: mod.dominating(g, flags), args.repeat, args.number),
        "induced_connected": time_call(lambda: mod.induced_connected(g, flags), args.repeat, args.number),
        "cut_vertices": time_call(lambda: mod.cut_vertices(g, flags), args.repeat, args.number),
    }
    params = SAParams(seed=args.seed, max_iterations=args.iterations)
    rows[f"run_{args.iterations}_iters"] = time_call(lambda: run(g, params), args.repeat, 1)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--density", type=float, default=0.3, help="fraction of all vertex pairs joined by an edge")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200, help="calls per timing sample for kernel rows")
    ap.add_argument("--iterations", type=int, default=2000, help="annealing budget for the end-to-end row")
    args = ap.parse_args(argv)

    m = max(args.n - 1, int(args.density * max_edges(args.n)))
    g = generate_instance(GeneratorConfig(n=args.n, target_m=m, seed=args.seed))
    flags = np.array(generate_greedy(g).flags)
    draws = np.random.default_rng(args.seed).random(g.n)

    results = {"python": bench_backend(_pykernels, g, flags, draws, args)}
    if _ckernels is not None:
        results["cython"] = bench_backend(_ckernels, g, flags, draws, args)
    use(_ckernels or _pykernels)

    print(f"graph: n={g.n} m={g.m} greedy CDS size={int(flags.sum())}")
    print(f"{'kernel':<22}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name, py in results["python"].items():
        cy = results.get("cython", {}).get(name)
        cy_text = f"{cy * 1e6:14.1f}" if cy is not None else f"{'n/a':>14}"
        speed = f"{py / cy:9.1f}x" if cy else f"{'':>10}"
        print(f"{name:<22}{py * 1e6:14.1f}{cy_text}{speed}")


if __name__ == "__main__":
    main()
