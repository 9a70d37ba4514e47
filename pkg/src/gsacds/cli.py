"""Command-line front end: ``gsacds {generate,solve,exact,verify,bench}``.

Every flag can also be set through an environment variable named
``GSACDS_`` plus the flag name upper-cased with dashes as underscores
(``--max-iters`` -> ``GSACDS_MAX_ITERS``). Command-line values win.

Exit status: 0 success, 2 usage error, 3 unreadable or invalid instance,
4 infeasible solution, 5 instance over the enumeration cap, 6 bad bench config.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from gsacds import __version__
from gsacds.annealer import COOLING_MODES, RunResult, SAParams, run
from gsacds.bench import COLUMNS, BenchConfig, BenchConfigError, run_bench
from gsacds.exact import DEFAULT_CAP, InstanceTooLargeError, exact_optimum
from gsacds.graph import Graph, GraphError, VertexSet, is_connected_induced, is_dominating, load_graph
from gsacds.instances import GeneratorConfig, generate_instance, instance_text
from gsacds.objective import ObjectiveValue, ScalarWeights, eval_scalarized

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INFEASIBLE = 4
EXIT_CAP = 5
EXIT_CONFIG = 6

ENV_PREFIX = "GSACDS_"

RECORD_FIELDS = (
    "instance",
    "n",
    "m",
    "exact",
    "feasible",
    "size",
    "f_w",
    "f_w1",
    "f_w2",
    "f",
    "f_c_norm",
    "f_w_norm",
    "alpha",
    "beta",
    "seed",
    "iterations",
    "best_found_at",
    "dominators",
)


class CLIError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _read_instance(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}", EXIT_PARSE) from None
    try:
        return load_graph(text)
    except GraphError as exc:
        raise CLIError(f"{path}: {type(exc).__name__}: {exc}", EXIT_PARSE) from None


def _format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return "" if v is None else str(v)


def emit(records: list[dict], fmt: str, columns, out) -> None:
    if fmt == "json-lines":
        for rec in records:
            out.write(json.dumps({k: rec[k] for k in columns if k in rec}) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_format_value(rec.get(k)) for k in columns])
    else:
        for i, rec in enumerate(records):
            if i:
                out.write("\n")
            width = max(len(k) for k in columns)
            for k in columns:
                if k in rec:
                    out.write(f"{k:<{width}}  {_format_value(rec[k])}\n")


def _record(path: str, g: Graph, s: VertexSet, val: ObjectiveValue, sw: ScalarWeights, **extra) -> dict:
    rec = {
        "instance": path,
        "n": g.n,
        "m": g.m,
        "exact": False,
        "feasible": True,
        "size": val.f_c,
        "f_w": val.f_w,
        "f_w1": val.f_w1,
        "f_w2": val.f_w2,
        "f": val.f,
        "f_c_norm": val.f_c_norm,
        "f_w_norm": val.f_w_norm,
        "alpha": sw.alpha,
        "beta": sw.beta,
        "seed": None,
        "iterations": None,
        "best_found_at": None,
        "dominators": s.members(),
    }
    rec.update(extra)
    return rec


def _columns(args, base=RECORD_FIELDS) -> tuple[str, ...]:
    # wall time is nondeterministic: text mode always shows it, other formats on request
    if args.format == "text" or args.timing:
        return (*base, "wall_time")
    return base


def _params(args) -> SAParams:
    try:
        return SAParams(
            alpha=args.alpha,
            beta=args.beta,
            t0=args.t0,
            k=args.k,
            gamma=args.gamma,
            cooling=args.cooling_multiplier,
            sol_size=args.sol_size,
            max_iterations=args.max_iters,
            time_limit=args.time_limit,
            seed=args.seed,
            record_trace=args.trace is not None,
        )
    except ValueError as exc:
        raise CLIError(f"invalid parameters: {exc}", EXIT_USAGE) from None


def _write_trace(path: str, result: RunResult) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["iteration", "temperature", "current_f", "accepted", "best_f"])
        for r in result.trace or ():
            writer.writerow([r.iteration, repr(r.temperature), repr(r.current_f), int(r.accepted), repr(r.best_f)])


def cmd_solve(args, out) -> int:
    g = _read_instance(args.instance)
    params = _params(args)
    result = run(g, params)
    if args.trace:
        _write_trace(args.trace, result)
    rec = _record(
        args.instance,
        g,
        result.best_solution,
        result.objective,
        params.weights,
        seed=params.seed,
        iterations=result.iterations_executed,
        best_found_at=result.best_found_at,
        wall_time=result.wall_time,
    )
    emit([rec], args.format, _columns(args), out)
    return 0


def cmd_exact(args, out) -> int:
    import time

    g = _read_instance(args.instance)
    try:
        sw = ScalarWeights(args.alpha, args.beta)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from None
    start = time.perf_counter()
    try:
        s, val = exact_optimum(g, sw, cap=args.cap)
    except InstanceTooLargeError as exc:
        raise CLIError(f"refusing to enumerate: {exc} (raise it with --cap)", EXIT_CAP) from None
    rec = _record(args.instance, g, s, val, sw, exact=True, wall_time=time.perf_counter() - start)
    emit([rec], args.format, _columns(args), out)
    return 0


def parse_solution(text: str, n: int) -> VertexSet:
    toks = [t for t in text.replace(",", " ").split() if t]
    try:
        ids = [int(t) for t in toks]
    except ValueError:
        raise CLIError(f"malformed solution list {text!r}: expected integers", EXIT_USAGE) from None
    bad = [v for v in ids if not 0 <= v < n]
    if bad:
        raise CLIError(f"vertices out of range 0..{n - 1}: {bad}", EXIT_USAGE)
    return VertexSet.of(n, ids)


VERIFY_FIELDS = ("instance", "dominating", "connected", "feasible", "reason", "size", "f_w", "f_w1", "f_w2", "f", "dominators")


def cmd_verify(args, out) -> int:
    g = _read_instance(args.instance)
    s = parse_solution(args.solution, g.n)
    try:
        sw = ScalarWeights(args.alpha, args.beta)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from None
    dom = is_dominating(g, s)
    conn = is_connected_induced(g, s)
    rec = {
        "instance": args.instance,
        "dominating": dom,
        "connected": conn,
        "feasible": dom and conn,
        "size": s.size,
        "dominators": s.members(),
    }
    if not dom:
        undominated = [v for v in range(g.n) if v not in s and not any(u in s for u in g.adj[v])]
        rec["reason"] = "undominated vertices: " + " ".join(map(str, undominated))
    elif not conn:
        rec["reason"] = "induced subgraph disconnected" if s.size else "empty set"
    else:
        rec["reason"] = ""
    if dom:
        val = eval_scalarized(g, s, sw)
        rec.update(f_w=val.f_w, f_w1=val.f_w1, f_w2=val.f_w2, f=val.f)
    emit([rec], args.format, VERIFY_FIELDS, out)
    return 0 if rec["feasible"] else EXIT_INFEASIBLE


def cmd_generate(args, out) -> int:
    try:
        cfg = GeneratorConfig(
            n=args.n,
            target_m=args.m,
            p_t=args.p_t,
            p_d=args.p_d,
            distance_range=(args.dist_min, args.dist_max),
            instants=args.instants,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CLIError(f"invalid generator settings: {exc}", EXIT_USAGE) from None
    text = instance_text(generate_instance(cfg), cfg)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return 0


def cmd_bench(args, out) -> int:
    try:
        cfg = BenchConfig.from_json(Path(args.config).read_text()) if args.config else BenchConfig()
        if args.workers is not None:
            cfg.workers = args.workers
            cfg.__post_init__()
    except OSError as exc:
        raise CLIError(f"cannot read config: {exc}", EXIT_CONFIG) from None
    except (BenchConfigError, TypeError, ValueError) as exc:
        raise CLIError(f"bad bench config: {exc}", EXIT_CONFIG) from None
    try:
        rows = run_bench(cfg)
    except ValueError as exc:
        raise CLIError(f"bad bench config: {exc}", EXIT_CONFIG) from None
    columns = (*COLUMNS, "gsa_wall_time") if args.timing else COLUMNS
    fmt = "csv" if args.format == "text" else args.format
    if args.output:
        with open(args.output, "w", newline="") as fh:
            emit(rows, fmt, columns, fh)
    else:
        emit(rows, fmt, columns, out)
    return 0


def _add_format(p):
    p.add_argument("--format", choices=("text", "csv", "json-lines"), default=_env("format", "text"))
    p.add_argument("--timing", action="store_true", default=_env("timing", "") not in ("", "0"),
                   help="include wall time in csv/json-lines output")


def _add_weights(p):
    p.add_argument("--alpha", type=float, default=float(_env("alpha", 0.5)))
    p.add_argument("--beta", type=float, default=float(_env("beta", 0.5)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsacds", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a random benchmark instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="exact edge count")
    p.add_argument("--p-t", type=float, default=float(_env("p-t", 0.5)))
    p.add_argument("--p-d", type=float, default=float(_env("p-d", 0.5)))
    p.add_argument("--dist-min", type=int, default=int(_env("dist-min", 1)))
    p.add_argument("--dist-max", type=int, default=int(_env("dist-max", 100)))
    p.add_argument("--instants", type=int, default=int(_env("instants", 1)))
    p.add_argument("--seed", type=int, default=int(_env("seed", 0)))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="run greedy-seeded simulated annealing")
    p.add_argument("instance")
    _add_weights(p)
    p.add_argument("--seed", type=int, default=int(_env("seed", 0)))
    p.add_argument("--t0", type=float, default=float(_env("t0", 100.0)))
    p.add_argument("--k", type=int, default=int(_env("k", 3)))
    p.add_argument("--gamma", type=float, default=float(_env("gamma", 0.9)))
    p.add_argument("--cooling-multiplier", choices=COOLING_MODES, default=_env("cooling-multiplier", "literal"),
                   help="literal: T*(1-gamma); gamma: T*gamma")
    p.add_argument("--sol-size", type=int, default=int(_env("sol-size", 10)))
    p.add_argument("--max-iters", type=int, default=int(_env("max-iters", 10000)))
    p.add_argument("--time-limit", type=float, default=_env("time-limit", None),
                   help="wall-clock cap in seconds (breaks run-to-run determinism)")
    p.add_argument("--trace", default=_env("trace", None), help="write per-iteration CSV here")
    _add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exhaustive optimum for small instances")
    p.add_argument("instance")
    _add_weights(p)
    p.add_argument("--cap", type=int, default=int(_env("cap", DEFAULT_CAP)))
    _add_format(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a vertex list is a connected dominating set")
    p.add_argument("instance")
    p.add_argument("solution", help="vertex ids, comma or space separated")
    _add_weights(p)
    p.add_argument("--format", choices=("text", "csv", "json-lines"), default=_env("format", "text"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="grid comparison against the greedy baseline (CSV)")
    p.add_argument("config", nargs="?", help="JSON config; defaults to the built-in n=20..100 grid")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("-o", "--output")
    _add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if getattr(args, "time_limit", None) is not None:
        args.time_limit = float(args.time_limit)
    try:
        return args.func(args, out)
    except CLIError as exc:
        print(f"gsacds: error: {exc}", file=sys.stderr)
        return exc.status


def run_cli(argv) -> tuple[int, str]:
    """Run in-process and capture stdout; used by tests."""
    buf = io.StringIO()
    try:
        status = main(argv, out=buf)
    except SystemExit as exc:
        status = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return status, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
