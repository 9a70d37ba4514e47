"""Default-grid benchmark: GSA against the greedy construction alone.

Per-row seeds come from ``SeedSequence([master_seed, n, replica])``: its first
two generated words seed the instance generator and the solver.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

import numpy as np

from gsacds.annealer import SAParams, run
from gsacds.constructor import generate_greedy
from gsacds.instances import GeneratorConfig, energy_expected, generate_instance, max_edges
from gsacds.objective import eval_scalarized

# (n, m) reference pairs; m is the listed density before the edge rule applies
DEFAULT_GRID = (
    (20, 224),
    (30, 474),
    (40, 869),
    (50, 1325),
    (60, 2208),
    (70, 2992),
    (80, 3928),
    (90, 5002),
    (100, 5053),
)

M_RULES = ("half", "as-is")

COLUMNS = (
    "n",
    "m",
    "replica",
    "instance_seed",
    "solver_seed",
    "gsa_size",
    "greedy_size",
    "gsa_f_w",
    "greedy_f_w",
    "gsa_f",
    "greedy_f",
    "gsa_energy",
    "greedy_energy",
)


class BenchConfigError(ValueError):
    pass


@dataclass
class BenchConfig:
    grid: tuple[tuple[int, int], ...] = DEFAULT_GRID
    # "half": listed m counts each edge twice; "as-is": use it directly. Both clamp to [n-1, C(n,2)].
    m_rule: str = "half"
    master_seed: int = 0
    replicas: int = 1
    generator: dict = field(default_factory=dict)
    solver: dict = field(default_factory=dict)
    workers: int = 1

    def __post_init__(self):
        if self.m_rule not in M_RULES:
            raise BenchConfigError(f"m_rule must be one of {M_RULES}, got {self.m_rule!r}")
        if self.replicas < 1 or self.workers < 1:
            raise BenchConfigError("replicas and workers must be >= 1")
        allowed_gen = {"p_t", "p_d", "distance_range", "instants"}
        allowed_sol = {f.name for f in fields(SAParams)} - {"seed", "record_trace"}
        if set(self.generator) - allowed_gen:
            raise BenchConfigError(f"unknown generator keys: {sorted(set(self.generator) - allowed_gen)}")
        if set(self.solver) - allowed_sol:
            raise BenchConfigError(f"unknown solver keys: {sorted(set(self.solver) - allowed_sol)}")
        try:
            self.grid = tuple((int(n), int(m)) for n, m in self.grid)
        except (TypeError, ValueError):
            raise BenchConfigError("grid must be a list of [n, m] pairs") from None

    @classmethod
    def from_json(cls, text: str) -> "BenchConfig":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BenchConfigError(f"config is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise BenchConfigError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        if set(raw) - known:
            raise BenchConfigError(f"unknown config keys: {sorted(set(raw) - known)}")
        if "distance_range" in raw.get("generator", {}):
            raw["generator"]["distance_range"] = tuple(raw["generator"]["distance_range"])
        return cls(**raw)


def target_edges(n: int, listed_m: int, rule: str) -> int:
    m = listed_m // 2 if rule == "half" else listed_m
    return max(n - 1, min(m, max_edges(n)))


def row_seeds(master_seed: int, n: int, replica: int) -> tuple[int, int]:
    a, b = np.random.SeedSequence([master_seed, n, replica]).generate_state(2)
    return int(a), int(b)


def bench_row(n: int, listed_m: int, replica: int, cfg: BenchConfig) -> dict:
    inst_seed, solver_seed = row_seeds(cfg.master_seed, n, replica)
    gcfg = GeneratorConfig(n=n, target_m=target_edges(n, listed_m, cfg.m_rule), seed=inst_seed, **cfg.generator)
    g = generate_instance(gcfg)
    params = SAParams(seed=solver_seed, **cfg.solver)
    result = run(g, params)
    greedy = generate_greedy(g)
    gv = eval_scalarized(g, greedy, params.weights)
    return {
        "n": n,
        "m": g.m,
        "replica": replica,
        "instance_seed": inst_seed,
        "solver_seed": solver_seed,
        "gsa_size": result.objective.f_c,
        "greedy_size": gv.f_c,
        "gsa_f_w": result.objective.f_w,
        "greedy_f_w": gv.f_w,
        "gsa_f": result.objective.f,
        "greedy_f": gv.f,
        "gsa_energy": energy_expected(g, result.best_solution, gcfg),
        "greedy_energy": energy_expected(g, greedy, gcfg),
        "gsa_wall_time": result.wall_time,
    }


def _row_job(args):
    return bench_row(*args)


def run_bench(cfg: BenchConfig) -> list[dict]:
    jobs = [(n, m, r, cfg) for n, m in cfg.grid for r in range(cfg.replicas)]
    if cfg.workers == 1:
        return [_row_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(_row_job, jobs))
