"""Greedy-seeded simulated annealing over connected dominating sets.

One seeded ``numpy.random.Generator`` drives the whole run. Draw order per
run: pool construction (see :func:`generate_initial_pool`), then per
iteration: the move-type uniform, the pool index and the move's own draws on
random moves, and one uniform inside :func:`accept` when the neighbor is
worse.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from decimal import Decimal

import numpy as np

from gsacds.constructor import generate_initial_pool
from gsacds.graph import Graph, VertexSet, is_cds
from gsacds.neighborhood import neighbor_greedy, neighbor_random
from gsacds.objective import ObjectiveValue, ScalarWeights, eval_scalarized

COOLING_MODES = ("literal", "gamma")


@dataclass(frozen=True)
class SAParams:
    alpha: float = 0.5
    beta: float = 0.5
    t0: float = 100.0
    k: int = 3
    gamma: float = 0.9
    # "literal": T <- T * (1 - gamma); "gamma": T <- T * gamma
    cooling: str = "literal"
    sol_size: int = 10
    max_iterations: int = 10000
    time_limit: float | None = None
    seed: int = 0
    greedy_threshold: float = 0.5
    record_trace: bool = False

    def __post_init__(self):
        ScalarWeights(self.alpha, self.beta)
        if not self.t0 > 1:
            raise ValueError(f"t0 must exceed 1 (reheating fires below 1), got {self.t0}")
        if not 0 < self.gamma < 1:
            raise ValueError(f"gamma must lie in (0, 1), got {self.gamma}")
        if self.cooling not in COOLING_MODES:
            raise ValueError(f"cooling must be one of {COOLING_MODES}, got {self.cooling!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.sol_size < 1:
            raise ValueError(f"sol_size must be >= 1, got {self.sol_size}")
        if self.max_iterations < 0:
            raise ValueError(f"max_iterations must be >= 0, got {self.max_iterations}")
        if not 0 <= self.greedy_threshold <= 1:
            raise ValueError(f"greedy_threshold must lie in [0, 1], got {self.greedy_threshold}")

    @property
    def weights(self) -> ScalarWeights:
        return ScalarWeights(self.alpha, self.beta)

    @property
    def cooling_multiplier(self) -> float:
        if self.cooling == "gamma":
            return self.gamma
        # decimal arithmetic: in binary floats 1 - 0.9 == 0.09999999999999998
        return float(Decimal(1) - Decimal(repr(self.gamma)))


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    temperature: float
    current_f: float
    accepted: bool
    best_f: float


@dataclass
class AnnealerState:
    pool: list[tuple[VertexSet, ObjectiveValue]]
    current: tuple[VertexSet, ObjectiveValue]
    best: tuple[VertexSet, ObjectiveValue]
    temperature: float
    rng: np.random.Generator
    level_counter: int = 0
    iteration: int = 0
    best_found_at: int = 0


@dataclass
class RunResult:
    best_solution: VertexSet
    objective: ObjectiveValue
    iterations_executed: int
    best_found_at: int
    wall_time: float
    trace: list[TraceRecord] | None = field(default=None, repr=False)


def accept(temperature: float, f_current: float, f_neighbor: float, rng: np.random.Generator) -> bool:
    """Metropolis rule; draws from ``rng`` only when the neighbor is worse."""
    delta = f_neighbor - f_current
    if delta <= 0:
        return True
    return bool(rng.random() < math.exp(-delta / temperature))


def change_temperature(state: AnnealerState, params: SAParams) -> float:
    """Count one iteration at the current level; cool every ``k``, reheat below 1."""
    state.level_counter += 1
    if state.level_counter >= params.k:
        state.level_counter = 0
        state.temperature *= params.cooling_multiplier
        if state.temperature < 1:
            state.temperature = params.t0
    return state.temperature


def pick_pool_member(state: AnnealerState, rng: np.random.Generator) -> tuple[VertexSet, ObjectiveValue]:
    assert state.pool, "solution pool is empty"
    return state.pool[int(rng.integers(len(state.pool)))]


def _better(a: ObjectiveValue, b: ObjectiveValue) -> bool:
    return a.sort_key() < b.sort_key()


def init_state(g: Graph, params: SAParams) -> AnnealerState:
    rng = np.random.default_rng(params.seed)
    sw = params.weights
    pool = [(s, eval_scalarized(g, s, sw)) for s in generate_initial_pool(g, params.sol_size, rng)]
    best = pool[0]
    for entry in pool[1:]:
        if _better(entry[1], best[1]):
            best = entry
    return AnnealerState(pool=pool, current=best, best=best, temperature=params.t0, rng=rng)


def step(g: Graph, state: AnnealerState, params: SAParams) -> TraceRecord:
    rng = state.rng
    temperature = state.temperature
    if rng.random() > params.greedy_threshold:
        cand = neighbor_greedy(g, state.current[0])
    else:
        state.current = pick_pool_member(state, rng)
        cand = neighbor_random(g, state.current[0], rng)
    value = eval_scalarized(g, cand, params.weights)
    state.iteration += 1
    if _better(value, state.best[1]):
        state.best = (cand, value)
        state.best_found_at = state.iteration
    accepted = accept(temperature, state.current[1].f, value.f, rng)
    if accepted:
        state.current = (cand, value)
    change_temperature(state, params)
    return TraceRecord(state.iteration, temperature, state.current[1].f, accepted, state.best[1].f)


def run(g: Graph, params: SAParams = SAParams()) -> RunResult:
    start = time.perf_counter()
    state = init_state(g, params)
    trace: list[TraceRecord] | None = [] if params.record_trace else None
    deadline = None if params.time_limit is None else start + params.time_limit
    while state.iteration < params.max_iterations:
        if deadline is not None and time.perf_counter() >= deadline:
            break
        rec = step(g, state, params)
        if trace is not None:
            trace.append(rec)

    best = state.best[0]
    if not is_cds(g, best):
        raise AssertionError(f"best solution {best} is not a connected dominating set")
    objective = eval_scalarized(g, best, params.weights)
    if objective != state.best[1]:
        raise AssertionError("best objective does not recompute to its cached value")
    return RunResult(
        best_solution=best,
        objective=objective,
        iterations_executed=state.iteration,
        best_found_at=state.best_found_at,
        wall_time=time.perf_counter() - start,
        trace=trace,
    )
