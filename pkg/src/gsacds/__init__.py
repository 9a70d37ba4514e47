"""Connected dominating sets minimizing size and weight via greedy-seeded simulated annealing."""

__version__ = "0.1.0"

from gsacds._backend import BACKEND
from gsacds.annealer import RunResult, SAParams, run
from gsacds.constructor import generate_greedy, generate_initial_pool, generate_random
from gsacds.exact import enumerate_feasible, exact_optimum
from gsacds.graph import (
    Graph,
    VertexSet,
    articulation_vertices_of_induced,
    is_cds,
    is_connected_induced,
    is_dominating,
    load_graph,
)
from gsacds.neighborhood import neighbor_greedy, neighbor_random
from gsacds.objective import ObjectiveValue, ScalarWeights, compare, eval_scalarized, eval_weight

__all__ = [
    "BACKEND",
    "Graph",
    "ObjectiveValue",
    "RunResult",
    "SAParams",
    "ScalarWeights",
    "VertexSet",
    "articulation_vertices_of_induced",
    "compare",
    "enumerate_feasible",
    "eval_scalarized",
    "eval_weight",
    "exact_optimum",
    "generate_greedy",
    "generate_initial_pool",
    "generate_random",
    "is_cds",
    "is_connected_induced",
    "is_dominating",
    "load_graph",
    "neighbor_greedy",
    "neighbor_random",
    "run",
]
