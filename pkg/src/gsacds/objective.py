"""Cardinality and weight objectives and their weighted-sum scalarization."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from gsacds._backend import kernels
from gsacds.graph import Graph, VertexSet, _check


class InfeasibleSolutionError(ValueError):
    """Raised when a vertex set does not dominate the graph."""


@dataclass(frozen=True)
class ScalarWeights:
    alpha: float = 0.5
    beta: float = 0.5

    def __post_init__(self):
        if not (0.0 <= self.alpha <= 1.0 and 0.0 <= self.beta <= 1.0):
            raise ValueError(f"alpha and beta must lie in [0, 1], got {self.alpha}, {self.beta}")
        if abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise ValueError(f"alpha + beta must equal 1, got {self.alpha + self.beta}")


@dataclass(frozen=True)
class ObjectiveValue:
    f_c: int
    f_w1: float
    f_w2: float
    f_w: float
    f_c_norm: float
    f_w_norm: float
    f: float

    def sort_key(self) -> tuple[float, int, float]:
        return (self.f, self.f_c, self.f_w)

    def as_dict(self) -> dict:
        return asdict(self)


def eval_cardinality(s: VertexSet) -> int:
    return s.size


def eval_weight(g: Graph, s: VertexSet) -> tuple[float, float, float]:
    """Return ``(f_w1, f_w2, f_w)``.

    ``f_w1`` sums the weights of edges with both ends in ``s``. ``f_w2`` sums,
    for every vertex outside ``s``, its lightest edge into ``s``.
    """
    _check(g, s)
    fw1, fw2, bad = kernels.eval_weight(g, s.flags)
    if bad >= 0:
        raise InfeasibleSolutionError(f"vertex {bad} has no neighbor in the set")
    return fw1, fw2, fw1 + fw2


def weight_normalizer(g: Graph) -> float:
    """Denominator of the normalized weight objective: the sum of all edge weights."""
    return g.total_weight


def eval_scalarized(g: Graph, s: VertexSet, sw: ScalarWeights = ScalarWeights()) -> ObjectiveValue:
    fw1, fw2, fw = eval_weight(g, s)
    fc = s.size
    denom = weight_normalizer(g)
    if denom > 0:
        fw_norm = fw / denom
    elif fw == 0:
        # single vertex, no edges
        fw_norm = 0.0
    else:
        raise ZeroDivisionError("graph has zero total weight but the set has positive weight")
    fc_norm = fc / g.n
    return ObjectiveValue(
        f_c=fc,
        f_w1=fw1,
        f_w2=fw2,
        f_w=fw,
        f_c_norm=fc_norm,
        f_w_norm=fw_norm,
        f=sw.alpha * fc_norm + sw.beta * fw_norm,
    )


def compare(a: ObjectiveValue, b: ObjectiveValue) -> int:
    """-1, 0 or 1 ordering by ``f``, then ``f_c``, then ``f_w``. No epsilon."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)
