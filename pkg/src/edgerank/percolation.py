"""Edge percolation: remove edges in ranked order and track connectivity.

Three signals are recorded after every single removal:

  sigma        largest-component node fraction
  kappa_ratio  average pairwise reachability, normalized by the intact value
  cc           number of components over N

and summarized by their means over all M steps (the robustness score R is
the mean of sigma). The intact graph (step 0) is carried along for output
but excluded from every mean.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graph import EdgeMask, Graph, GraphError, connected_components
from .metrics import MetricKind, RankedEdges, rank_edges, score_all


class CurvePoint(NamedTuple):
    step: int
    fraction_removed: float
    sigma: float
    kappa_ratio: float
    cc: float


@dataclass(frozen=True)
class PercolationCurve:
    metric: MetricKind | None
    n_nodes: int
    initial: CurvePoint
    steps: tuple[CurvePoint, ...]


@dataclass(frozen=True)
class RobustnessSummary:
    metric: MetricKind | None
    r: float
    mean_kappa_ratio: float
    mean_cc: float


def kappa_bar(g: Graph, mask: EdgeMask | None = None) -> float:
    """Fraction of node pairs that are mutually reachable under the mask."""
    n = g.n_nodes
    if n < 2:
        raise GraphError("average connectivity needs at least 2 nodes")
    sizes, _ = connected_components(g, mask)
    reachable_pairs = sum(s * (s - 1) for s in sizes)  # ordered pairs
    return reachable_pairs / (n * (n - 1))


def _as_order(g: Graph, order: RankedEdges | Sequence[int]) -> tuple[tuple[int, ...], MetricKind | None]:
    if isinstance(order, RankedEdges):
        ids, metric = order.order, order.metric
    else:
        ids, metric = tuple(order), None
    if len(ids) != g.n_edges or set(ids) != set(range(g.n_edges)):
        raise GraphError("removal order is not a permutation of the graph's edges")
    return ids, metric


def percolate(g: Graph, order: RankedEdges | Sequence[int]) -> PercolationCurve:
    """Remove edges one at a time in the given order, measuring after each.

    Implemented as incremental union-find over the reversed order (edge
    addition), so the whole curve costs about as much as one components
    pass. Requires at least one edge and two nodes.
    """
    ids, metric = _as_order(g, order)
    n, m = g.n_nodes, g.n_edges
    if n < 2 or m < 1:
        raise GraphError("percolation needs at least 2 nodes and 1 edge")

    parent = list(range(n))
    size = [1] * n

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    largest = 1
    pairs = 0  # sum over components of s*(s-1)

    def add_edge(eid: int) -> None:
        nonlocal comps, largest, pairs
        u, v = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru == rv:
            return
        su, sv = size[ru], size[rv]
        parent[rv] = ru
        size[ru] = su + sv
        comps -= 1
        pairs += 2 * su * sv
        if su + sv > largest:
            largest = su + sv

    # states[k] mirrors the graph after the first k removals, built backwards
    states: list[tuple[int, int, int]] = [(largest, pairs, comps)]  # k = M
    for eid in reversed(ids[1:]):
        add_edge(eid)
        states.append((largest, pairs, comps))
    add_edge(ids[0])
    largest0, pairs0, comps0 = largest, pairs, comps

    # kappa_ratio = kappa(masked)/kappa(intact); the pair-count normalizers
    # cancel, leaving a single integer division.
    initial = CurvePoint(0, 0.0, largest0 / n, 1.0, comps0 / n)
    steps = []
    for i, (lg, pr, cm) in enumerate(reversed(states), start=1):
        steps.append(CurvePoint(i, i / m, lg / n, pr / pairs0, cm / n))
    return PercolationCurve(metric, n, initial, tuple(steps))


def robustness(curve: PercolationCurve) -> RobustnessSummary:
    """Means of sigma (the robustness score R), kappa_ratio and cc over all steps."""
    if not curve.steps:
        raise GraphError("empty percolation curve")
    m = len(curve.steps)
    r = sum(p.sigma for p in curve.steps) / m
    mk = sum(p.kappa_ratio for p in curve.steps) / m
    mc = sum(p.cc for p in curve.steps) / m
    return RobustnessSummary(curve.metric, r, mk, mc)


def evaluate_metric(g: Graph, kind: MetricKind, *, clique_budget: int | None = None
                    ) -> tuple[RankedEdges, PercolationCurve, RobustnessSummary]:
    """Full pipeline for one metric: score, rank, percolate, summarize."""
    ranked = rank_edges(score_all(g, kind, clique_budget=clique_budget), kind)
    curve = percolate(g, ranked)
    return ranked, curve, robustness(curve)


def compare_metrics(g: Graph, kinds: Iterable[MetricKind], *,
                    clique_budget: int | None = None) -> list[RobustnessSummary]:
    """One robustness summary per metric, in the given order."""
    kinds = list(kinds)
    if not kinds:
        raise GraphError("no metrics given")
    return [evaluate_metric(g, k, clique_budget=clique_budget)[2] for k in kinds]
