"""Per-edge importance scores and deterministic rankings.

Six local metrics are supported:

  SO  subgraph overlap          (lower value = more important)
  DP  degree product            (higher = more important)
  TO  topological overlap       (lower = more important)
  DI  diffusion intensity       (higher = more important)
  BN  bridgeness                (higher = more important)
  SN  second-order neighborhood (lower = more important)

All scorers are pure functions of an immutable graph and an edge id, so
batch scoring is safe to parallelize; results are always reported in
edge-id order regardless of evaluation order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graph import Graph, GraphError

DEFAULT_CLIQUE_BUDGET = 1_000_000


class CliqueSearchOverflow(RuntimeError):
    """Raised when an exact clique search exceeds its work budget."""


class MetricKind(enum.Enum):
    SO = "SO"
    DP = "DP"
    TO = "TO"
    DI = "DI"
    BN = "BN"
    SN = "SN"

    @property
    def higher_is_important(self) -> bool:
        return self in _HIGH_IS_IMPORTANT

    @property
    def direction(self) -> str:
        return "higher-is-important" if self.higher_is_important else "lower-is-important"

    @classmethod
    def parse(cls, name: str) -> "MetricKind":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown metric {name!r}; choose from "
                             f"{', '.join(k.name for k in cls)}") from None

    @classmethod
    def parse_list(cls, spec: str) -> list["MetricKind"]:
        names = [p for p in (s.strip() for s in spec.split(",")) if p]
        if not names:
            raise ValueError("empty metric list")
        return [cls.parse(p) for p in names]


_HIGH_IS_IMPORTANT = frozenset({MetricKind.DP, MetricKind.DI, MetricKind.BN})


class EdgeScore(NamedTuple):
    edge: int
    value: float


@dataclass(frozen=True)
class RankedEdges:
    """Permutation of all edge ids, most important first."""

    metric: MetricKind
    order: tuple[int, ...]


def _ball2(adj: list[list[int]], source: int) -> set[int]:
    # Closed 2-hop neighborhood in the intact graph.
    out = set(adj[source])
    out.add(source)
    for u in adj[source]:
        out.update(adj[u])
    return out


def _ball2_skip(adj: list[list[int]], source: int, banned: int) -> set[int]:
    # Closed 2-hop neighborhood with the source-banned edge removed. Nodes at
    # depth 1 are never in {source, banned}, so deeper expansion cannot
    # traverse the masked edge again.
    first = [w for w in adj[source] if w != banned]
    out = set(first)
    out.add(source)
    for u in first:
        out.update(adj[u])
    return out


def so_score(g: Graph, e: int) -> float:
    """Subgraph overlap of an edge.

    Extract the subgraph spanned by both endpoints' 2-hop neighborhoods,
    drop the edge itself, and measure how much of each endpoint's 2-hop
    reach still overlaps. Small values flag edges that are the main link
    between otherwise separate regions; the squared-overlap numerator is
    floored at 1 so that fully disconnecting edges are compared by local
    subgraph size.
    """
    i, j = g.endpoints(e)
    adj = g._adj
    local = _ball2(adj, i) | _ball2(adj, j)
    gi = _ball2_skip(adj, i, j)
    gj = _ball2_skip(adj, j, i)
    overlap = len(gi & gj)
    return max(1, overlap) ** 2 / len(local)


def dp_score(g: Graph, e: int) -> float:
    """Degree product of the endpoints."""
    i, j = g.endpoints(e)
    return float(g.degree(i) * g.degree(j))


def to_score(g: Graph, e: int) -> float:
    """Topological overlap: common neighbors over union minus the endpoints.

    The endpoints always sit in each other's neighbor sets, so the union is
    at least 2; the degenerate 0/0 case (isolated edge) maps to 0.
    """
    i, j = g.endpoints(e)
    si = g._adjsets[i]
    sj = g._adjsets[j]
    denom = len(si | sj) - 2
    if denom == 0:
        return 0.0
    return len(si & sj) / denom


def di_score(g: Graph, e: int) -> float:
    """Diffusion intensity: outward-pointing degree net of shared neighbors."""
    i, j = g.endpoints(e)
    common = len(g._adjsets[i] & g._adjsets[j])
    return ((g.degree(i) - 1) + (g.degree(j) - 1) - 2 * common) / 2.0


class _Budget:
    __slots__ = ("left", "what")

    def __init__(self, limit: int, what: str):
        self.left = limit
        self.what = what

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise CliqueSearchOverflow(f"clique search overflow at {self.what}")


def _max_clique_size(adjsets: Sequence[set[int]], cand: set[int], budget: _Budget) -> int:
    """Exact maximum clique size within the candidate set (Bron-Kerbosch, pivoted)."""
    best = 0

    def expand(size: int, cand_set: set[int]) -> None:
        nonlocal best
        budget.spend()
        if size > best:
            best = size
        if not cand_set or size + len(cand_set) <= best:
            return
        pivot = max(cand_set, key=lambda u: len(adjsets[u] & cand_set))
        for v in list(cand_set - adjsets[pivot]):
            expand(size + 1, cand_set & adjsets[v])
            cand_set.discard(v)

    expand(0, set(cand))
    return best


def max_clique_containing(g: Graph, *, node: int | None = None,
                          edge: int | None = None,
                          clique_budget: int | None = None) -> int:
    """Exact maximum clique size among cliques containing the anchor.

    Exactly one of ``node`` or ``edge`` must be given. Any clique through
    the anchor lies inside its closed neighborhood (for an edge: the common
    neighborhood of its endpoints plus both endpoints), so the search is
    restricted accordingly. Exceeding the work budget raises
    :class:`CliqueSearchOverflow` rather than approximating.
    """
    if (node is None) == (edge is None):
        raise GraphError("give exactly one of node= or edge=")
    limit = DEFAULT_CLIQUE_BUDGET if clique_budget is None else clique_budget
    if node is not None:
        g.check_node(node)
        budget = _Budget(limit, f"node {node}")
        return 1 + _max_clique_size(g._adjsets, set(g._adjsets[node]), budget)
    g.check_edge(edge)
    i, j = g.endpoints(edge)
    budget = _Budget(limit, f"edge {edge} ({i}, {j})")
    return 2 + _max_clique_size(g._adjsets, g._adjsets[i] & g._adjsets[j], budget)


def bn_score(g: Graph, e: int, *, clique_budget: int | None = None) -> float:
    """Bridgeness: endpoint clique sizes (geometric mean) over the edge clique size.

    The edge itself is a 2-clique, so the denominator is never below 2.
    """
    i, j = g.endpoints(e)
    si = max_clique_containing(g, node=i, clique_budget=clique_budget)
    sj = max_clique_containing(g, node=j, clique_budget=clique_budget)
    sij = max_clique_containing(g, edge=e, clique_budget=clique_budget)
    return math.sqrt(si * sj) / sij


def sn_score(g: Graph, e: int) -> float:
    """Second-order neighborhood overlap with the edge removed.

    Each endpoint's 2-hop reach (source excluded) is computed in the graph
    minus the edge; the score is the Jaccard overlap of the two sets, with
    the empty-union case mapped to 0.
    """
    i, j = g.endpoints(e)
    adj = g._adj
    si = _ball2_skip(adj, i, j)
    si.discard(i)
    sj = _ball2_skip(adj, j, i)
    sj.discard(j)
    union = len(si | sj)
    if union == 0:
        return 0.0
    return len(si & sj) / union


def _so_all(g: Graph) -> list[float]:
    adj = g._adj
    balls = [_ball2(adj, v) for v in range(g.n_nodes)]
    out = []
    for i, j in g.edges:
        gi = _ball2_skip(adj, i, j)
        gj = _ball2_skip(adj, j, i)
        overlap = len(gi & gj)
        out.append(max(1, overlap) ** 2 / len(balls[i] | balls[j]))
    return out


def _bn_all(g: Graph, clique_budget: int | None) -> list[float]:
    node_clique: dict[int, int] = {}

    def s_of(v: int) -> int:
        s = node_clique.get(v)
        if s is None:
            s = max_clique_containing(g, node=v, clique_budget=clique_budget)
            node_clique[v] = s
        return s

    out = []
    for e, (i, j) in enumerate(g.edges):
        sij = max_clique_containing(g, edge=e, clique_budget=clique_budget)
        out.append(math.sqrt(s_of(i) * s_of(j)) / sij)
    return out


def score_all(g: Graph, metric: MetricKind, *,
              clique_budget: int | None = None) -> list[EdgeScore]:
    """Score every edge under one metric, in edge-id order."""
    if metric is MetricKind.SO:
        values = _so_all(g)
    elif metric is MetricKind.BN:
        values = _bn_all(g, clique_budget)
    else:
        fn = {MetricKind.DP: dp_score, MetricKind.TO: to_score,
              MetricKind.DI: di_score, MetricKind.SN: sn_score}[metric]
        values = [fn(g, e) for e in range(g.n_edges)]
    return [EdgeScore(e, float(v)) for e, v in enumerate(values)]


def rank_edges(scores: Iterable[EdgeScore], metric: MetricKind) -> RankedEdges:
    """Order edges most-important-first; ties break by ascending edge id.

    The scores must cover a dense edge-id range exactly once.
    """
    items = list(scores)
    ids = [s.edge for s in items]
    if len(set(ids)) != len(ids):
        raise GraphError("duplicate edge id in scores")
    if set(ids) != set(range(len(ids))):
        raise GraphError("scores do not cover all edge ids")
    sign = -1.0 if metric.higher_is_important else 1.0
    items.sort(key=lambda s: (sign * s.value, s.edge))
    return RankedEdges(metric, tuple(s.edge for s in items))
