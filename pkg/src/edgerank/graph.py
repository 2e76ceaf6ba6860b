"""Immutable undirected simple graphs with stable node and edge ids.

Nodes are dense integers in [0, N); edges are dense integers in [0, M)
numbered in ingestion order, which is the tie-breaking key everywhere
downstream. Original input labels are kept for output.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

log = logging.getLogger(__name__)


class GraphError(ValueError):
    """Bad graph input or an invalid node/edge reference."""


@dataclass(frozen=True)
class EdgeMask:
    """Set of edge ids treated as removed; the underlying graph is untouched."""

    removed: frozenset[int] = frozenset()

    @classmethod
    def of(cls, edge_ids: Iterable[int]) -> "EdgeMask":
        return cls(frozenset(edge_ids))

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.removed

    def __len__(self) -> int:
        return len(self.removed)


@dataclass(frozen=True)
class NormalizationReport:
    """What ingestion did to the raw edge rows."""

    input_rows: int
    self_loops_dropped: int
    duplicates_collapsed: int
    final_n: int
    final_m: int


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    avg_degree: float
    k_max: int
    avg_clustering: float
    heterogeneity: float


class Graph:
    """Undirected simple unweighted graph, immutable after construction.

    Safe to share across threads: all derived structures are built eagerly.
    Use :func:`build_graph` or the loaders in :mod:`edgerank.dataio` to
    construct one.
    """

    __slots__ = ("n_nodes", "n_edges", "labels", "edges", "_adj", "_adj_eids",
                 "_adjsets", "_pair_to_eid", "_label_to_node")

    def __init__(self, labels: Sequence[Hashable], edges: Sequence[tuple[int, int]]):
        n = len(labels)
        self.n_nodes = n
        self.n_edges = len(edges)
        self.labels = tuple(labels)
        self.edges = tuple(edges)
        adj: list[list[int]] = [[] for _ in range(n)]
        adj_eids: list[list[int]] = [[] for _ in range(n)]
        pair_to_eid: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphError(f"invalid edge {eid}: ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in pair_to_eid:
                raise GraphError(f"duplicate edge {eid}: ({u}, {v})")
            pair_to_eid[key] = eid
            adj[u].append(v)
            adj[v].append(u)
            adj_eids[u].append(eid)
            adj_eids[v].append(eid)
        # Sort neighbor lists (edge ids follow their neighbor) for determinism.
        for v in range(n):
            order = sorted(range(len(adj[v])), key=adj[v].__getitem__)
            adj[v] = [adj[v][k] for k in order]
            adj_eids[v] = [adj_eids[v][k] for k in order]
        self._adj = adj
        self._adj_eids = adj_eids
        self._adjsets = [set(nbrs) for nbrs in adj]
        self._pair_to_eid = pair_to_eid
        self._label_to_node = {lab: v for v, lab in enumerate(self.labels)}

    def __repr__(self) -> str:
        return f"Graph(n_nodes={self.n_nodes}, n_edges={self.n_edges})"

    def check_node(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n_nodes):
            raise GraphError(f"unknown node id {v!r}")

    def check_edge(self, e: int) -> None:
        if not (isinstance(e, int) and 0 <= e < self.n_edges):
            raise GraphError(f"unknown edge id {e!r}")

    def neighbors(self, v: int) -> list[int]:
        self.check_node(v)
        return list(self._adj[v])

    def neighbor_set(self, v: int) -> frozenset[int]:
        self.check_node(v)
        return frozenset(self._adjsets[v])

    def incident_edges(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, edge_id) pairs for every edge at node v."""
        self.check_node(v)
        return list(zip(self._adj[v], self._adj_eids[v]))

    def degree(self, v: int) -> int:
        self.check_node(v)
        return len(self._adj[v])

    def endpoints(self, e: int) -> tuple[int, int]:
        self.check_edge(e)
        return self.edges[e]

    def edge_between(self, u: int, v: int) -> int | None:
        self.check_node(u)
        self.check_node(v)
        return self._pair_to_eid.get((u, v) if u < v else (v, u))

    def node_id(self, label: Hashable) -> int:
        try:
            return self._label_to_node[label]
        except KeyError:
            raise GraphError(f"unknown node label {label!r}") from None

    def label_of(self, v: int) -> Hashable:
        self.check_node(v)
        return self.labels[v]


def _normalize_pairs(
    pairs: Iterable[tuple[Hashable, Hashable]],
) -> tuple[Graph, NormalizationReport]:
    label_to_node: dict[Hashable, int] = {}
    labels: list[Hashable] = []

    def intern(label: Hashable) -> int:
        v = label_to_node.get(label)
        if v is None:
            v = len(labels)
            label_to_node[label] = v
            labels.append(label)
        return v

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    rows = loops = dups = 0
    for a, b in pairs:
        rows += 1
        u, v = intern(a), intern(b)
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dups += 1
            continue
        seen.add(key)
        edges.append((u, v))
    if rows == 0:
        raise GraphError("empty graph")
    if loops or dups:
        log.info("normalized input: %d self-loops dropped, %d duplicates collapsed",
                 loops, dups)
    g = Graph(labels, edges)
    report = NormalizationReport(rows, loops, dups, g.n_nodes, g.n_edges)
    return g, report


def build_graph(edge_pairs: Iterable[tuple[Hashable, Hashable]]) -> Graph:
    """Build a simple graph from labeled endpoint pairs.

    Labels may be any hashable values; they are mapped to dense node ids in
    first-occurrence order. Self-loops are dropped and duplicate unordered
    pairs collapse onto their first occurrence, which also fixes edge-id
    order.
    """
    g, _ = _normalize_pairs(edge_pairs)
    return g


def neighbors_within(g: Graph, mask: EdgeMask | None, source: int,
                     radius: int) -> set[int]:
    """All nodes at masked-graph distance <= radius from source (source included)."""
    g.check_node(source)
    if radius < 0:
        raise GraphError(f"radius must be >= 0, got {radius}")
    seen = {source}
    if radius == 0:
        return seen
    removed = mask.removed if mask is not None else None
    adj, eids = g._adj, g._adj_eids
    frontier = [source]
    for _ in range(radius):
        nxt: list[int] = []
        for u in frontier:
            nbrs = adj[u]
            edge_ids = eids[u]
            for k in range(len(nbrs)):
                if removed is not None and edge_ids[k] in removed:
                    continue
                w = nbrs[k]
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return seen


@dataclass(frozen=True)
class InducedSubgraph:
    """Subgraph plus old->new id correspondences (bijective on retained elements)."""

    graph: Graph
    node_map: dict[int, int]
    edge_map: dict[int, int]


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> InducedSubgraph:
    """Subgraph on the given nodes with every original edge between them."""
    node_list = sorted(set(nodes))
    if not node_list:
        raise GraphError("empty node set")
    for v in node_list:
        g.check_node(v)
    node_map = {v: k for k, v in enumerate(node_list)}
    keep: list[int] = []
    for v in node_list:
        for w, eid in zip(g._adj[v], g._adj_eids[v]):
            if v < w and w in node_map:
                keep.append(eid)
    keep.sort()  # preserve ingestion order in the subgraph
    edge_map = {eid: k for k, eid in enumerate(keep)}
    sub_edges = [(node_map[g.edges[eid][0]], node_map[g.edges[eid][1]]) for eid in keep]
    sub = Graph([g.labels[v] for v in node_list], sub_edges)
    return InducedSubgraph(sub, node_map, edge_map)


def connected_components(
    g: Graph, mask: EdgeMask | None = None
) -> tuple[list[int], list[int]]:
    """Component sizes and a node->component map under the mask.

    Components are numbered by their first node in ascending node-id order,
    so the labeling is deterministic. Sizes sum to N.
    """
    n = g.n_nodes
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    removed = mask.removed if mask is not None else None
    for eid, (u, v) in enumerate(g.edges):
        if removed is not None and eid in removed:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
    comp_of: list[int] = [-1] * n
    sizes: list[int] = []
    root_to_comp: dict[int, int] = {}
    for v in range(n):
        r = find(v)
        c = root_to_comp.get(r)
        if c is None:
            c = len(sizes)
            root_to_comp[r] = c
            sizes.append(0)
        comp_of[v] = c
        sizes[c] += 1
    return sizes, comp_of


def largest_component_nodes(g: Graph) -> list[int]:
    """Nodes of the largest component (first such component on ties)."""
    sizes, comp_of = connected_components(g)
    best = sizes.index(max(sizes))
    return [v for v in range(g.n_nodes) if comp_of[v] == best]


def generate_ba(n: int, m: int, seed: int) -> Graph:
    """Grow a Barabasi-Albert preferential-attachment graph.

    Starts from a star on m+1 nodes; each of the remaining n-m-1 nodes
    attaches to m distinct existing nodes drawn with probability
    proportional to current degree (repeated draws with rejection). The
    result is a simple graph with exactly m*(n-m) edges and is reproducible
    for a fixed seed.
    """
    if m < 1:
        raise GraphError(f"attachment count must be >= 1, got {m}")
    if n <= m:
        raise GraphError(f"need n > m, got n={n}, m={m}")
    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = [(0, k) for k in range(1, m + 1)]
    # One entry per unit of degree; sampling an index is degree-proportional.
    repeated: list[int] = [0] * m + list(range(1, m + 1))
    for source in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[rng.randrange(len(repeated))])
        chosen = sorted(targets)
        pairs.extend((source, t) for t in chosen)
        repeated.extend(chosen)
        repeated.extend([source] * m)
    return build_graph(pairs)


def graph_stats(g: Graph) -> GraphStats:
    """Basic topology features: N, M, <k>, k_max, <c>, H.

    <c> is the mean local clustering coefficient with degree-<2 nodes
    contributing 0; H is the degree heterogeneity <k^2>/<k>^2 (defined as
    1 for an edgeless graph).
    """
    n = g.n_nodes
    if n < 1:
        raise GraphError("graph has no nodes")
    degs = [len(g._adj[v]) for v in range(n)]
    avg_k = 2.0 * g.n_edges / n
    k_max = max(degs)
    mean_sq = sum(d * d for d in degs) / n
    het = mean_sq / (avg_k * avg_k) if avg_k > 0 else 1.0
    total_c = 0.0
    adjsets = g._adjsets
    for v in range(n):
        d = degs[v]
        if d < 2:
            continue
        s = adjsets[v]
        links = sum(len(adjsets[u] & s) for u in s) // 2
        total_c += 2.0 * links / (d * (d - 1))
    return GraphStats(n, g.n_edges, avg_k, k_max, total_c / n, het)
