"""Shared graph fixtures and independent brute-force oracles for the tests.

The oracles deliberately avoid the library's internals: they work on plain
dict adjacency with their own BFS / subset enumeration, so they can catch
bugs in the optimized code paths.
"""

from __future__ import annotations

import math
import random
from collections import deque

import edgerank as er


# ---------------------------------------------------------------- fixtures

def triangle() -> er.Graph:
    return er.build_graph([("a", "b"), ("b", "c"), ("c", "a")])


def path3() -> er.Graph:
    return er.build_graph([("a", "b"), ("b", "c")])


def single_edge() -> er.Graph:
    return er.build_graph([("a", "b")])


def star(leaves: int) -> er.Graph:
    return er.build_graph([("x", f"l{k}") for k in range(1, leaves + 1)])


def two_triangles_bridge() -> er.Graph:
    """Triangles abc and def joined by the bridge c-d (N=6, M=7)."""
    return er.build_graph([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"),
                           ("d", "e"), ("e", "f"), ("f", "d")])


def clique(n: int, prefix: str = "v") -> list[tuple[str, str]]:
    names = [f"{prefix}{k}" for k in range(n)]
    return [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]


def two_cliques_bridge(k: int) -> er.Graph:
    """Two k-cliques joined by a single bridge edge."""
    return er.build_graph(clique(k, "a") + clique(k, "b") + [("a0", "b0")])


def two_cliques_path(k: int) -> er.Graph:
    """Two k-cliques joined through a middle node (two bridge edges)."""
    return er.build_graph(clique(k, "a") + clique(k, "b")
                          + [("a0", "mid"), ("mid", "b0")])


def worked_example() -> er.Graph:
    """13-node bridge scenario: (a,b) link two hubs sharing neighbors c,d.

    With the edge (a,b) masked, a's 2-hop reach is {a,b,c,d,e,f,g,h,j}, b's
    is {a,b,c,d,e,f,g,i,k,l,m}; they overlap on 7 nodes, the local subgraph
    has 13, so the subgraph overlap of (a,b) is 49/13.
    """
    return er.build_graph([
        ("a", "b"), ("a", "c"), ("a", "d"), ("a", "h"), ("a", "j"),
        ("b", "c"), ("b", "d"), ("b", "i"), ("b", "k"), ("b", "l"), ("b", "m"),
        ("c", "e"), ("c", "g"), ("d", "f"),
    ])


def er_graph(n: int, p: float, seed: int) -> er.Graph:
    """Erdos-Renyi G(n, p); retries the seed offset until non-empty."""
    for attempt in range(100):
        rng = random.Random(seed * 1009 + attempt)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        if pairs:
            return er.build_graph(pairs)
    raise AssertionError("could not generate a non-empty graph")


def permuted_copy(g: er.Graph, seed: int) -> er.Graph:
    """Relabeled copy with edges in the same order (edge k maps to edge k)."""
    rng = random.Random(seed)
    perm = list(range(g.n_nodes))
    rng.shuffle(perm)
    return er.build_graph([(perm[u], perm[v]) for u, v in g.edges])


# ----------------------------------------------------------------- oracles

def _adj_dict(g: er.Graph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in range(g.n_nodes)}


def bfs_ball(adj: dict[int, set[int]], source: int, radius: int) -> set[int]:
    seen = {source}
    queue = deque([(source, 0)])
    while queue:
        u, d = queue.popleft()
        if d == radius:
            continue
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append((w, d + 1))
    return seen


def naive_so(g: er.Graph, e: int) -> float:
    """Full per-edge subgraph rebuild plus fresh BFS."""
    i, j = g.endpoints(e)
    adj = _adj_dict(g)
    nodes = bfs_ball(adj, i, 2) | bfs_ball(adj, j, 2)
    sub = {v: {w for w in adj[v] if w in nodes} for v in nodes}
    sub[i].discard(j)
    sub[j].discard(i)
    overlap = len(bfs_ball(sub, i, 2) & bfs_ball(sub, j, 2))
    return max(1, overlap) ** 2 / len(nodes)


def naive_sn(g: er.Graph, e: int) -> float:
    i, j = g.endpoints(e)
    adj = _adj_dict(g)
    adj[i].discard(j)
    adj[j].discard(i)
    si = bfs_ball(adj, i, 2) - {i}
    sj = bfs_ball(adj, j, 2) - {j}
    union = si | sj
    return len(si & sj) / len(union) if union else 0.0


def brute_cliques(g: er.Graph) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Max clique size containing each node / each adjacent pair, by subset scan."""
    n = g.n_nodes
    assert n <= 16, "subset enumeration only meant for tiny graphs"
    adj = _adj_dict(g)
    node_best = [1] * n
    pair_best: dict[tuple[int, int], int] = {}
    for bits in range(1, 1 << n):
        members = [v for v in range(n) if bits >> v & 1]
        ok = all(u in adj[v] for k, v in enumerate(members) for u in members[k + 1:])
        if not ok:
            continue
        size = len(members)
        for v in members:
            if size > node_best[v]:
                node_best[v] = size
        for k, v in enumerate(members):
            for u in members[k + 1:]:
                key = (v, u)
                if size > pair_best.get(key, 0):
                    pair_best[key] = size
    return node_best, pair_best


def naive_bn(g: er.Graph, e: int) -> float:
    node_best, pair_best = brute_cliques(g)
    i, j = g.endpoints(e)
    key = (i, j) if i < j else (j, i)
    return math.sqrt(node_best[i] * node_best[j]) / pair_best[key]


def naive_kappa(g: er.Graph, mask: er.EdgeMask | None = None) -> float:
    """All-pairs reachability by BFS from every node."""
    n = g.n_nodes
    removed = mask.removed if mask is not None else frozenset()
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for eid, (u, v) in enumerate(g.edges):
        if eid not in removed:
            adj[u].add(v)
            adj[v].add(u)
    reachable = 0
    for v in range(n):
        reachable += len(bfs_ball(adj, v, n)) - 1
    return reachable / (n * (n - 1))


def percolate_fromscratch(g: er.Graph, ids: list[int]) -> list[tuple]:
    """Recompute components after every removal; returns CurvePoint-like tuples."""
    n, m = g.n_nodes, g.n_edges
    removed: set[int] = set()

    def snapshot() -> tuple[int, int, int]:
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for eid, (u, v) in enumerate(g.edges):
            if eid not in removed:
                adj[u].add(v)
                adj[v].add(u)
        seen: set[int] = set()
        sizes = []
        for v in range(n):
            if v not in seen:
                comp = bfs_ball(adj, v, n)
                seen |= comp
                sizes.append(len(comp))
        return max(sizes), sum(s * (s - 1) for s in sizes), len(sizes)

    _, pairs0, _ = snapshot()
    out = []
    for i, eid in enumerate(ids, start=1):
        removed.add(eid)
        largest, pairs, comps = snapshot()
        out.append((i, i / m, largest / n, pairs / pairs0, comps / n))
    return out
