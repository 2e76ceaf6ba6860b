"""Edge-list ingestion and CSV serialization.

Input files are plain text, one edge per line: the first two columns are
the endpoints, further columns (weights, timestamps) are ignored, and
lines starting with '#' or '%' are comments. Node labels are opaque
tokens. All CSV output is deterministic with floats at 6 decimal places.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, GraphError, NormalizationReport, _normalize_pairs
from .metrics import EdgeScore, RankedEdges
from .percolation import PercolationCurve, RobustnessSummary

log = logging.getLogger(__name__)

DELIMITERS = ("whitespace", "comma", "tab")

# Published (N, M) for the benchmark networks this tool is usually run on,
# keyed by lowercase dataset name. Used to warn when a downloaded file does
# not match the reference version.
REFERENCE_NM: dict[str, tuple[int, int]] = {
    "ba": (1000, 4975),
    "citeseer": (3279, 4552),
    "email": (1133, 5451),
    "powergrid": (4941, 6594),
    "faa": (1226, 2408),
    "figeys": (2239, 6432),
    "adjnoun": (112, 425),
    "sex": (16730, 39044),
    "usair": (1574, 17215),
}


class EdgeListParseError(GraphError):
    """A row of an edge-list file could not be parsed."""


@dataclass(frozen=True)
class EdgeListFormat:
    delimiter: str = "whitespace"
    comment_prefixes: tuple[str, ...] = ("#", "%")

    def __post_init__(self) -> None:
        if self.delimiter not in DELIMITERS:
            raise ValueError(f"delimiter must be one of {DELIMITERS}")

    def split(self, line: str) -> list[str]:
        if self.delimiter == "whitespace":
            return line.split()
        sep = "," if self.delimiter == "comma" else "\t"
        return [tok.strip() for tok in line.split(sep)]


def _parse_rows(path: Path, fmt: EdgeListFormat) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith(fmt.comment_prefixes):
                continue
            tokens = fmt.split(line)
            if len(tokens) < 2 or not tokens[0] or not tokens[1]:
                raise EdgeListParseError(
                    f"{path}:{lineno}: expected two endpoint columns, got {line!r}")
            pairs.append((tokens[0], tokens[1]))
    return pairs


def load_edge_list(path: str | Path, fmt: EdgeListFormat | None = None, *,
                   expected_nm: tuple[int, int] | None = None,
                   ) -> tuple[Graph, NormalizationReport]:
    """Load and normalize an edge-list file.

    Returns the graph plus an exact account of dropped self-loops and
    collapsed duplicates. Edge ids follow the file order of first
    occurrences. If ``expected_nm`` is given and the normalized (N, M)
    differ, a prominent warning is logged (the graph is still returned).
    """
    path = Path(path)
    fmt = fmt or EdgeListFormat()
    pairs = _parse_rows(path, fmt)
    if not pairs:
        raise EdgeListParseError(f"{path}: no edge rows found")
    g, report = _normalize_pairs(pairs)
    if expected_nm is not None and (g.n_nodes, g.n_edges) != tuple(expected_nm):
        log.warning(
            "%s: loaded N=%d, M=%d but reference says N=%d, M=%d; "
            "results will not be comparable to published numbers",
            path.name, g.n_nodes, g.n_edges, expected_nm[0], expected_nm[1])
    return g, report


def reference_nm_for(name: str) -> tuple[int, int] | None:
    """Reference (N, M) for a known dataset name, else None."""
    return REFERENCE_NM.get(name.lower())


def write_edge_list(g: Graph, path: str | Path) -> None:
    """Write one space-separated labeled edge per line, in edge-id order."""
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in g.edges:
            fh.write(f"{g.labels[u]} {g.labels[v]}\n")


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def write_curve_csv(curve: PercolationCurve, path: str | Path) -> None:
    """Curve CSV with a step-0 convenience row followed by one row per removal."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("step,fraction_removed,sigma,kappa_ratio,cc\n")
        for p in (curve.initial, *curve.steps):
            fh.write(f"{p.step},{_fmt(p.fraction_removed)},{_fmt(p.sigma)},"
                     f"{_fmt(p.kappa_ratio)},{_fmt(p.cc)}\n")


def write_summary_csv(network: str, summaries: Sequence[RobustnessSummary],
                      path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("network,metric,R,mean_kappa_ratio,mean_cc\n")
        for s in summaries:
            name = s.metric.name if s.metric is not None else "custom"
            fh.write(f"{network},{name},{_fmt(s.r)},{_fmt(s.mean_kappa_ratio)},"
                     f"{_fmt(s.mean_cc)}\n")


def write_ranking_csv(g: Graph, ranked: RankedEdges, scores: Iterable[EdgeScore],
                      path: str | Path) -> None:
    """Most-important-first ranking with original endpoint labels."""
    value_of = {s.edge: s.value for s in scores}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("rank,edge_id,node_u,node_v,score\n")
        for rank, eid in enumerate(ranked.order, start=1):
            u, v = g.edges[eid]
            fh.write(f"{rank},{eid},{g.labels[u]},{g.labels[v]},{_fmt(value_of[eid])}\n")
