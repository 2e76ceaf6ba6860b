"""Command-line front end: stats, rank, percolate, compare.

Inputs are either edge-list files or inline generator specs of the form
``ba:n,m[,seed]``. Every run is deterministic given the input bytes and
flags; all randomness flows from the one explicit seed.

Exit codes: 0 success, 1 usage error, 2 data error, 3 resource limit
(clique search budget).
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .dataio import (EdgeListFormat, load_edge_list, reference_nm_for,
                     write_curve_csv, write_ranking_csv, write_summary_csv)
from .graph import (Graph, GraphError, generate_ba, graph_stats,
                    induced_subgraph, largest_component_nodes)
from .metrics import (DEFAULT_CLIQUE_BUDGET, CliqueSearchOverflow, MetricKind,
                      rank_edges, score_all)
from .percolation import RobustnessSummary, evaluate_metric

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    input: str
    metrics: list[MetricKind] = field(default_factory=lambda: list(MetricKind))
    output_dir: Path = Path("out")
    largest_component_only: bool = False
    clique_budget: int = DEFAULT_CLIQUE_BUDGET
    seed: int = 0
    delimiter: str = "whitespace"
    plots: bool = True


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; this tool reserves 2 for
    # data errors.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="edgerank",
                     description="Rank edges by importance and evaluate the "
                                 "rankings by edge percolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_metrics: bool) -> None:
        p.add_argument("--input", required=True,
                       help="edge-list file, or generator spec ba:n,m[,seed]")
        if with_metrics:
            p.add_argument("--metrics", default="SO,DP,TO,DI,BN,SN",
                           help="comma-separated subset of SO,DP,TO,DI,BN,SN "
                                "(default: all)")
        p.add_argument("--out", default="out", help="output directory (default: out)")
        p.add_argument("--largest-component-only", action="store_true",
                       help="restrict the graph to its largest component after loading")
        p.add_argument("--clique-budget", type=int, default=DEFAULT_CLIQUE_BUDGET,
                       help="work limit per exact clique search (BN)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for ba: specs that omit one (default: 0)")
        p.add_argument("--delimiter", choices=("whitespace", "comma", "tab"),
                       default="whitespace")
        p.add_argument("--no-plots", action="store_true",
                       help="skip rendering figures next to the CSV output")

    common(sub.add_parser("stats", help="print and save basic topology features"), False)
    common(sub.add_parser("rank", help="write a most-important-first ranking CSV per metric"), True)
    common(sub.add_parser("percolate",
                          help="write per-metric percolation curve CSVs, a summary CSV "
                               "and figures"), True)
    common(sub.add_parser("compare", help="print a console table of metrics ranked by R"), True)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(input=args.input)
    if hasattr(args, "metrics"):
        try:
            cfg.metrics = MetricKind.parse_list(args.metrics)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    cfg.output_dir = Path(args.out)
    cfg.largest_component_only = args.largest_component_only
    cfg.clique_budget = args.clique_budget
    cfg.seed = args.seed
    cfg.delimiter = args.delimiter
    cfg.plots = not args.no_plots
    return cfg


def _parse_ba_spec(spec: str, default_seed: int) -> tuple[int, int, int]:
    body = spec[len("ba:"):]
    parts = [p.strip() for p in body.split(",")]
    if len(parts) not in (2, 3):
        raise UsageError(f"generator spec must be ba:n,m[,seed], got {spec!r}")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"generator spec must use integers, got {spec!r}") from None
    n, m = nums[0], nums[1]
    seed = nums[2] if len(nums) == 3 else default_seed
    return n, m, seed


def _load_input(cfg: RunConfig) -> tuple[Graph, str]:
    """Resolve the input spec into a graph and a network name for outputs."""
    if cfg.input.startswith("ba:"):
        n, m, seed = _parse_ba_spec(cfg.input, cfg.seed)
        g = generate_ba(n, m, seed)
        name = f"ba_{n}_{m}_{seed}"
    else:
        path = Path(cfg.input)
        name = path.stem
        g, report = load_edge_list(path, EdgeListFormat(delimiter=cfg.delimiter),
                                   expected_nm=reference_nm_for(name))
        if report.self_loops_dropped or report.duplicates_collapsed:
            log.info("%s: dropped %d self-loops, collapsed %d duplicates",
                     name, report.self_loops_dropped, report.duplicates_collapsed)
    if cfg.largest_component_only:
        nodes = largest_component_nodes(g)
        if len(nodes) < g.n_nodes:
            log.info("restricting to largest component: %d of %d nodes",
                     len(nodes), g.n_nodes)
            g = induced_subgraph(g, nodes).graph
    return g, name


def cmd_stats(cfg: RunConfig) -> int:
    g, name = _load_input(cfg)
    st = graph_stats(g)
    print(f"network          {name}")
    print(f"nodes            {st.n}")
    print(f"edges            {st.m}")
    print(f"avg degree       {st.avg_degree:.4f}")
    print(f"max degree       {st.k_max}")
    print(f"avg clustering   {st.avg_clustering:.4f}")
    print(f"heterogeneity    {st.heterogeneity:.4f}")
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    out = cfg.output_dir / f"{name}_stats.csv"
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("network,n,m,avg_degree,k_max,avg_clustering,heterogeneity\n")
        fh.write(f"{name},{st.n},{st.m},{st.avg_degree:.6f},{st.k_max},"
                 f"{st.avg_clustering:.6f},{st.heterogeneity:.6f}\n")
    print(f"wrote {out}")
    return EXIT_OK


def cmd_rank(cfg: RunConfig) -> int:
    g, name = _load_input(cfg)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    for kind in cfg.metrics:
        scores = score_all(g, kind, clique_budget=cfg.clique_budget)
        ranked = rank_edges(scores, kind)
        out = cfg.output_dir / f"{name}_{kind.name.lower()}_ranking.csv"
        write_ranking_csv(g, ranked, scores, out)
        print(f"{kind.name} ({kind.direction}): wrote {out}")
    return EXIT_OK


def cmd_percolate(cfg: RunConfig) -> int:
    g, name = _load_input(cfg)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    summaries: list[RobustnessSummary] = []
    curves = {}
    for kind in cfg.metrics:
        _, curve, summary = evaluate_metric(g, kind, clique_budget=cfg.clique_budget)
        out = cfg.output_dir / f"{name}_{kind.name.lower()}_curve.csv"
        write_curve_csv(curve, out)
        print(f"{kind.name} ({kind.direction}): R={summary.r:.6f}, wrote {out}")
        summaries.append(summary)
        curves[kind.name] = curve
    summary_path = cfg.output_dir / f"{name}_summary.csv"
    write_summary_csv(name, summaries, summary_path)
    print(f"wrote {summary_path}")
    if cfg.plots:
        from .plots import save_percolation_figures

        for path in save_percolation_figures(curves, cfg.output_dir, name):
            print(f"wrote {path}")
    return EXIT_OK


def _format_compare_table(summaries: list[RobustnessSummary]) -> str:
    # Best per column: lowest R, lowest mean kappa ratio, highest mean cc.
    rows = sorted(summaries, key=lambda s: (s.r, s.metric.name if s.metric else ""))
    best_r = min(s.r for s in rows)
    best_k = min(s.mean_kappa_ratio for s in rows)
    best_c = max(s.mean_cc for s in rows)
    lines = [f"{'metric':<8}{'R':>12}{'mean_kappa_ratio':>20}{'mean_cc':>12}"]
    for s in rows:
        mark = lambda x, best: f"{x:.6f}" + ("*" if x == best else " ")
        name = s.metric.name if s.metric is not None else "custom"
        lines.append(f"{name:<8}{mark(s.r, best_r):>12}"
                     f"{mark(s.mean_kappa_ratio, best_k):>20}{mark(s.mean_cc, best_c):>12}")
    lines.append("* best in column (low R, low mean_kappa_ratio, high mean_cc)")
    return "\n".join(lines)


def cmd_compare(cfg: RunConfig) -> int:
    g, name = _load_input(cfg)
    summaries = [evaluate_metric(g, kind, clique_budget=cfg.clique_budget)[2]
                 for kind in cfg.metrics]
    print(f"network: {name}  N={g.n_nodes}  M={g.n_edges}")
    print(_format_compare_table(summaries))
    return EXIT_OK


_COMMANDS = {
    "stats": cmd_stats,
    "rank": cmd_rank,
    "percolate": cmd_percolate,
    "compare": cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"edgerank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CliqueSearchOverflow as exc:
        print(f"edgerank: {exc}; raise --clique-budget", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphError, OSError) as exc:
        print(f"edgerank: {exc}", file=sys.stderr)
        return EXIT_DATA


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
