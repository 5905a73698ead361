"""Command-line front end.

Subcommands: validate, depth, median, qstat, weights, evaluate, demo.
Data goes to --output (default stdout) as key-sorted JSON or fixed
6-decimal CSV; diagnostics go to stderr. Exit codes: 0 success, 1
validation/data failure, 2 usage error.

Rendered reports never include a timestamp, so identical inputs produce
byte-identical output. The CLI performs no arithmetic of its own; every
number comes from the library.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .corpus import Corpus, attach_predictions, load_corpus, validate_corpus
from .demo import DemoConfig, DemoCurves, demo_curve_stats
from .depth import corpus_depth_tables, q_statistic, source_median
from .exceptions import DegenerateWeightsError, DepthF1Error
from .metrics import (
    DEFAULT_LAMBDAS,
    EvaluationReport,
    depth_weights,
    evaluate_sweep,
    lambda_subset,
)

_DEFAULT_LAMBDA_ARG = ",".join(str(lam) for lam in DEFAULT_LAMBDAS)


def _round6(x: float) -> float:
    return float(f"{x:.6f}")


def _fmt6(x: float | None) -> str:
    return "" if x is None else f"{x:.6f}"


def _json_bytes(doc: object) -> bytes:
    return (json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def _csv_bytes(header: list[str], rows: list[list[str]]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def _parse_lambdas(text: str) -> list[int]:
    """CSV integers, each in [0, 100), strictly increasing."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("lambda grid is empty")
    try:
        grid = [int(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"lambdas must be integers: {text!r}") from exc
    for lam in grid:
        if not 0 <= lam < 100:
            raise argparse.ArgumentTypeError(f"lambda must be in [0, 100), got {lam}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise argparse.ArgumentTypeError("lambdas must be strictly increasing")
    return grid


def _write(data: bytes, output: str | None) -> None:
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(output).write_bytes(data)


def render_report(report: EvaluationReport, format: str) -> bytes:
    """Serialize an evaluation report deterministically.

    JSON output is key-sorted and newline-terminated; CSV mirrors the
    per-lambda table with the exact header
    ``lambda,kept_count,micro_f1,df1,degenerate``. Both renderings carry
    the same numeric values at 6-decimal precision.
    """
    if format == "json":
        doc = {
            "q": {"value": _round6(report.q.value), "pairs": report.q.pair_count},
            "median": {
                "index": report.median.index,
                "id": report.median.id,
                "depth": _round6(report.median.depth),
            },
            "rows": [
                {
                    "lambda": row.lam,
                    "kept_count": row.kept_count,
                    "micro_f1": _round6(row.micro_f1),
                    "df1": None if row.df1 is None else _round6(row.df1),
                    "degenerate": row.degenerate,
                }
                for row in report.rows
            ],
            "metadata": {
                "corpus": report.metadata.corpus_path,
                "tool_version": report.metadata.tool_version,
            },
        }
        return _json_bytes(doc)
    if format == "csv":
        rows = [
            [
                str(row.lam),
                str(row.kept_count),
                _fmt6(row.micro_f1),
                _fmt6(row.df1),
                "true" if row.degenerate else "false",
            ]
            for row in report.rows
        ]
        return _csv_bytes(["lambda", "kept_count", "micro_f1", "df1", "degenerate"], rows)
    raise ValueError(f"unsupported format {format!r}")


def _render_validation(report, format: str) -> bytes:
    if format == "json":
        return _json_bytes(
            {
                "ok": report.ok,
                "issues": [
                    {"id": issue.sample_id, "code": issue.code, "message": issue.message}
                    for issue in report.issues
                ],
            }
        )
    rows = [[issue.sample_id or "", issue.code, issue.message] for issue in report.issues]
    return _csv_bytes(["id", "code", "message"], rows)


def _render_depths(corpus: Corpus, format: str) -> bytes:
    source_table, target_table = corpus_depth_tables(corpus)
    entries = [
        (s.id, s.role, float(score))
        for table, samples in ((source_table, corpus.source), (target_table, corpus.target))
        for s, score in zip(samples, table.scores)
    ]
    if format == "json":
        return _json_bytes(
            {
                "reference_size": source_table.reference_size,
                "scores": [{"id": i, "role": r, "depth": _round6(d)} for i, r, d in entries],
            }
        )
    return _csv_bytes(["id", "role", "depth"], [[i, r, _fmt6(d)] for i, r, d in entries])


def _render_median(corpus: Corpus, format: str) -> bytes:
    source_table, _ = corpus_depth_tables(corpus)
    median = source_median(source_table)
    if format == "json":
        return _json_bytes(
            {"index": median.index, "id": median.id, "depth": _round6(median.depth)}
        )
    return _csv_bytes(
        ["index", "id", "depth"],
        [[str(median.index), median.id or "", _fmt6(median.depth)]],
    )


def _render_qstat(corpus: Corpus, format: str) -> bytes:
    source_table, target_table = corpus_depth_tables(corpus)
    q = q_statistic(source_table, target_table)
    if format == "json":
        return _json_bytes({"q": _round6(q.value), "pairs": q.pair_count})
    return _csv_bytes(["q", "pairs"], [[_fmt6(q.value), str(q.pair_count)]])


def _render_weights(corpus: Corpus, grid: list[int], format: str) -> bytes:
    source_table, target_table = corpus_depth_tables(corpus)
    median = source_median(source_table)
    blocks = []
    for lam in grid:
        subset = lambda_subset(target_table, lam)
        kept_ids = [corpus.target[i].id for i in subset.kept_indices]
        try:
            table = depth_weights(median.depth, target_table, subset)
        except DegenerateWeightsError:
            blocks.append(
                {
                    "lambda": lam,
                    "kept_count": len(subset.kept_indices),
                    "clamped_count": None,
                    "degenerate": True,
                    "weights": [],
                }
            )
            print(f"warning: degenerate weights at lambda={lam}", file=sys.stderr)
            continue
        blocks.append(
            {
                "lambda": lam,
                "kept_count": len(subset.kept_indices),
                "clamped_count": table.clamped_count,
                "degenerate": False,
                "weights": [
                    {"id": i, "weight": _round6(float(w))}
                    for i, w in zip(kept_ids, table.weights)
                ],
            }
        )
    if format == "json":
        return _json_bytes({"median_depth": _round6(median.depth), "lambdas": blocks})
    rows = [
        [str(block["lambda"]), entry["id"], _fmt6(entry["weight"])]
        for block in blocks
        for entry in block["weights"]
    ]
    return _csv_bytes(["lambda", "id", "weight"], rows)


def _demo_doc(curves: DemoCurves, cfg: DemoConfig) -> dict:
    def points(rows) -> list[dict]:
        return [
            {
                "lambda": p.lam,
                "df1_mean": _round6(p.df1_mean),
                "df1_std": _round6(p.df1_std),
                "micro_f1_mean": _round6(p.micro_f1_mean),
                "micro_f1_std": _round6(p.micro_f1_std),
            }
            for p in rows
        ]

    return {
        "seeds": curves.seeds,
        "config": {
            "gamma_a": cfg.gamma_a,
            "gamma_b": cfg.gamma_b,
            "beta": cfg.beta,
            "p_min": cfg.p_min,
            "n_source": cfg.n_source,
            "n_target": cfg.n_target,
            "n_classes": cfg.n_classes,
            "dimension": cfg.dimension,
            "separation": cfg.separation,
            "seed": cfg.seed,
        },
        "model_a": points(curves.model_a),
        "model_b": points(curves.model_b),
    }


def _demo_curve_csv(rows) -> bytes:
    return _csv_bytes(
        ["lambda", "df1_mean", "df1_std", "micro_f1_mean", "micro_f1_std"],
        [
            [str(p.lam), _fmt6(p.df1_mean), _fmt6(p.df1_std), _fmt6(p.micro_f1_mean), _fmt6(p.micro_f1_std)]
            for p in rows
        ],
    )


def _demo_output_paths(output: str) -> tuple[str, str]:
    path = Path(output)
    return (
        str(path.with_name(f"{path.stem}.model_a{path.suffix or '.csv'}")),
        str(path.with_name(f"{path.stem}.model_b{path.suffix or '.csv'}")),
    )


def _cmd_demo(args: argparse.Namespace) -> int:
    cfg = DemoConfig(seed=args.seed)
    curves = demo_curve_stats(cfg, args.lambdas, n_seeds=args.seeds)
    if args.format == "json":
        _write(_json_bytes(_demo_doc(curves, cfg)), args.output)
        return 0
    # One curve CSV per model: two files next to --output, or both blocks
    # on stdout separated by a blank line.
    csv_a = _demo_curve_csv(curves.model_a)
    csv_b = _demo_curve_csv(curves.model_b)
    if args.output is None:
        _write(csv_a + b"\n" + csv_b, None)
    else:
        path_a, path_b = _demo_output_paths(args.output)
        _write(csv_a, path_a)
        _write(csv_b, path_b)
    return 0


def _load(args: argparse.Namespace) -> Corpus:
    corpus = load_corpus(args.corpus)
    if getattr(args, "predictions", None):
        corpus = attach_predictions(corpus, args.predictions)
    return corpus


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depthf1",
        description="Depth-weighted cross-domain classification metrics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, corpus: bool = True) -> None:
        if corpus:
            p.add_argument("--corpus", required=True, help="corpus JSONL path")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    common(sub.add_parser("validate", help="check corpus invariants"))
    common(sub.add_parser("depth", help="per-sample depths w.r.t. the source set"))
    common(sub.add_parser("median", help="deepest source sample"))
    common(sub.add_parser("qstat", help="corpus dissimilarity Q statistic"))

    weights = sub.add_parser("weights", help="per-lambda dissimilarity weights")
    common(weights)
    weights.add_argument("--lambdas", type=_parse_lambdas, default=list(DEFAULT_LAMBDAS),
                         help=f"percentile grid (default {_DEFAULT_LAMBDA_ARG})")

    evaluate = sub.add_parser("evaluate", help="micro-F1/DF1 sweep over the lambda grid")
    common(evaluate)
    evaluate.add_argument("--predictions", default=None, help="prediction JSONL path")
    evaluate.add_argument("--lambdas", type=_parse_lambdas, default=list(DEFAULT_LAMBDAS),
                          help=f"percentile grid (default {_DEFAULT_LAMBDA_ARG})")

    demo = sub.add_parser("demo", help="synthetic model-A/model-B comparison curves")
    common(demo, corpus=False)
    demo.add_argument("--lambdas", type=_parse_lambdas, default=list(DEFAULT_LAMBDAS),
                      help=f"percentile grid (default {_DEFAULT_LAMBDA_ARG})")
    demo.add_argument("--seed", type=int, default=0, help="base seed")
    demo.add_argument("--seeds", type=int, default=30, help="number of seeded runs")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "demo":
            if args.seed < 0 or args.seeds <= 0:
                parser.error("--seed must be >= 0 and --seeds must be positive")
            return _cmd_demo(args)

        corpus = _load(args)
        if args.command == "validate":
            report = validate_corpus(corpus)
            _write(_render_validation(report, args.format), args.output)
            return 0 if report.ok else 1
        if args.command == "depth":
            _write(_render_depths(corpus, args.format), args.output)
            return 0
        if args.command == "median":
            _write(_render_median(corpus, args.format), args.output)
            return 0
        if args.command == "qstat":
            _write(_render_qstat(corpus, args.format), args.output)
            return 0
        if args.command == "weights":
            _write(_render_weights(corpus, args.lambdas, args.format), args.output)
            return 0
        if args.command == "evaluate":
            report = evaluate_sweep(corpus, args.lambdas)
            _write(render_report(report, args.format), args.output)
            return 0
    except (DepthF1Error, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
