"""Adapter command line: encode raw datasets, subsample JSONL files."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .encode import LABEL_MAPS, TASKS, DatasetFormatError, encode_dataset, subsample
from .encoders import DEFAULT_MODEL, EncoderLoadError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embed-adapter",
        description="Convert raw labeled text datasets into embedded-corpus JSONL.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    encode = sub.add_parser("encode", help="embed a dataset into corpus JSONL")
    encode.add_argument("--input", required=True, help="raw dataset JSONL path")
    encode.add_argument("--task", choices=TASKS, default="single_text")
    encode.add_argument("--model", default=DEFAULT_MODEL,
                        help=f"encoder model id (default {DEFAULT_MODEL}); hash:<dim> for the offline encoder")
    encode.add_argument("--output", required=True, help="corpus JSONL path to write")
    encode.add_argument("--label-map", choices=LABEL_MAPS, default="none",
                        help="optional label folding, e.g. ceil-half sends 1-10 to 1-5")

    sample = sub.add_parser("subsample", help="uniform subsample of a JSONL file")
    sample.add_argument("--input", required=True)
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--seed", type=int, required=True)
    sample.add_argument("--output", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "encode":
            summary = encode_dataset(
                args.input,
                task=args.task,
                model_id=args.model,
                output_path=args.output,
                label_map=args.label_map,
            )
        else:
            summary = subsample(args.input, n=args.n, seed=args.seed, output_path=args.output)
    except (DatasetFormatError, EncoderLoadError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(asdict(summary), sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
