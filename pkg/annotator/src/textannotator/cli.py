"""The ``annotate`` command line."""
from __future__ import annotations

import argparse
import sys

from .adapter import AdapterConfig, AdapterError, annotate_file


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annotate",
        description="Annotate raw text into the dependency-annotated "
                    "JSON-lines corpus format.")
    parser.add_argument("--in", dest="in_path", required=True,
                        help="UTF-8 plain text input")
    parser.add_argument("--out", dest="out_path", required=True,
                        help="JSON-lines output")
    parser.add_argument("--model", default="builtin",
                        help="'builtin' or 'spacy:<model>' (default: builtin)")
    parser.add_argument("--no-coref", action="store_true")
    parser.add_argument("--no-segment", action="store_true",
                        help="treat each document as a single sentence")
    parser.add_argument("--blocks", action="store_true",
                        help="documents are blank-line blocks, not lines")
    parser.add_argument("--batch-size", type=int, default=64)
    parser.add_argument("--label-map", default=None,
                        help="override the shipped label mapping table")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = AdapterConfig(
        model=args.model,
        batch_size=args.batch_size,
        segment_sentences=not args.no_segment,
        coref=not args.no_coref,
        doc_mode="block" if args.blocks else "line",
        label_map_path=args.label_map,
    )
    try:
        count = annotate_file(args.in_path, args.out_path, config)
    except (AdapterError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    print("wrote %d documents to %s" % (count, args.out_path))
    return 0


if __name__ == "__main__":
    sys.exit(main())
