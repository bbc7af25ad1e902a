"""The ``forge`` command line: dataset generation, down-sampling, corpus
splitting, statistics, scoring and alignment analysis.

Exit codes: 0 on success, 1 on a fatal input error, 2 on a configuration
error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import LexiconError, Lexicons, default_lexicons, load_lexicons, texts
from .metrics import analyze, exact_match, sari
from .pipeline import (
    ConfigError,
    IngestError,
    PipelineConfig,
    assign_split,
    compute_stats,
    downsample,
    ingest,
    read_tsv,
    run_generate,
    write_tsv,
)
from .rules import EngineConfig

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONFIG = 2


def _parse_ratios(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError("--ratios wants three comma-separated numbers")
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError as exc:
        raise ConfigError("bad ratio value: %s" % exc) from exc


def _lexicons_from(path: str | None) -> Lexicons:
    return load_lexicons(path) if path else default_lexicons()


def _emit(report: dict, out: str | None) -> None:
    payload = json.dumps(report, indent=2)
    if out:
        Path(out).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)


def cmd_generate(args) -> int:
    config = PipelineConfig(
        min_sentence_tokens=args.min_tokens,
        ascii_only=not args.keep_non_ascii,
        negative_rate=args.negative_rate,
        split_ratios=_parse_ratios(args.ratios),
        rng_seed=args.seed,
        filter_generated_sentences=not args.no_output_filter,
    )
    lexicons = _lexicons_from(args.lexicons)
    engine_cfg = EngineConfig(be_tense=args.be_tense)
    report = run_generate(args.input, args.out, config, lexicons, engine_cfg)
    _emit(report.to_json(), None)
    return EXIT_OK


def cmd_downsample(args) -> int:
    config = PipelineConfig(downsample_keep_prob=args.keep_prob, rng_seed=args.seed)
    count = write_tsv(downsample(read_tsv(args.input), config), args.out)
    print(json.dumps({"written": count}))
    return EXIT_OK


def cmd_split(args) -> int:
    ratios = _parse_ratios(args.ratios)
    PipelineConfig(split_ratios=ratios)  # validates
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    writers = {name: open(out / ("%s.jsonl" % name), "w", encoding="utf-8")
               for name in ("train", "dev", "test")}
    counts = {name: 0 for name in writers}
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    doc_id = json.loads(line)["doc_id"]
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise IngestError("cannot read doc_id: %s" % exc) from exc
                name = assign_split(doc_id, ratios)
                writers[name].write(line + "\n")
                counts[name] += 1
    finally:
        for fh in writers.values():
            fh.close()
    print(json.dumps({"documents": counts}))
    return EXIT_OK


def cmd_stats(args) -> int:
    stats = compute_stats(read_tsv(args.input))
    _emit(stats.to_json(), args.out)
    return EXIT_OK


def _load_gold_and_predictions(gold_path, pred_path):
    gold = list(read_tsv(gold_path))
    with open(pred_path, "r", encoding="utf-8") as fh:
        predictions = [line.rstrip("\n").split() for line in fh]
    if len(gold) != len(predictions):
        raise IngestError(
            "gold has %d examples but predictions have %d lines"
            % (len(gold), len(predictions)))
    return gold, predictions


def cmd_score(args) -> int:
    gold, predictions = _load_gold_and_predictions(args.gold, args.pred)
    report: dict = {"examples": len(gold)}
    if args.metric in ("sari", "both"):
        totals = {"sari": 0.0}
        per_n = {"keep": [0.0] * 4, "add": [0.0] * 4, "delete": [0.0] * 4}
        for example, predicted in zip(gold, predictions):
            inp = texts(example.incoherent_first) + texts(example.incoherent_second)
            ref = texts(example.coherent_first) + texts(example.coherent_second)
            breakdown = sari(inp, predicted if predicted else ["<empty>"], ref)
            totals["sari"] += breakdown.sari
            for idx in range(4):
                per_n["keep"][idx] += breakdown.f1_keep[idx]
                per_n["add"][idx] += breakdown.f1_add[idx]
                per_n["delete"][idx] += breakdown.f1_delete[idx]
        count = max(len(gold), 1)
        report["sari"] = totals["sari"] / count
        report["per_n"] = {
            kind: [value / count for value in values]
            for kind, values in per_n.items()
        }
    if args.metric in ("em", "both"):
        hits = sum(
            exact_match(predicted,
                        texts(example.coherent_first) + texts(example.coherent_second),
                        case_sensitive=not args.ignore_case)
            for example, predicted in zip(gold, predictions))
        report["exact_match"] = hits / max(len(gold), 1)
    _emit(report, args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    gold, predictions = _load_gold_and_predictions(args.gold, args.pred)
    lexicons = _lexicons_from(args.lexicons)
    report = analyze(zip(gold, predictions), lexicons)
    _emit(report.to_json(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forge",
        description="Generate, filter and evaluate sentence-fusion datasets "
                    "from dependency-annotated text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build train/dev/test TSVs from an annotated corpus")
    p.add_argument("--input", required=True, help="annotated corpus (JSON lines)")
    p.add_argument("--lexicons", default=None, help="lexicon file (default: shipped)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--negative-rate", type=float, default=0.1, dest="negative_rate")
    p.add_argument("--ratios", default="0.98,0.01,0.01")
    p.add_argument("--min-tokens", type=int, default=7, dest="min_tokens")
    p.add_argument("--keep-non-ascii", action="store_true", dest="keep_non_ascii")
    p.add_argument("--no-output-filter", action="store_true", dest="no_output_filter",
                   help="apply the length/ASCII filter to input sentences only")
    p.add_argument("--be-tense", choices=("auto", "matrix"), default="auto", dest="be_tense")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("downsample", help="down-sample and/but and anaphora examples")
    p.add_argument("--input", required=True, help="examples TSV")
    p.add_argument("--out", required=True, help="output TSV")
    p.add_argument("--keep-prob", type=float, required=True, dest="keep_prob")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_downsample)

    p = sub.add_parser("split", help="route corpus documents into disjoint train/dev/test files")
    p.add_argument("--input", required=True, help="annotated corpus (JSON lines)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--ratios", default="0.98,0.01,0.01")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("stats", help="discourse type and connective distribution of a TSV")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("score", help="score predictions against a gold TSV")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--metric", choices=("sari", "em", "both"), default="both")
    p.add_argument("--ignore-case", action="store_true", dest="ignore_case")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("analyze", help="alignment-based connective/pronoun analysis")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--lexicons", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print("configuration error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    except (IngestError, LexiconError, OSError, ValueError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
