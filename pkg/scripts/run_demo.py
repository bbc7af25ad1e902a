#!/usr/bin/env python3
"""End-to-end demonstration on a synthetic corpus: generate a dataset,
down-sample it, report its distribution, and score a copy baseline.

    python3 scripts/run_demo.py --workdir /tmp/forge-demo
"""
import argparse
import json
from pathlib import Path

from fusionforge.cli import main as forge
from fusionforge.core import texts
from fusionforge.pipeline import read_tsv
from fusionforge.synth import write_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", default="demo-out")
    parser.add_argument("--docs", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    work = Path(args.workdir)
    work.mkdir(parents=True, exist_ok=True)
    corpus = work / "corpus.jsonl"
    write_corpus(corpus, args.docs, args.seed)
    print("== generate ==")
    assert forge(["generate", "--input", str(corpus), "--out", str(work / "data"),
                  "--seed", str(args.seed)]) == 0

    print("== downsample (keep 0.1 of and/but/anaphora) ==")
    assert forge(["downsample", "--input", str(work / "data" / "train.tsv"),
                  "--out", str(work / "train_sampled.tsv"),
                  "--keep-prob", "0.1", "--seed", str(args.seed)]) == 0

    print("== stats of the down-sampled training set ==")
    assert forge(["stats", "--input", str(work / "train_sampled.tsv")]) == 0

    # score two trivial baselines on dev: copying the inputs, and echoing gold
    dev = work / "data" / "dev.tsv"
    copy_pred = work / "copy_pred.txt"
    gold_pred = work / "gold_pred.txt"
    with open(copy_pred, "w", encoding="utf-8") as cp, \
            open(gold_pred, "w", encoding="utf-8") as gp:
        for ex in read_tsv(dev):
            cp.write(" ".join(texts(ex.incoherent_first)
                              + texts(ex.incoherent_second)) + "\n")
            gp.write(" ".join(texts(ex.coherent_first)
                              + texts(ex.coherent_second)) + "\n")
    print("== score: copy baseline ==")
    assert forge(["score", "--gold", str(dev), "--pred", str(copy_pred)]) == 0
    print("== score: gold echo ==")
    assert forge(["score", "--gold", str(dev), "--pred", str(gold_pred)]) == 0
    print("== analyze: copy baseline ==")
    out = work / "analysis.json"
    assert forge(["analyze", "--gold", str(dev), "--pred", str(copy_pred),
                  "--out", str(out)]) == 0
    print(json.dumps(json.loads(out.read_text())["connective_table"], indent=2)[:400])


if __name__ == "__main__":
    main()
