#!/usr/bin/env python3
"""Write a synthetic annotated corpus (JSON lines) for pipeline experiments.

    python3 scripts/make_synthetic_corpus.py --out corpus.jsonl --docs 10000
"""
import argparse

from fusionforge.synth import write_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True)
    parser.add_argument("--docs", type=int, default=10000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    count = write_corpus(args.out, args.docs, args.seed)
    print("wrote %d documents to %s" % (count, args.out))


if __name__ == "__main__":
    main()
