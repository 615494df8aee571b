#!/usr/bin/env python3
"""Write a Zipf-distributed synthetic tweet corpus as JSONL for timing the CLI.

    python scripts/make_synthetic_corpus.py /tmp/zipf10k.jsonl --tweets 10000
    endsum summarize -i /tmp/zipf10k.jsonl -L 50 --keyword-mode stopword_fallback -o /tmp/out.jsonl
"""

import argparse

from endsum.synthetic import write_jsonl, zipf_keyword_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("output")
    ap.add_argument("--tweets", type=int, default=10_000)
    ap.add_argument("--mean-keywords", type=float, default=8.0)
    ap.add_argument("--vocab", type=int, default=20_000)
    ap.add_argument("--exponent", type=float, default=1.1)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    corpus = zipf_keyword_corpus(a.tweets, a.mean_keywords, a.vocab, a.exponent, a.seed)
    write_jsonl(corpus, a.output)
    print(f"wrote {corpus.m} tweets to {a.output}")


if __name__ == "__main__":
    main()
