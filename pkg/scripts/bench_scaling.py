#!/usr/bin/env python3
"""Time overlap-table construction, entropy scoring and greedy selection as the corpus grows."""

import argparse
import time

from endsum.scoring import entropy_scores
from endsum.simgraph import build_overlap_table
from endsum.summarizer import EnDConfig, summarize
from endsum.synthetic import zipf_keyword_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="1000,2500,5000,10000")
    ap.add_argument("--length", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    print(f"{'m':>7} {'table_s':>8} {'entropy_s':>9} {'greedy_s':>8} {'max_nbrs':>8}")
    for m in (int(x) for x in a.sizes.split(",")):
        corpus = zipf_keyword_corpus(m, seed=a.seed)
        t0 = time.perf_counter()
        table = build_overlap_table(corpus)
        t1 = time.perf_counter()
        ent = entropy_scores(table, 0.5)
        t2 = time.perf_counter()
        summarize(corpus, EnDConfig(a.length), entropies=ent)
        t3 = time.perf_counter()
        max_nbrs = max(len(table.neighbors(i)) for i in range(0, m, max(1, m // 50)))
        print(f"{m:>7} {t1 - t0:>8.2f} {t2 - t1:>9.2f} {t3 - t2:>8.2f} {max_nbrs:>8}")


if __name__ == "__main__":
    main()
