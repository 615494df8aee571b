#!/usr/bin/env python3
"""Independent step-by-step recomputation of the golden end-to-end outputs.

Deliberately shares no code with the ``endsum`` package: tokenization is done
character by character, overlaps by brute force over all pairs, entropy with
``math`` only, greedy selection by rescoring every candidate each round, and
ROUGE by list matching plus a recursive LCS. Only the bundled lexicon files are
read from the package's data directory.

Writes ``expected_summary.jsonl`` and ``expected_report.json`` next to the
fixture. Run it with the fixture's parameters:

    python scripts/golden_oracle.py tests/data/golden --length 5
"""

import argparse
import json
import math
import sys
from functools import lru_cache
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "endsum" / "data"


def load_tsv(name):
    out = {}
    for line in (DATA / name).read_text(encoding="utf-8").splitlines():
        if line.strip():
            k, v = line.split("\t")
            out[k.lower()] = v
    return out


LEMMAS = {k: v.lower() for k, v in load_tsv("lemmas.tsv").items()}
POS = {k: v.upper() for k, v in load_tsv("pos.tsv").items()}


def tokens_of(text):
    words = []
    for w in text.lower().split():
        if w.startswith(("http://", "https://", "www.")) or w.startswith("@"):
            continue
        words.append(w.replace("#", " "))
    toks, cur = [], ""
    for ch in " ".join(words) + " ":
        if ch.isalnum():
            cur += ch
        else:
            if cur:
                toks.append(cur)
            cur = ""
    toks = [LEMMAS.get(t, t) for t in toks]
    return [t for t in toks if not t.isnumeric()]


def is_rt(text):
    t = text.lstrip()
    return len(t) >= 3 and t[:2].lower() == "rt" and (t[2].isspace() or t[2] == "@")


def keywords_of(toks):
    return {t for t in toks if POS.get(t, "NOUN") in ("NOUN", "VERB", "ADJ")}


def entropy(i, kws, gamma):
    overlaps = [len(kws[i] & kws[j]) for j in range(len(kws)) if j != i]
    total = sum(overlaps)
    terms = []
    for o in overlaps:
        if o > 0:
            p = o / total
            terms.append(abs(-math.pow(p, gamma) * math.log2(p)))
    return math.fsum(terms)


def greedy(kws, ent, length, alpha, beta):
    picked, trace = [], []
    for _ in range(min(length, len(kws))):
        union = set()
        for k in picked:
            union |= kws[k]
        best = None
        for i in range(len(kws)):
            if i in picked:
                continue
            d = 1.0 - len(kws[i] & union) / len(kws[i])
            s = alpha * ent[i] + beta * d
            if best is None or s > best[0]:
                best = (s, i, d)
        picked.append(best[1])
        trace.append(best)
    return trace


def ngram_list(toks, n):
    return [tuple(toks[i:i + n]) for i in range(len(toks) - n + 1)]


def prf(match, nc, nr):
    p = match / nc if nc else 0.0
    r = match / nr if nr else 0.0
    return p, r, (2 * p * r / (p + r) if p + r > 0 else 0.0)


def rouge_n(c, r, n):
    cg, rg = ngram_list(c, n), ngram_list(r, n)
    pool, match = list(rg), 0
    for g in cg:
        if g in pool:
            pool.remove(g)
            match += 1
    return prf(match, len(cg), len(rg))


def lcs(a, b):
    sys.setrecursionlimit(100000)

    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a) or j == len(b):
            return 0
        if a[i] == b[j]:
            return 1 + go(i + 1, j + 1)
        return max(go(i + 1, j), go(i, j + 1))

    return go(0, 0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("fixture_dir", type=Path)
    ap.add_argument("--length", type=int, default=5)
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--beta", type=float, default=0.5)
    ap.add_argument("--gamma", type=float, default=0.5)
    a = ap.parse_args()

    records = [json.loads(l) for l in (a.fixture_dir / "tweets.jsonl").read_text("utf-8").splitlines() if l.strip()]
    kept = []
    for rec in records:
        if is_rt(rec["text"]):
            continue
        kws = keywords_of(tokens_of(rec["text"]))
        if kws:
            kept.append((rec, kws))
    kws = [k for _, k in kept]
    ent = [entropy(i, kws, a.gamma) for i in range(len(kws))]
    trace = greedy(kws, ent, a.length, a.alpha, a.beta)

    lines = []
    for rank, (score, i, d) in enumerate(trace, 1):
        rec = kept[i][0]
        lines.append(json.dumps({
            "rank": rank, "id": rec["id"], "text": rec["text"], "entropy": round(ent[i], 6),
            "diversity_at_selection": round(d, 6), "score": round(score, 6),
        }, ensure_ascii=False))
    (a.fixture_dir / "expected_summary.jsonl").write_text("".join(l + "\n" for l in lines), "utf-8")

    cand = tokens_of("\n".join(kept[i][0]["text"] for _, i, _ in trace))
    ref = tokens_of((a.fixture_dir / "reference.txt").read_text("utf-8"))
    l = lcs(tuple(cand), tuple(ref))
    scores = {"rouge1": rouge_n(cand, ref, 1), "rouge2": rouge_n(cand, ref, 2),
              "rougeL": prf(l, len(cand), len(ref))}
    body = ", ".join(f'"{k}": {{"p": {p:.6f}, "r": {r:.6f}, "f1": {f:.6f}}}' for k, (p, r, f) in scores.items())
    (a.fixture_dir / "expected_report.json").write_text("{" + body + "}\n", "utf-8")
    print(f"selected {[kept[i][0]['id'] for _, i, _ in trace]}")


if __name__ == "__main__":
    main()
