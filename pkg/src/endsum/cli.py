"""Command-line interface.

    endsum summarize --input tweets.jsonl --length 25 --output summary.jsonl
    endsum evaluate --candidate summary.jsonl --reference gold.txt
    endsum sweep --input tweets.jsonl --reference gold.txt --length 25 --alphas 0.25,0.5,0.75

Exit status: 0 on success, 2 for usage or validation errors, 3 when the data
leaves nothing to summarize or evaluate.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

from endsum import __version__
from endsum.corpus import Corpus, CorpusFormatError, DuplicateIdError, ConfigError, KeywordMode, NormalizerConfig, parse_corpus
from endsum.rougeval import EvaluationError, evaluate
from endsum.scoring import dump_scores_csv, entropy_scores
from endsum.simgraph import build_overlap_table, dump_overlaps_csv
from endsum.summarizer import EmptyCorpusError, EnDConfig, SummaryState, baseline_frequency, summarize

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 2, 3


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


def _lexicon_arg(value: str) -> str | None:
    return None if value.lower() == "none" else value


def _float_list(value: str) -> list[float]:
    try:
        return [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {value!r}") from None


def _add_normalizer_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("preprocessing")
    g.add_argument("--lemma-lexicon", type=_lexicon_arg, default="builtin", metavar="PATH|builtin|none")
    g.add_argument("--stopwords", type=_lexicon_arg, default="builtin", metavar="PATH|builtin|none")
    g.add_argument("--pos-lexicon", type=_lexicon_arg, default="builtin", metavar="PATH|builtin|none")
    g.add_argument(
        "--keyword-mode",
        choices=[m.value for m in KeywordMode],
        default=KeywordMode.POS_FILTER.value,
        help="keyword extraction: POS lexicon filter (default) or stopword removal",
    )


def _add_length_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--length", "-L", type=int, required=True, help="number of tweets in the summary")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="endsum", description="Entropy and diversity based tweet summarization")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("summarize", help="select an L-tweet summary from a JSONL corpus")
    s.add_argument("--input", "-i", type=Path, required=True)
    _add_length_flag(s)
    s.add_argument("--alpha", type=float, default=0.5, help="entropy weight (default 0.5)")
    s.add_argument("--beta", type=float, default=0.5, help="diversity weight (default 0.5)")
    s.add_argument("--gamma", type=float, default=0.5, help="Karci entropy exponent (default 0.5)")
    s.add_argument("--method", choices=["endsum", "frequency"], default="endsum")
    s.add_argument("--output", "-o", type=Path, help="summary JSONL (default: stdout)")
    s.add_argument("--manifest", type=Path, help="run manifest JSON (default: <output>.manifest.json)")
    s.add_argument("--dump-overlaps", type=Path, metavar="CSV")
    s.add_argument("--dump-scores", type=Path, metavar="CSV")
    _add_normalizer_flags(s)

    e = sub.add_parser("evaluate", help="ROUGE-1/2/L of a summary against a reference")
    e.add_argument("--candidate", "-c", type=Path, required=True, help="summary JSONL or plain text")
    e.add_argument("--reference", "-r", type=Path, required=True, help="plain text, one tweet per line")
    _add_normalizer_flags(e)

    w = sub.add_parser("sweep", help="grid search over alpha, beta, gamma")
    w.add_argument("--input", "-i", type=Path, required=True)
    w.add_argument("--reference", "-r", type=Path, required=True)
    _add_length_flag(w)
    w.add_argument("--alphas", type=_float_list, default=[0.5])
    w.add_argument("--betas", type=_float_list, default=[0.5])
    w.add_argument("--gammas", type=_float_list, default=[0.5])
    w.add_argument("--output", "-o", type=Path, help="CSV (default: stdout)")
    _add_normalizer_flags(w)
    return parser


def _normalizer(args) -> NormalizerConfig:
    try:
        return NormalizerConfig.from_files(
            lemma_lexicon=args.lemma_lexicon,
            stopword_list=args.stopwords,
            pos_lexicon=args.pos_lexicon,
            keyword_mode=args.keyword_mode,
        )
    except OSError as exc:
        raise UsageError(f"cannot read lexicon: {exc}") from None
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def _normalizer_echo(args) -> dict:
    return {
        "lemma_lexicon": args.lemma_lexicon,
        "stopword_list": args.stopwords,
        "pos_lexicon": args.pos_lexicon,
        "keyword_mode": args.keyword_mode,
    }


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_corpus(data: bytes, normalizer: NormalizerConfig) -> Corpus:
    try:
        return parse_corpus(io.BytesIO(data), normalizer)
    except (CorpusFormatError, DuplicateIdError) as exc:
        raise UsageError(f"invalid corpus: {exc}") from None


def _config(length: int, alpha: float, beta: float, gamma: float) -> EnDConfig:
    try:
        return EnDConfig(summary_length=length, alpha=alpha, beta=beta, gamma=gamma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _run_summary(corpus: Corpus, config: EnDConfig, method: str, table=None, entropies=None):
    try:
        if method == "frequency":
            return baseline_frequency(corpus, config.summary_length)
        return summarize(corpus, config, table=table, entropies=entropies)
    except EmptyCorpusError:
        raise DataError("no candidates: corpus has no tweets left after preprocessing") from None


def summary_lines(corpus: Corpus, state: SummaryState, entropies) -> list[str]:
    lines = []
    for rank, (i, (_, div, score)) in enumerate(zip(state.selected, state.trace), 1):
        tweet = corpus.tweets[i]
        record = {
            "rank": rank,
            "id": tweet.id,
            "text": tweet.text,
            "entropy": round(entropies[i], 6),
            "diversity_at_selection": round(div, 6),
            "score": round(score, 6),
        }
        lines.append(json.dumps(record, ensure_ascii=False))
    return lines


def cmd_summarize(args) -> int:
    started = time.perf_counter()
    normalizer = _normalizer(args)
    config = _config(args.length, args.alpha, args.beta, args.gamma)
    data = _read_bytes(args.input)
    corpus = _load_corpus(data, normalizer)
    if corpus.m == 0:
        raise DataError("no candidates: corpus has no tweets left after preprocessing")
    table = build_overlap_table(corpus)
    entropies = entropy_scores(table, config.gamma)
    state = _run_summary(corpus, config, args.method, table, entropies)

    text = "".join(line + "\n" for line in summary_lines(corpus, state, entropies))
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text, encoding="utf-8")
    if args.dump_overlaps:
        dump_overlaps_csv(table, args.dump_overlaps)
    if args.dump_scores:
        dump_scores_csv(corpus, entropies, args.dump_scores)

    manifest_path = args.manifest
    if manifest_path is None and args.output is not None:
        manifest_path = args.output.with_name(args.output.name + ".manifest.json")
    if manifest_path is not None:
        manifest = {
            "tool": "endsum",
            "version": __version__,
            "command": "summarize",
            "method": args.method,
            "config": {**asdict(config), **_normalizer_echo(args)},
            "input_sha256": hashlib.sha256(data).hexdigest(),
            "tweets_retained": corpus.m,
            "skipped": asdict(corpus.skipped),
            "duration_ms": round((time.perf_counter() - started) * 1000),
        }
        manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return EXIT_OK


def read_summary_text(data: bytes) -> str:
    """Summary text from JSONL (``text`` fields ordered by ``rank``) or plain text."""
    text = data.decode("utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    records = []
    for ln in lines:
        try:
            obj = json.loads(ln)
        except json.JSONDecodeError:
            return text
        if not isinstance(obj, dict) or not isinstance(obj.get("text"), str):
            return text
        records.append(obj)
    if not records:
        return text
    records.sort(key=lambda r: r.get("rank", 0))
    return "\n".join(r["text"] for r in records)


def cmd_evaluate(args) -> int:
    normalizer = _normalizer(args)
    try:
        candidate = read_summary_text(_read_bytes(args.candidate))
        reference = _read_bytes(args.reference).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise UsageError(f"input is not UTF-8: {exc}") from None
    try:
        report = evaluate(candidate, reference, normalizer)
    except EvaluationError as exc:
        raise DataError(str(exc)) from None
    sys.stdout.write(report.to_json() + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if not (args.alphas and args.betas and args.gammas):
        raise UsageError("empty parameter grid")
    normalizer = _normalizer(args)
    grid = [_config(args.length, a, b, g) for a in args.alphas for b in args.betas for g in args.gammas]
    corpus = _load_corpus(_read_bytes(args.input), normalizer)
    try:
        reference = _read_bytes(args.reference).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise UsageError(f"reference is not UTF-8: {exc}") from None
    if corpus.m == 0:
        raise DataError("no candidates: corpus has no tweets left after preprocessing")
    table = build_overlap_table(corpus)
    by_gamma = {}

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alpha", "beta", "gamma", "L", "rouge1_f1", "rouge2_f1", "rougeL_f1"])
    for config in grid:
        if config.gamma not in by_gamma:
            by_gamma[config.gamma] = entropy_scores(table, config.gamma)
        state = _run_summary(corpus, config, "endsum", table, by_gamma[config.gamma])
        candidate = "\n".join(corpus.tweets[i].text for i in state.selected)
        try:
            report = evaluate(candidate, reference, normalizer)
        except EvaluationError as exc:
            raise DataError(str(exc)) from None
        writer.writerow(
            [
                repr(config.alpha),
                repr(config.beta),
                repr(config.gamma),
                config.summary_length,
                f"{report.rouge1.f1:.6f}",
                f"{report.rouge2.f1:.6f}",
                f"{report.rougeL.f1:.6f}",
            ]
        )
    if args.output is None:
        sys.stdout.write(out.getvalue())
    else:
        args.output.write_text(out.getvalue(), encoding="utf-8")
    return EXIT_OK


COMMANDS = {"summarize": cmd_summarize, "evaluate": cmd_evaluate, "sweep": cmd_sweep}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"endsum {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"endsum {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"endsum {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
