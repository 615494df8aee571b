"""Extractive tweet summarization by greedy Karci-entropy and keyword-diversity selection."""

__version__ = "0.1.0"

from endsum.corpus import (  # noqa: E402
    Corpus,
    KeywordMode,
    NormalizerConfig,
    ProcessedTweet,
    RawTweet,
    extract_keywords,
    is_retweet,
    parse_corpus,
    preprocess,
    read_corpus,
)
from endsum.rougeval import RougeReport, RougeScore, evaluate, rouge_l, rouge_n  # noqa: E402
from endsum.scoring import diversity, entropy_scores, karci_entropy, summary_keyword_union  # noqa: E402
from endsum.simgraph import OverlapTable, build_overlap_table, keyword_overlap, probability_row  # noqa: E402
from endsum.summarizer import (  # noqa: E402
    EnDConfig,
    SummaryState,
    baseline_frequency,
    combined_score,
    select_next,
    summarize,
)
