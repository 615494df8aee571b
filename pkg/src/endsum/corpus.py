"""Corpus ingestion: JSON Lines parsing, tweet normalization and keyword extraction."""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import IO, Iterable, Mapping

KEYWORD_TAGS = frozenset({"NOUN", "VERB", "ADJ"})
POS_TAGS = KEYWORD_TAGS | {"OTHER"}

_RETWEET = re.compile(r"rt(?:\s|@)", re.IGNORECASE)
_URL = re.compile(r"(?:https?://|www\.)\S*")
_MENTION = re.compile(r"@\w*")
# Unicode letters and digits; underscore counts as punctuation.
_TOKEN = re.compile(r"[^\W_]+")


class ConfigError(ValueError):
    """Raised for inconsistent normalizer settings."""


class CorpusFormatError(ValueError):
    """Raised for an unparseable or invalid input record."""

    def __init__(self, line: int, reason: str = "malformed record"):
        super().__init__(f"line {line}: {reason}")
        self.line = line


class DuplicateIdError(ValueError):
    def __init__(self, tweet_id: str, line: int):
        super().__init__(f"line {line}: duplicate id {tweet_id!r}")
        self.id = tweet_id
        self.line = line


class KeywordMode(str, enum.Enum):
    POS_FILTER = "pos_filter"
    STOPWORD_FALLBACK = "stopword_fallback"


def _data_path(name: str) -> Path:
    return Path(str(resources.files("endsum") / "data" / name))


def _read_pairs(path: str | Path) -> dict[str, str]:
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            try:
                key, value = line.split("\t")
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: expected 'token<TAB>value'") from None
            table[key] = value
    return table


def load_lemma_lexicon(path: str | Path | None = "builtin") -> dict[str, str]:
    """Read a ``token<TAB>lemma`` file. ``"builtin"`` selects the bundled English table."""
    if path is None:
        return {}
    if path == "builtin":
        path = _data_path("lemmas.tsv")
    return {k.lower(): v.lower() for k, v in _read_pairs(path).items()}


def load_pos_lexicon(path: str | Path | None = "builtin") -> dict[str, str]:
    if path is None:
        return {}
    if path == "builtin":
        path = _data_path("pos.tsv")
    table = {}
    for token, tag in _read_pairs(path).items():
        tag = tag.strip().upper()
        if tag not in POS_TAGS:
            raise ConfigError(f"{path}: unknown POS tag {tag!r} for {token!r}")
        table[token.lower()] = tag
    return table


def load_stopwords(path: str | Path | None = "builtin") -> frozenset[str]:
    if path is None:
        return frozenset()
    if path == "builtin":
        path = _data_path("stopwords.txt")
    with open(path, encoding="utf-8") as fh:
        return frozenset(w.strip().lower() for w in fh if w.strip())


@dataclass(frozen=True)
class NormalizerConfig:
    """Normalization settings with lexicons already loaded into memory.

    ``pos_lexicon=None`` means no tagger is available, which is only legal in
    ``STOPWORD_FALLBACK`` mode.
    """

    lemma_lexicon: Mapping[str, str] = field(default_factory=dict)
    stopword_list: frozenset[str] = frozenset()
    pos_lexicon: Mapping[str, str] | None = None
    keyword_mode: KeywordMode = KeywordMode.STOPWORD_FALLBACK

    def __post_init__(self):
        object.__setattr__(self, "keyword_mode", KeywordMode(self.keyword_mode))
        object.__setattr__(self, "stopword_list", frozenset(self.stopword_list))
        if self.keyword_mode is KeywordMode.POS_FILTER and self.pos_lexicon is None:
            raise ConfigError("keyword_mode=POS_FILTER requires a pos_lexicon")

    @classmethod
    def from_files(
        cls,
        lemma_lexicon: str | Path | None = "builtin",
        stopword_list: str | Path | None = "builtin",
        pos_lexicon: str | Path | None = "builtin",
        keyword_mode: KeywordMode | str = KeywordMode.POS_FILTER,
    ) -> "NormalizerConfig":
        """Build a config from file paths; ``"builtin"`` picks the bundled data, ``None`` disables."""
        return cls(
            lemma_lexicon=load_lemma_lexicon(lemma_lexicon),
            stopword_list=load_stopwords(stopword_list),
            pos_lexicon=None if pos_lexicon is None else load_pos_lexicon(pos_lexicon),
            keyword_mode=keyword_mode,
        )


@dataclass(frozen=True)
class RawTweet:
    id: str
    text: str
    timestamp: int | None = None


@dataclass(frozen=True)
class ProcessedTweet:
    index: int
    id: str
    tokens: tuple[str, ...]
    keywords: frozenset[str]
    text: str = ""

    @property
    def droppable(self) -> bool:
        return not self.tokens


@dataclass
class SkipReport:
    retweets: int = 0
    empty: int = 0
    no_keywords: int = 0

    @property
    def total(self) -> int:
        return self.retweets + self.empty + self.no_keywords


@dataclass
class Corpus:
    tweets: list[ProcessedTweet]
    skipped: SkipReport = field(default_factory=SkipReport)

    @property
    def m(self) -> int:
        return len(self.tweets)

    def __len__(self) -> int:
        return len(self.tweets)

    def __getitem__(self, i: int) -> ProcessedTweet:
        return self.tweets[i]

    def __iter__(self):
        return iter(self.tweets)

    @classmethod
    def from_keywords(cls, keyword_sets: Iterable[Iterable[str]]) -> "Corpus":
        """Corpus straight from keyword sets; tokens mirror the keywords. Handy for experiments."""
        tweets = []
        for i, kws in enumerate(keyword_sets):
            kws = frozenset(kws)
            tweets.append(ProcessedTweet(i, str(i), tuple(sorted(kws)), kws, " ".join(sorted(kws))))
        return cls(tweets)


def is_retweet(text: str) -> bool:
    return _RETWEET.match(text.lstrip()) is not None


def normalize_tokens(text: str, config: NormalizerConfig) -> list[str]:
    """Token stage of the pipeline, shared by corpus ingestion and ROUGE evaluation."""
    text = text.lower()
    text = _URL.sub(" ", text)
    text = _MENTION.sub(" ", text)
    text = text.replace("#", " ")
    lemmas = config.lemma_lexicon
    tokens = []
    for tok in _TOKEN.findall(text):
        tok = lemmas.get(tok, tok).lower()
        # a lexicon may map onto punctuation or digits, so filter after lookup
        if not any(ch.isalnum() for ch in tok) or tok.isnumeric():
            continue
        tokens.append(tok)
    return tokens


def extract_keywords(tokens: Iterable[str], config: NormalizerConfig) -> frozenset[str]:
    if config.keyword_mode is KeywordMode.POS_FILTER:
        if config.pos_lexicon is None:
            raise ConfigError("keyword_mode=POS_FILTER requires a pos_lexicon")
        tags = config.pos_lexicon
        # unknown tokens are kept
        return frozenset(t for t in tokens if tags.get(t, "NOUN") in KEYWORD_TAGS)
    stop = config.stopword_list
    return frozenset(t for t in tokens if len(t) >= 2 and t not in stop)


def preprocess(raw: RawTweet, config: NormalizerConfig, index: int = 0) -> ProcessedTweet:
    """Normalize one tweet. Check ``.droppable`` on the result: zero tokens means drop it."""
    tokens = normalize_tokens(raw.text, config)
    return ProcessedTweet(
        index=index,
        id=raw.id,
        tokens=tuple(tokens),
        keywords=extract_keywords(tokens, config),
        text=raw.text,
    )


def _parse_record(line: str, lineno: int) -> RawTweet:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError:
        raise CorpusFormatError(lineno) from None
    if not isinstance(obj, dict):
        raise CorpusFormatError(lineno)
    tweet_id, text, ts = obj.get("id"), obj.get("text"), obj.get("timestamp")
    if not isinstance(tweet_id, str) or not tweet_id or not isinstance(text, str):
        raise CorpusFormatError(lineno)
    if ts is not None and (isinstance(ts, bool) or not isinstance(ts, int)):
        raise CorpusFormatError(lineno)
    if not text.strip():
        raise CorpusFormatError(lineno, "empty text")
    return RawTweet(tweet_id, text, ts)


def parse_corpus(stream: IO[bytes] | Iterable[bytes | str], config: NormalizerConfig) -> Corpus:
    """Read JSON Lines tweets into a Corpus.

    Retweets, tweets left with no tokens, and tweets with no keywords are
    dropped and tallied in ``corpus.skipped``. Surviving tweets keep file
    order and get contiguous indices.
    """
    tweets: list[ProcessedTweet] = []
    skipped = SkipReport()
    seen: set[str] = set()
    for lineno, line in enumerate(stream, 1):
        if isinstance(line, bytes):
            try:
                line = line.decode("utf-8")
            except UnicodeDecodeError:
                raise CorpusFormatError(lineno, "invalid UTF-8") from None
        if not line.strip():
            continue
        raw = _parse_record(line, lineno)
        if raw.id in seen:
            raise DuplicateIdError(raw.id, lineno)
        seen.add(raw.id)
        if is_retweet(raw.text):
            skipped.retweets += 1
            continue
        tweet = preprocess(raw, config, index=len(tweets))
        if tweet.droppable:
            skipped.empty += 1
        elif not tweet.keywords:
            skipped.no_keywords += 1
        else:
            tweets.append(tweet)
    return Corpus(tweets, skipped)


def read_corpus(path: str | Path, config: NormalizerConfig) -> Corpus:
    with open(path, "rb") as fh:
        return parse_corpus(fh, config)
