import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from endsum.corpus import (
    ConfigError,
    Corpus,
    CorpusFormatError,
    DuplicateIdError,
    KeywordMode,
    NormalizerConfig,
    RawTweet,
    extract_keywords,
    is_retweet,
    load_lemma_lexicon,
    load_pos_lexicon,
    load_stopwords,
    normalize_tokens,
    parse_corpus,
    preprocess,
)


def jsonl(*records):
    return io.BytesIO("".join(json.dumps(r) + "\n" for r in records).encode())


@pytest.mark.parametrize(
    "text, expected",
    [
        ("RT @user help needed", True),
        ("report from the scene", False),
        ("  rt@news flood update", True),
        ("Rt\tshelter open", True),
        ("RT", False),
        ("RTE news", False),
        ("flood RT @x", False),
        ("", False),
    ],
)
def test_is_retweet(text, expected):
    assert is_retweet(text) is expected


@pytest.mark.parametrize("lead", ["", " ", "  \t", "\n"])
@pytest.mark.parametrize("marker", ["rt", "RT", "Rt", "rT", "r", "rtx", "xrt"])
@pytest.mark.parametrize("sep", [" ", "@", "\t", ":", "", "x"])
def test_is_retweet_prefix_grid(lead, marker, sep):
    text = f"{lead}{marker}{sep}body"
    expected = marker.lower() == "rt" and sep in (" ", "@", "\t")
    assert is_retweet(text) is expected


def test_preprocess_pipeline_trace():
    config = NormalizerConfig(lemma_lexicon={"fires": "fire", "spreading": "spread"})
    tweet = preprocess(RawTweet("1", "Fires spreading… see http://t.co/x #earthquake @cnn"), config)
    assert tweet.tokens == ("fire", "spread", "see", "earthquake")


def test_preprocess_zero_tokens_is_droppable(plain_config):
    tweet = preprocess(RawTweet("1", "!!! 123"), plain_config)
    assert tweet.tokens == ()
    assert tweet.droppable


def test_preprocess_identity_lemmas(plain_config):
    assert preprocess(RawTweet("1", "Bridge collapsed"), plain_config).tokens == ("bridge", "collapsed")


def test_preprocess_strips_www_and_keeps_hashtag_words(plain_config):
    toks = normalize_tokens("Updates at www.example.org/live #Hurricane_Matthew @FEMA!", plain_config)
    assert toks == ["updates", "at", "hurricane", "matthew"]


def test_preprocess_drops_numeric_keeps_alnum(plain_config):
    assert normalize_tokens("M7.1 quake 2019 at 10am", plain_config) == ["m7", "quake", "at", "10am"]


def test_extract_keywords_pos_filter():
    config = NormalizerConfig(
        pos_lexicon={"the": "OTHER", "bridge": "NOUN", "collapsed": "VERB"}, keyword_mode=KeywordMode.POS_FILTER
    )
    assert extract_keywords(["the", "bridge", "collapsed"], config) == {"bridge", "collapsed"}


def test_extract_keywords_pos_filter_keeps_unknown_tokens():
    config = NormalizerConfig(pos_lexicon={"near": "OTHER"}, keyword_mode="pos_filter")
    assert extract_keywords(["fire", "near", "oaxaca"], config) == {"fire", "oaxaca"}


def test_extract_keywords_empty(plain_config):
    assert extract_keywords([], plain_config) == frozenset()


def test_extract_keywords_fallback_dedupes_and_filters(plain_config):
    assert extract_keywords(["flood", "flood", "water"], plain_config) == {"flood", "water"}
    config = NormalizerConfig(stopword_list={"the"})
    assert extract_keywords(["the", "a", "flood"], config) == {"flood"}


def test_pos_filter_without_lexicon_is_config_error():
    with pytest.raises(ConfigError):
        NormalizerConfig(keyword_mode=KeywordMode.POS_FILTER)


def test_parse_two_lines(plain_config):
    corpus = parse_corpus(jsonl({"id": "a", "text": "fire downtown"}, {"id": "b", "text": "flood north"}), plain_config)
    assert corpus.m == 2
    assert [t.index for t in corpus] == [0, 1]
    assert [t.id for t in corpus] == ["a", "b"]


def test_parse_malformed_line_reports_line_number(plain_config):
    data = b'{"id":"a","text":"x y"}\n{"id":"b","text":"z w"}\n{"id":\n'
    with pytest.raises(CorpusFormatError, match="line 3: malformed record"):
        parse_corpus(io.BytesIO(data), plain_config)


@pytest.mark.parametrize(
    "record",
    [
        {"text": "no id"},
        {"id": "", "text": "empty id"},
        {"id": 7, "text": "numeric id"},
        {"id": "x"},
        {"id": "x", "text": "bad ts", "timestamp": "noon"},
        {"id": "x", "text": "bad ts", "timestamp": True},
        ["not", "an", "object"],
    ],
)
def test_parse_rejects_bad_records(record, plain_config):
    with pytest.raises(CorpusFormatError, match="line 1"):
        parse_corpus(jsonl(record), plain_config)


def test_parse_rejects_empty_text(plain_config):
    with pytest.raises(CorpusFormatError, match="line 1: empty text"):
        parse_corpus(jsonl({"id": "x", "text": "   "}), plain_config)


def test_parse_duplicate_id(plain_config):
    with pytest.raises(DuplicateIdError, match="'a'"):
        parse_corpus(jsonl({"id": "a", "text": "one"}, {"id": "a", "text": "two"}), plain_config)


def test_parse_empty_input(plain_config):
    corpus = parse_corpus(io.BytesIO(b""), plain_config)
    assert corpus.m == 0 and corpus.skipped.total == 0


def test_parse_drops_retweets_and_counts_them(plain_config):
    corpus = parse_corpus(
        jsonl(
            {"id": "a", "text": "fire near the bridge"},
            {"id": "b", "text": "RT @x fire downtown"},
            {"id": "c", "text": "shelter open at school", "timestamp": 1700000000},
        ),
        plain_config,
    )
    assert corpus.m == 2
    assert [t.id for t in corpus] == ["a", "c"]
    assert corpus.skipped.retweets == 1


def test_parse_counts_empty_and_keywordless(plain_config):
    config = NormalizerConfig(stopword_list={"the", "of"})
    corpus = parse_corpus(
        jsonl({"id": "a", "text": "123 !!!"}, {"id": "b", "text": "the of"}, {"id": "c", "text": "quake"}), config
    )
    assert [t.id for t in corpus] == ["c"]
    assert corpus.skipped.empty == 1 and corpus.skipped.no_keywords == 1
    assert corpus[0].index == 0


def test_parse_skips_blank_lines_and_accepts_text_lines(plain_config):
    lines = ['{"id": "a", "text": "fire"}', "", "   ", '{"id": "b", "text": "flood"}']
    assert parse_corpus(lines, plain_config).m == 2


def test_builtin_lexicons_load():
    lemmas, pos, stop = load_lemma_lexicon(), load_pos_lexicon(), load_stopwords()
    assert lemmas["spreading"] == "spread"
    assert lemmas["people"] == "person"
    assert pos["the"] == "OTHER"
    assert "the" in stop
    assert set(pos.values()) <= {"NOUN", "VERB", "ADJ", "OTHER"}


def test_lexicon_files(tmp_path):
    (tmp_path / "lem.tsv").write_text("Fires\tfire\n\nran\trun\n")
    (tmp_path / "pos.tsv").write_text("fire\tNOUN\nthe\tOTHER\n")
    (tmp_path / "stop.txt").write_text("The\nof\n")
    config = NormalizerConfig.from_files(tmp_path / "lem.tsv", tmp_path / "stop.txt", tmp_path / "pos.tsv")
    tweet = preprocess(RawTweet("1", "The fires ran"), config)
    assert tweet.tokens == ("the", "fire", "run")
    assert tweet.keywords == {"fire", "run"}
    assert config.stopword_list == {"the", "of"}


def test_bad_lexicon_files(tmp_path):
    (tmp_path / "pos.tsv").write_text("fire\tPLACE\n")
    with pytest.raises(ConfigError):
        load_pos_lexicon(tmp_path / "pos.tsv")
    (tmp_path / "lem.tsv").write_text("no tab here\n")
    with pytest.raises(ConfigError):
        load_lemma_lexicon(tmp_path / "lem.tsv")


def test_builtin_pipeline_on_crisis_text(builtin_config):
    tweet = preprocess(RawTweet("1", "Rescuers are searching the collapsed buildings for survivors"), builtin_config)
    assert tweet.keywords == {"rescuer", "search", "collapse", "building", "survivor"}


tweet_text = (
    st.lists(st.sampled_from(list("abcXYZ  #@:/.!?0123456789_…éÉ\t") + ["http://", "www.", "RT ", "https://t.co/"]))
    .map("".join)
    .filter(lambda s: s.strip())
)


@given(tweet_text)
def test_tokens_are_normalized(text):
    config = NormalizerConfig(lemma_lexicon={"abc": "ABC-lemma"})
    tweet = preprocess(RawTweet("x", text), config)
    assert tweet.keywords <= set(tweet.tokens)
    for tok in tweet.tokens:
        assert tok == tok.lower()
        assert "://" not in tok and "@" not in tok and not tok.startswith("#")
        assert not tok.isnumeric()


@given(tweet_text)
def test_preprocess_is_pure(text):
    config = NormalizerConfig(stopword_list={"abc"})
    assert preprocess(RawTweet("x", text), config) == preprocess(RawTweet("x", text), config)


@given(st.lists(st.text(alphabet="abcdef ", min_size=1).filter(lambda s: s.strip()), max_size=12))
def test_parse_preserves_order(texts):
    records = [{"id": f"id{i}", "text": t} for i, t in enumerate(texts)]
    corpus = parse_corpus(jsonl(*records), NormalizerConfig())
    ids = [t.id for t in corpus]
    assert ids == sorted(ids, key=lambda s: int(s[2:]))
    assert [t.index for t in corpus] == list(range(corpus.m))


def test_corpus_from_keywords():
    corpus = Corpus.from_keywords([{"a", "b"}, ["c"]])
    assert corpus.m == 2 and corpus[1].keywords == {"c"}
