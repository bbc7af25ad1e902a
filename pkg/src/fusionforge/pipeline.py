"""End-to-end dataset construction: JSON-lines ingestion, candidate
enumeration, rule application, filtering, negative controls, document-disjoint
splits, down-sampling, statistics and TSV emission.

Everything is deterministic for a fixed (input bytes, config, seed): random
decisions are hash-based rather than drawn from a stateful generator, so they
do not depend on processing order.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .core import (
    AnnotatedSentence,
    AnnotationError,
    DiscourseType,
    Document,
    FusionExample,
    Lexicons,
    Mention,
    MentionClusterSet,
    Provenance,
    Token,
    texts,
    tokens_from_texts,
)
from .morphology import MorphologyError, retense_vbg_to_past
from .rules import EngineConfig, discourse_type_of, generate_from_pair, generate_from_single

SPLIT_NAMES = ("train", "dev", "test")

BE_FORMS = frozenset({"is", "are", "was", "were"})

ANAPHORA_TYPES = frozenset({
    DiscourseType.ANAPHORA,
    DiscourseType.INNER_CONNECTIVE_ANAPHORA,
    DiscourseType.SENTENCE_COORDINATION_ANAPHORA,
    DiscourseType.DISCOURSE_CONNECTIVE_ANAPHORA,
})

DOWNSAMPLED_CONNECTIVES = frozenset({"and", "but"})

TSV_COLUMNS = (
    "coherent_first_sentence",
    "coherent_second_sentence",
    "incoherent_first_sentence",
    "incoherent_second_sentence",
    "discourse_type",
    "connective_string",
    "has_coref_type_pronoun",
    "has_coref_type_nominal",
)


class ConfigError(ValueError):
    """Invalid pipeline configuration."""


class IngestError(ValueError):
    """The input corpus file cannot be read at all."""


@dataclass(frozen=True)
class PipelineConfig:
    min_sentence_tokens: int = 7
    ascii_only: bool = True
    negative_rate: float = 0.1
    split_ratios: tuple[float, float, float] = (0.98, 0.01, 0.01)
    downsample_keep_prob: float = 0.1
    rng_seed: int = 0
    filter_generated_sentences: bool = True

    def __post_init__(self):
        if self.min_sentence_tokens < 1:
            raise ConfigError("min_sentence_tokens must be >= 1")
        for name, p in (("negative_rate", self.negative_rate),
                        ("downsample_keep_prob", self.downsample_keep_prob)):
            if not 0.0 <= p <= 1.0:
                raise ConfigError("%s must be in [0, 1], got %r" % (name, p))
        if len(self.split_ratios) != 3 or any(r < 0 for r in self.split_ratios):
            raise ConfigError("split_ratios must be three non-negative numbers")
        if abs(sum(self.split_ratios) - 1.0) > 1e-9:
            raise ConfigError("split_ratios must sum to 1, got %r" % (self.split_ratios,))


@dataclass
class RunReport:
    counters: Counter = field(default_factory=Counter)
    messages: list[str] = field(default_factory=list)
    max_messages: int = 50

    def count(self, key: str, n: int = 1) -> None:
        self.counters[key] += n

    def diagnostic(self, message: str) -> None:
        if len(self.messages) < self.max_messages:
            self.messages.append(message)

    def to_json(self) -> dict:
        return {"counters": dict(sorted(self.counters.items())),
                "messages": list(self.messages)}


# --- hashing ----------------------------------------------------------------

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = 1 << 64


def fnv1a64(data: str) -> int:
    """64-bit FNV-1a over the UTF-8 bytes, passed through a splitmix64-style
    finalizer. Plain FNV-1a leaves the high bits poorly mixed on short
    similar keys, and the unit-interval mapping reads exactly those bits;
    the finalizer avalanches them. This is the stable hash used for split
    assignment and sampling decisions."""
    h = _FNV_OFFSET
    for byte in data.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) % _U64
    h ^= h >> 30
    h = (h * 0xBF58476D1CE4E5B9) % _U64
    h ^= h >> 27
    h = (h * 0x94D049BB133111EB) % _U64
    h ^= h >> 31
    return h


def hash_unit(key: str) -> float:
    """Deterministic map of a string key to [0, 1)."""
    return fnv1a64(key) / _U64


def assign_split(doc_id: str, ratios: Sequence[float]) -> str:
    """Route a document to train/dev/test from a stable hash of its id, so
    every example of a document lands in the same split."""
    if not doc_id:
        raise ValueError("doc_id must be non-empty")
    u = hash_unit(doc_id)
    edge = 0.0
    for name, ratio in zip(SPLIT_NAMES, ratios):
        edge += ratio
        if u < edge:
            return name
    return SPLIT_NAMES[-1]


# --- ingestion --------------------------------------------------------------

def _parse_token(obj: dict) -> Token:
    if not isinstance(obj, dict) or "text" not in obj:
        raise AnnotationError("token must be an object with a 'text' field")
    return Token(
        text=str(obj["text"]),
        pos=str(obj.get("pos", "")),
        deprel=str(obj.get("deprel", "")),
        head=int(obj.get("head", 0)),
        lemma=str(obj.get("lemma", "")),
    )


def parse_document(obj: dict) -> Document:
    """Build a validated Document from one decoded JSON-lines record."""
    if not isinstance(obj, dict):
        raise AnnotationError("document record must be a JSON object")
    doc_id = obj.get("doc_id")
    if not doc_id or not isinstance(doc_id, str):
        raise AnnotationError("doc_id must be a non-empty string")
    raw_sentences = obj.get("sentences")
    if not isinstance(raw_sentences, list) or not raw_sentences:
        raise AnnotationError("sentences must be a non-empty list")
    sentences = []
    for sent in raw_sentences:
        if not isinstance(sent, dict) or not isinstance(sent.get("tokens"), list):
            raise AnnotationError("each sentence must carry a token list")
        tokens = tuple(_parse_token(t) for t in sent["tokens"])
        if sent.get("fragment"):
            sentences.append(AnnotatedSentence(tokens=tokens, is_fragment=True))
        else:
            sentences.append(AnnotatedSentence.build(tokens))
    clusters = []
    for raw_cluster in obj.get("clusters", []):
        if not isinstance(raw_cluster, list):
            raise AnnotationError("each cluster must be a list of mention spans")
        cluster = tuple(
            Mention(sent=int(m["sent"]), start=int(m["start"]),
                    end=int(m["end"]), kind=str(m.get("kind", "nominal")))
            for m in raw_cluster)
        if cluster:
            clusters.append(cluster)
    return Document(
        doc_id=doc_id,
        sentences=tuple(sentences),
        clusters=MentionClusterSet(clusters=tuple(clusters)),
    )


def ingest(path, report: RunReport | None = None) -> Iterator[Document]:
    """Stream validated documents from a JSON-lines file; malformed records
    are skipped and counted, an unreadable file is fatal."""
    report = report if report is not None else RunReport()
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise IngestError("cannot read corpus file %s: %s" % (path, exc)) from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            report.count("documents_seen")
            try:
                doc = parse_document(json.loads(line))
            except (json.JSONDecodeError, AnnotationError, KeyError,
                    TypeError, ValueError) as exc:
                report.count("documents_skipped")
                report.diagnostic("%s:%d: %s" % (path, lineno, exc))
                continue
            report.count("documents_ok")
            yield doc


# --- candidates and example generation ---------------------------------------

@dataclass(frozen=True)
class Candidate:
    """A single sentence (first == last) or a consecutive sentence pair."""

    doc: Document
    first: int
    last: int

    @property
    def is_pair(self) -> bool:
        return self.first != self.last

    def sentences(self) -> tuple[AnnotatedSentence, ...]:
        return self.doc.sentences[self.first: self.last + 1]


def enumerate_candidates(doc: Document) -> Iterator[Candidate]:
    """Every sentence and every consecutive pair, each exactly once, in
    document order."""
    n = len(doc.sentences)
    for i in range(n):
        yield Candidate(doc=doc, first=i, last=i)
        if i + 1 < n:
            yield Candidate(doc=doc, first=i, last=i + 1)


def _sentence_passes(tokens: Sequence[Token], config: PipelineConfig) -> bool:
    if len(tokens) < config.min_sentence_tokens:
        return False
    if config.ascii_only and any(not t.text.isascii() for t in tokens):
        return False
    return True


def generate_example(
    cand: Candidate,
    lex: Lexicons,
    config: PipelineConfig,
    engine_cfg: EngineConfig = EngineConfig(),
    report: RunReport | None = None,
) -> FusionExample | None:
    """Run the rule engine on one candidate. Sentence-pair candidates that
    match no rule become None (control) examples at the configured rate;
    single sentences that match nothing produce nothing."""
    report = report if report is not None else RunReport()
    sents = cand.sentences()
    if any(s.is_fragment for s in sents):
        report.count("candidates_fragment")
        return None
    if any(not _sentence_passes(s.tokens, config) for s in sents):
        report.count("candidates_input_filtered")
        return None

    doc = cand.doc
    provenance = Provenance(
        doc_id=doc.doc_id,
        sentence_indices=(cand.first,) if not cand.is_pair else (cand.first, cand.last))

    if cand.is_pair:
        a, b = sents
        outcome = generate_from_pair(
            a, cand.first, b, cand.last, doc.clusters, lex, engine_cfg)
        if outcome is None:
            key = "%d:negative:%s:%d:%d" % (
                config.rng_seed, doc.doc_id, cand.first, cand.last)
            if hash_unit(key) < config.negative_rate:
                report.count("examples_control")
                return FusionExample(
                    incoherent_first=tuple(a.tokens),
                    incoherent_second=tuple(b.tokens),
                    coherent_first=tuple(a.tokens),
                    coherent_second=tuple(b.tokens),
                    discourse_type=DiscourseType.NONE,
                    provenance=provenance,
                )
            report.count("candidates_unmatched")
            return None
        coherent_first, coherent_second = tuple(a.tokens), tuple(b.tokens)
    else:
        z = sents[0]
        outcome = generate_from_single(
            z, cand.first, doc.clusters, lex, engine_cfg)
        if outcome is None:
            report.count("candidates_unmatched")
            return None
        coherent_first, coherent_second = tuple(z.tokens), ()

    if config.filter_generated_sentences and (
            not _sentence_passes(outcome.sentence_1, config)
            or not _sentence_passes(outcome.sentence_2, config)):
        report.count("examples_output_filtered")
        return None

    example = FusionExample(
        incoherent_first=outcome.sentence_1,
        incoherent_second=outcome.sentence_2,
        coherent_first=coherent_first,
        coherent_second=coherent_second,
        discourse_type=discourse_type_of(outcome.applied_rules),
        connective=outcome.connective,
        has_coref_pronoun=outcome.coref_pronoun,
        has_coref_nominal=outcome.coref_nominal,
        provenance=provenance,
    )
    report.count("examples_generated")
    return example


# --- output-side validation ---------------------------------------------------

def audit_example(example: FusionExample) -> list[str]:
    """Check that every output token is accounted for: it must appear in the
    original text (case changes and copies are both sanctioned, so the
    comparison is case-insensitive) or belong to the explicit insertion set:
    a be verb, the possessive marker, a sentence-final period, or a re-tensed
    form of an original participle. Returns the unaccounted tokens."""
    coherent = list(example.coherent_first) + list(example.coherent_second)
    output = list(example.incoherent_first) + list(example.incoherent_second)
    orig_lower = {t.lower() for t in texts(coherent)}

    retensed_lower = set()
    for tok in coherent:
        if tok.pos == "VBG":
            try:
                retensed_lower.add(retense_vbg_to_past(tok).lower())
            except MorphologyError:
                pass

    violations: list[str] = []
    for word in texts(output):
        if word == "'s" or word == "." or word in BE_FORMS:
            continue
        lowered = word.lower()
        if lowered in orig_lower or lowered in retensed_lower:
            continue
        violations.append(word)
    return violations


# --- down-sampling and statistics --------------------------------------------

def is_downsample_target(example: FusionExample) -> bool:
    return (example.connective in DOWNSAMPLED_CONNECTIVES
            or example.discourse_type in ANAPHORA_TYPES)


def _downsample_key(example: FusionExample, ordinal: int, seed: int) -> str:
    prov = example.provenance
    if prov.doc_id and prov.doc_id != "unspecified":
        base = "%s:%s" % (prov.doc_id, ",".join(map(str, prov.sentence_indices)))
    else:
        base = "%d:%s|%s" % (ordinal,
                             " ".join(texts(example.incoherent_first)),
                             " ".join(texts(example.incoherent_second)))
    return "%d:downsample:%s" % (seed, base)


def downsample(
    stream: Iterable[FusionExample], config: PipelineConfig
) -> Iterator[FusionExample]:
    """Keep and/but-connective and anaphora examples with the configured
    probability; everything else passes through."""
    for ordinal, example in enumerate(stream):
        if not is_downsample_target(example):
            yield example
            continue
        if hash_unit(_downsample_key(example, ordinal, config.rng_seed)) \
                < config.downsample_keep_prob:
            yield example


@dataclass
class DatasetStats:
    total: int = 0
    type_counts: Counter = field(default_factory=Counter)
    connective_counts: Counter = field(default_factory=Counter)
    no_connective: int = 0
    split_totals: dict = field(default_factory=dict)

    def add(self, example: FusionExample) -> None:
        self.total += 1
        self.type_counts[example.discourse_type.value] += 1
        if example.connective:
            self.connective_counts[example.connective] += 1
        else:
            self.no_connective += 1

    def merge(self, other: "DatasetStats") -> None:
        self.total += other.total
        self.type_counts.update(other.type_counts)
        self.connective_counts.update(other.connective_counts)
        self.no_connective += other.no_connective
        for name, count in other.split_totals.items():
            self.split_totals[name] = self.split_totals.get(name, 0) + count

    def to_json(self) -> dict:
        def pct(count: int) -> float:
            return round(100.0 * count / self.total, 4) if self.total else 0.0

        types = {
            label: {"count": count, "percent": pct(count)}
            for label, count in sorted(
                self.type_counts.items(), key=lambda kv: (-kv[1], kv[0]))
        }
        connectives = {
            conn: {"count": count, "percent": pct(count)}
            for conn, count in sorted(
                self.connective_counts.items(), key=lambda kv: (-kv[1], kv[0]))
        }
        return {
            "total": self.total,
            "discourse_types": types,
            "connectives": connectives,
            "no_connective": {"count": self.no_connective,
                              "percent": pct(self.no_connective)},
            "split_totals": dict(sorted(self.split_totals.items())),
        }


def compute_stats(examples: Iterable[FusionExample]) -> DatasetStats:
    stats = DatasetStats()
    for example in examples:
        stats.add(example)
    return stats


# --- TSV serialization --------------------------------------------------------

def example_to_row(example: FusionExample) -> str:
    fields = (
        " ".join(texts(example.coherent_first)),
        " ".join(texts(example.coherent_second)),
        " ".join(texts(example.incoherent_first)),
        " ".join(texts(example.incoherent_second)),
        example.discourse_type.value,
        example.connective,
        "1" if example.has_coref_pronoun else "0",
        "1" if example.has_coref_nominal else "0",
    )
    return "\t".join(fields)


def row_to_example(row: str) -> FusionExample:
    fields = row.rstrip("\n").split("\t")
    if len(fields) != len(TSV_COLUMNS):
        raise ValueError("expected %d tab-separated fields, got %d"
                         % (len(TSV_COLUMNS), len(fields)))
    return FusionExample(
        incoherent_first=tokens_from_texts(fields[2].split()),
        incoherent_second=tokens_from_texts(fields[3].split()),
        coherent_first=tokens_from_texts(fields[0].split()),
        coherent_second=tokens_from_texts(fields[1].split()),
        discourse_type=DiscourseType.from_label(fields[4]),
        connective=fields[5],
        has_coref_pronoun=fields[6] == "1",
        has_coref_nominal=fields[7] == "1",
    )


def write_tsv(examples: Iterable[FusionExample], path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for example in examples:
            fh.write(example_to_row(example) + "\n")
            count += 1
    return count


def read_tsv(path) -> Iterator[FusionExample]:
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield row_to_example(line)


# --- full pipeline -------------------------------------------------------------

def run_generate(
    input_path,
    out_dir,
    config: PipelineConfig,
    lexicons: Lexicons,
    engine_cfg: EngineConfig = EngineConfig(),
) -> RunReport:
    """Ingest a corpus, generate examples, route them into document-disjoint
    train/dev/test TSVs under ``out_dir``, and write aggregate statistics."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = RunReport()
    stats = DatasetStats()
    writers = {name: open(out / ("%s.tsv" % name), "w", encoding="utf-8",
                          newline="\n") for name in SPLIT_NAMES}
    try:
        for doc in ingest(input_path, report):
            split = assign_split(doc.doc_id, config.split_ratios)
            for cand in enumerate_candidates(doc):
                report.count("candidates")
                example = generate_example(cand, lexicons, config,
                                           engine_cfg, report)
                if example is None:
                    continue
                bad = audit_example(example)
                if bad:
                    report.count("examples_audit_failed")
                    report.diagnostic(
                        "%s: unsanctioned output tokens %r"
                        % (doc.doc_id, bad))
                    continue
                writers[split].write(example_to_row(example) + "\n")
                stats.add(example)
                stats.split_totals[split] = stats.split_totals.get(split, 0) + 1
                report.count("examples_emitted")
                report.count("examples_emitted_%s" % split)
    finally:
        for fh in writers.values():
            fh.close()
    with open(out / "stats.json", "w", encoding="utf-8") as fh:
        json.dump(stats.to_json(), fh, indent=2, sort_keys=False)
        fh.write("\n")
    return report
