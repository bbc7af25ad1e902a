"""Core domain types: annotated tokens and sentences, documents with mention
clusters, connective lexicons, and generated fusion examples.

Token positions are 1-based everywhere in this package (``head`` uses 0 as the
root sentinel). Sentence positions within a document are plain 0-based list
indices.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Iterator, Sequence

ROOT_HEAD = 0

MENTION_KINDS = ("pronoun", "nominal", "name")

_LEXICON_SECTIONS = ("C_b", "C_s", "C_f", "C_c", "P_r", "V")


class AnnotationError(ValueError):
    """Raised when annotated input violates a structural invariant."""


class LexiconError(ValueError):
    """Raised for malformed or inconsistent lexicon data."""


@dataclass(frozen=True)
class Token:
    """One surface token with its annotations.

    ``head`` is the 1-based position of the governing token, or ``ROOT_HEAD``
    for the root (and for bare tokens that carry no parse). Empty ``pos``,
    ``deprel`` and ``lemma`` are allowed; they simply never match any rule.
    """

    text: str
    pos: str = ""
    deprel: str = ""
    head: int = ROOT_HEAD
    lemma: str = ""

    def __post_init__(self):
        if not self.text:
            raise AnnotationError("token text must be non-empty")
        if any(c.isspace() for c in self.text):
            raise AnnotationError("token text must not contain whitespace: %r" % self.text)
        if self.head < 0:
            raise AnnotationError("token head must be >= 0, got %d" % self.head)


def tokens_from_texts(texts: Iterable[str]) -> tuple[Token, ...]:
    """Bare tokens (no annotations) from surface strings; test/CLI helper."""
    return tuple(Token(text=t) for t in texts)


def texts(tokens: Sequence[Token]) -> list[str]:
    return [t.text for t in tokens]


@dataclass(frozen=True)
class AnnotatedSentence:
    """An ordered token list forming one sentence.

    A well-formed sentence has exactly one token with deprel ``root``.
    Anything else must be flagged as a fragment; fragments are carried through
    ingestion but are never matched by detection rules.
    """

    tokens: tuple[Token, ...]
    is_fragment: bool = False

    def __post_init__(self):
        if not self.tokens:
            raise AnnotationError("sentence must contain at least one token")
        n = len(self.tokens)
        for pos_1b, tok in enumerate(self.tokens, start=1):
            if tok.head > n:
                raise AnnotationError(
                    "token %d head %d exceeds sentence length %d" % (pos_1b, tok.head, n))
            if tok.head == pos_1b:
                raise AnnotationError("token %d is its own head" % pos_1b)
        if not self.is_fragment:
            roots = [t for t in self.tokens if t.deprel == "root"]
            if len(roots) != 1:
                raise AnnotationError(
                    "sentence has %d root tokens; flag it as a fragment" % len(roots))

    @classmethod
    def build(cls, tokens: Sequence[Token]) -> "AnnotatedSentence":
        """Construct, auto-flagging as fragment when there is not exactly one root."""
        toks = tuple(tokens)
        roots = sum(1 for t in toks if t.deprel == "root")
        return cls(tokens=toks, is_fragment=(roots != 1))

    def __len__(self) -> int:
        return len(self.tokens)

    def tok(self, i: int) -> Token:
        """1-based token access."""
        if not 1 <= i <= len(self.tokens):
            raise IndexError("token index %d out of range 1..%d" % (i, len(self.tokens)))
        return self.tokens[i - 1]

    def texts(self) -> list[str]:
        return [t.text for t in self.tokens]

    def text(self) -> str:
        return " ".join(self.texts())

    def children(self) -> dict[int, list[int]]:
        """Head position -> 1-based child positions."""
        out: dict[int, list[int]] = {}
        for pos_1b, tok in enumerate(self.tokens, start=1):
            if tok.head != ROOT_HEAD:
                out.setdefault(tok.head, []).append(pos_1b)
        return out

    def subtree_range(self, i: int) -> tuple[int, int]:
        """Leftmost and rightmost 1-based positions in the dependency subtree
        rooted at token ``i`` (inclusive of ``i``)."""
        kids = self.children()
        lo = hi = i
        stack = [i]
        seen = {i}
        while stack:
            cur = stack.pop()
            for child in kids.get(cur, ()):
                if child in seen:
                    continue
                seen.add(child)
                lo = min(lo, child)
                hi = max(hi, child)
                stack.append(child)
        return lo, hi


@dataclass(frozen=True)
class Mention:
    """One entity mention span: sentence index (0-based), token span
    (1-based, end inclusive) and the mention kind."""

    sent: int
    start: int
    end: int
    kind: str

    def __post_init__(self):
        if self.sent < 0:
            raise AnnotationError("mention sentence index must be >= 0")
        if not 1 <= self.start <= self.end:
            raise AnnotationError(
                "mention span must satisfy 1 <= start <= end, got %d..%d" % (self.start, self.end))
        if self.kind not in MENTION_KINDS:
            raise AnnotationError("unknown mention kind %r" % self.kind)

    def __len__(self) -> int:
        return self.end - self.start + 1

    def overlaps(self, other: "Mention") -> bool:
        return self.sent == other.sent and self.start <= other.end and other.start <= self.end


@dataclass(frozen=True)
class MentionClusterSet:
    """Coreference clusters over one document; each cluster is a tuple of
    mentions of the same entity."""

    clusters: tuple[tuple[Mention, ...], ...] = ()

    def validate_against(self, sentences: Sequence[AnnotatedSentence]) -> None:
        for cluster in self.clusters:
            for m in cluster:
                if m.sent >= len(sentences):
                    raise AnnotationError("mention sentence index %d out of range" % m.sent)
                if m.end > len(sentences[m.sent]):
                    raise AnnotationError(
                        "mention span %d..%d exceeds sentence %d length %d"
                        % (m.start, m.end, m.sent, len(sentences[m.sent])))

    def mentions_in_sentence(self, sent: int) -> list[tuple[int, Mention]]:
        """(cluster id, mention) pairs for one sentence."""
        out = []
        for cid, cluster in enumerate(self.clusters):
            for m in cluster:
                if m.sent == sent:
                    out.append((cid, m))
        return out


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple[AnnotatedSentence, ...]
    clusters: MentionClusterSet = field(default_factory=MentionClusterSet)

    def __post_init__(self):
        if not self.doc_id:
            raise AnnotationError("doc_id must be non-empty")
        self.clusters.validate_against(self.sentences)


def mention_pairs(
    a: AnnotatedSentence,
    b: AnnotatedSentence,
    clusters: MentionClusterSet,
    *,
    a_index: int,
    b_index: int,
) -> tuple[tuple[Mention, Mention], ...]:
    """All same-cluster mention pairs (span in ``b``, span in ``a``).

    Spans selected in ``b`` are non-overlapping, chosen longest-span-first.
    Pairs are ordered by position in ``b`` then position in ``a``. Returns an
    empty tuple when the sentences share no entity.
    """
    del a, b  # spans were validated against the owning document at construction
    b_spans: list[tuple[int, Mention]] = clusters.mentions_in_sentence(b_index)
    a_by_cluster: dict[int, list[Mention]] = {}
    for cid, m in clusters.mentions_in_sentence(a_index):
        a_by_cluster.setdefault(cid, []).append(m)

    candidates = [(cid, m) for cid, m in b_spans if a_by_cluster.get(cid)]
    candidates.sort(key=lambda cm: (-len(cm[1]), cm[1].start, cm[0]))
    selected: list[tuple[int, Mention]] = []
    for cid, m in candidates:
        if not any(m.overlaps(prev) for _, prev in selected):
            selected.append((cid, m))

    pairs: list[tuple[Mention, Mention]] = []
    for cid, m_b in selected:
        for m_a in sorted(a_by_cluster[cid], key=lambda m: (m.start, m.end)):
            pairs.append((m_b, m_a))
    pairs.sort(key=lambda p: (p[0].start, p[0].end, p[1].start, p[1].end))
    return tuple(pairs)


class DiscourseType(enum.Enum):
    """The discourse-phenomenon label attached to every generated example."""

    APPOSITION = "Apposition"
    RELATIVE_CLAUSE = "Relative clause"
    CATAPHORA = "Cataphora"
    VP_COORDINATION = "Verb phrase coordination"
    NONE = "None (control)"
    ANAPHORA = "Anaphora"
    INNER_CONNECTIVE = "Inner connective"
    SENTENCE_COORDINATION = "Sentence coordination"
    INNER_CONNECTIVE_ANAPHORA = "Inner connective + anaphora"
    FORWARD_CONNECTIVE = "Forward connective"
    SENTENCE_COORDINATION_ANAPHORA = "Sentence coordination + anaphora"
    DISCOURSE_CONNECTIVE = "Discourse connective"
    DISCOURSE_CONNECTIVE_ANAPHORA = "Discourse connective + anaphora"

    @classmethod
    def from_label(cls, label: str) -> "DiscourseType":
        for member in cls:
            if member.value == label:
                return member
        raise ValueError("unknown discourse type label %r" % label)


CONNECTIVE_TYPES = frozenset({
    DiscourseType.DISCOURSE_CONNECTIVE,
    DiscourseType.DISCOURSE_CONNECTIVE_ANAPHORA,
    DiscourseType.INNER_CONNECTIVE,
    DiscourseType.INNER_CONNECTIVE_ANAPHORA,
    DiscourseType.FORWARD_CONNECTIVE,
    DiscourseType.SENTENCE_COORDINATION,
    DiscourseType.SENTENCE_COORDINATION_ANAPHORA,
    DiscourseType.VP_COORDINATION,
})


@dataclass(frozen=True)
class Provenance:
    doc_id: str
    sentence_indices: tuple[int, ...]


@dataclass(frozen=True)
class FusionExample:
    """One dataset row: the decomposed (incoherent) sentence pair plus the
    original (coherent) text it came from.

    ``coherent_second`` is empty when the original text was a single sentence.
    """

    incoherent_first: tuple[Token, ...]
    incoherent_second: tuple[Token, ...]
    coherent_first: tuple[Token, ...]
    coherent_second: tuple[Token, ...]
    discourse_type: DiscourseType
    connective: str = ""
    has_coref_pronoun: bool = False
    has_coref_nominal: bool = False
    provenance: Provenance = Provenance("unspecified", ())

    def __post_init__(self):
        verbatim = (texts(self.incoherent_first) == texts(self.coherent_first)
                    and texts(self.incoherent_second) == texts(self.coherent_second))
        if (self.discourse_type is DiscourseType.NONE) != verbatim:
            raise AnnotationError(
                "None (control) examples must equal the original text verbatim, "
                "and only they may")
        needs_connective = self.discourse_type in CONNECTIVE_TYPES
        if needs_connective != bool(self.connective):
            raise AnnotationError(
                "connective must be non-empty exactly for connective phenomena "
                "(type=%s, connective=%r)" % (self.discourse_type.value, self.connective))


def normalize_connective(words: Iterable[str]) -> str:
    """Lowercase, strip leading/trailing commas, collapse to single spaces."""
    toks = [w.lower() for w in words]
    while toks and toks[0] == ",":
        toks.pop(0)
    while toks and toks[-1] == ",":
        toks.pop()
    return " ".join(" ".join(toks).split())


@dataclass(frozen=True)
class Lexicons:
    """Connective and POS-tag lexicons driving the detection rules.

    Multi-token entries (including comma-attached variants) are stored as
    token tuples, in file order.
    """

    backward: tuple[tuple[str, ...], ...]
    intra: tuple[tuple[str, ...], ...]
    forward: tuple[tuple[str, ...], ...]
    conjunctions: tuple[str, ...]
    relative_pronouns: tuple[str, ...]
    verb_pos: tuple[str, ...]

    def all_connective_strings(self) -> frozenset[str]:
        """Normalized forms of every connective entry, for classification."""
        out = set()
        for seq in self.backward + self.intra + self.forward:
            out.add(normalize_connective(seq))
        out.update(normalize_connective((c,)) for c in self.conjunctions)
        out.discard("")
        return frozenset(out)


def _parse_lexicon_lines(lines: Iterable[str], source: str) -> Lexicons:
    sections: dict[str, list[tuple[str, ...]]] = {name: [] for name in _LEXICON_SECTIONS}
    current: str | None = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in sections:
                raise LexiconError("%s:%d: unknown section %r" % (source, lineno, name))
            current = name
            continue
        if current is None:
            raise LexiconError("%s:%d: entry before any section header" % (source, lineno))
        entry = tuple(line.split())
        if entry in sections[current]:
            raise LexiconError(
                "%s:%d: duplicate entry %r in section %s" % (source, lineno, line, current))
        sections[current].append(entry)

    def singles(name: str) -> tuple[str, ...]:
        out = []
        for entry in sections[name]:
            if len(entry) != 1:
                raise LexiconError(
                    "%s: section %s entries must be single tokens, got %r"
                    % (source, name, " ".join(entry)))
            out.append(entry[0])
        return tuple(out)

    return Lexicons(
        backward=tuple(sections["C_b"]),
        intra=tuple(sections["C_s"]),
        forward=tuple(sections["C_f"]),
        conjunctions=singles("C_c"),
        relative_pronouns=singles("P_r"),
        verb_pos=singles("V"),
    )


def load_lexicons(path) -> Lexicons:
    """Load lexicons from a sectioned text file; see data/lexicons.txt."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return _parse_lexicon_lines(fh, str(path))
    except OSError as exc:
        raise LexiconError("cannot read lexicon file %s: %s" % (path, exc)) from exc


def loads_lexicons(text: str, source: str = "<string>") -> Lexicons:
    return _parse_lexicon_lines(text.splitlines(), source)


def dumps_lexicons(lex: Lexicons) -> str:
    """Canonical serialization: section headers in fixed order, one entry per line."""
    parts = []
    by_section = {
        "C_b": [" ".join(e) for e in lex.backward],
        "C_s": [" ".join(e) for e in lex.intra],
        "C_f": [" ".join(e) for e in lex.forward],
        "C_c": list(lex.conjunctions),
        "P_r": list(lex.relative_pronouns),
        "V": list(lex.verb_pos),
    }
    for name in _LEXICON_SECTIONS:
        parts.append("[%s]" % name)
        parts.extend(by_section[name])
        parts.append("")
    return "\n".join(parts).rstrip("\n") + "\n"


def default_lexicons() -> Lexicons:
    """The lexicons shipped with the package."""
    data = resources.files("fusionforge").joinpath("data/lexicons.txt").read_text("utf-8")
    return loads_lexicons(data, "fusionforge/data/lexicons.txt")


def iter_jsonl(fh) -> Iterator[str]:
    for line in fh:
        line = line.strip()
        if line:
            yield line
