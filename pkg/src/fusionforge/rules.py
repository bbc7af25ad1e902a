"""Detection and generation rules for nine discourse phenomena, plus the
anaphora combination step.

Each rule has a matcher over an annotated sentence (or consecutive pair) and a
generator that decomposes the text into two independent sentences using the
token edit operations. Generators return ``None`` when a precondition fails;
the caller treats that as no match. Matching reads annotations only from the
original sentences, never from edited token lists.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace as dc_replace
from typing import Sequence

from .core import (
    AnnotatedSentence,
    AnnotationError,
    DiscourseType,
    Lexicons,
    Mention,
    MentionClusterSet,
    Token,
    normalize_connective,
    texts,
)
from .editops import (
    SENTENCE_FINAL,
    content_length,
    delete,
    finalize_sentence,
    prepend,
    split,
    trim,
)
from .morphology import MorphologyError, retense_vbg_to_past, select_be_verb

# mirrors the shipped [V] lexicon section; rules whose contracts take no
# lexicon argument use this constant
VERB_POS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})

SUBJECT_DEPRELS = frozenset({"nsubj", "nsubjpass"})

# forward connectives that must not be followed by a comma
FORWARD_NO_COMMA = frozenset({("although",), ("since",)})

NON_SUBJECT_RELATIVES = frozenset({"whose", "whom"})

DISCOURSE_CONNECTIVE_WINDOW = 5
COORDINATION_WINDOW = 5


class RuleId(enum.Enum):
    DISCOURSE_CONNECTIVE = "discourse_connective"
    ANAPHORA = "anaphora"
    FORWARD_CONNECTIVE = "forward_connective"
    INNER_CONNECTIVE = "inner_connective"
    CATAPHORA = "cataphora"
    SENTENCE_COORDINATION = "sentence_coordination"
    VP_COORDINATION = "vp_coordination"
    RELATIVE_CLAUSE = "relative_clause"
    APPOSITION = "apposition"


_TYPE_BY_RULES: dict[tuple[RuleId, ...], DiscourseType] = {
    (RuleId.DISCOURSE_CONNECTIVE,): DiscourseType.DISCOURSE_CONNECTIVE,
    (RuleId.DISCOURSE_CONNECTIVE, RuleId.ANAPHORA): DiscourseType.DISCOURSE_CONNECTIVE_ANAPHORA,
    (RuleId.ANAPHORA,): DiscourseType.ANAPHORA,
    (RuleId.FORWARD_CONNECTIVE,): DiscourseType.FORWARD_CONNECTIVE,
    (RuleId.INNER_CONNECTIVE,): DiscourseType.INNER_CONNECTIVE,
    (RuleId.INNER_CONNECTIVE, RuleId.ANAPHORA): DiscourseType.INNER_CONNECTIVE_ANAPHORA,
    (RuleId.CATAPHORA,): DiscourseType.CATAPHORA,
    (RuleId.SENTENCE_COORDINATION,): DiscourseType.SENTENCE_COORDINATION,
    (RuleId.SENTENCE_COORDINATION, RuleId.ANAPHORA): DiscourseType.SENTENCE_COORDINATION_ANAPHORA,
    (RuleId.VP_COORDINATION,): DiscourseType.VP_COORDINATION,
    (RuleId.RELATIVE_CLAUSE,): DiscourseType.RELATIVE_CLAUSE,
    (RuleId.APPOSITION,): DiscourseType.APPOSITION,
}


def discourse_type_of(applied_rules: Sequence[RuleId]) -> DiscourseType:
    try:
        return _TYPE_BY_RULES[tuple(applied_rules)]
    except KeyError:
        raise ValueError("no discourse type for rule combination %r" % (applied_rules,))


@dataclass(frozen=True)
class EngineConfig:
    be_tense: str = "auto"          # "auto" or "matrix"
    min_content_tokens: int = 2     # per generated sentence


@dataclass(frozen=True)
class RuleMatch:
    """Anchors produced by a matcher; which fields are meaningful depends on
    the rule. All indices are 1-based positions in the matched sentence."""

    rule_id: RuleId
    connective: str = ""
    start: int = 0            # connective start (discourse/forward/inner)
    length: int = 0           # matched connective length in tokens
    clause_open: int = 0      # first comma (relative/apposition), split comma (forward)
    clause_close: int = 0     # second comma (relative/apposition)
    cc_index: int = 0         # coordination conjunction position
    conj_index: int = 0       # coordinated element position
    subject_index: int = 0    # subject position (sentence coordination)
    antecedent_left: int = 0  # leftmost token of the antecedent span


@dataclass(frozen=True)
class GenerationOutcome:
    """Two independent sentences decomposed from the original text.

    ``split_index`` is the 1-based boundary position in the source sentence
    for single-sentence decompositions (0 for sentence-pair sources); the
    anaphora combination step uses it to tell which mentions ended up on
    which side.
    """

    sentence_1: tuple[Token, ...]
    sentence_2: tuple[Token, ...]
    applied_rules: tuple[RuleId, ...]
    connective: str = ""
    coref_pronoun: bool = False
    coref_nominal: bool = False
    split_index: int = 0

    def __post_init__(self):
        for side in (self.sentence_1, self.sentence_2):
            if not side:
                raise AnnotationError("generated sentence must be non-empty")
            if side[-1].text not in SENTENCE_FINAL:
                raise AnnotationError(
                    "generated sentence must end with sentence-final punctuation: %r"
                    % " ".join(texts(side)))
            first = side[0].text[0]
            if first.isalpha() and first.islower():
                raise AnnotationError(
                    "generated sentence must start capitalized: %r" % " ".join(texts(side)))


def _sentence_wellformed(tokens: Sequence[Token]) -> bool:
    if not tokens or tokens[-1].text not in SENTENCE_FINAL:
        return False
    first = tokens[0].text[0]
    return not (first.isalpha() and first.islower())


def _matches_at(sentence: AnnotatedSentence, i: int, words: Sequence[str]) -> bool:
    """Token-sequence match at 1-based position ``i``; the comparison is
    case-insensitive only at sentence-initial position."""
    n = len(sentence)
    if i < 1 or i + len(words) - 1 > n:
        return False
    for j, w in enumerate(words):
        tok = sentence.tok(i + j).text
        if i + j == 1:
            if tok.lower() != w.lower():
                return False
        elif tok != w:
            return False
    return True


# --- discourse connective (sentence pair) ---------------------------------

def match_discourse_connective(
    a: AnnotatedSentence, b: AnnotatedSentence, lex: Lexicons
) -> RuleMatch | None:
    """Backward connective prefixing a suffix of ``b`` at offset 1..5;
    the longest entry at the smallest offset wins."""
    if a.is_fragment or b.is_fragment:
        return None
    for i in range(1, min(DISCOURSE_CONNECTIVE_WINDOW, len(b)) + 1):
        best_len = 0
        best_words: tuple[str, ...] = ()
        for entry in lex.backward:
            if _matches_at(b, i, entry):
                cand_len, cand_words = len(entry), entry
            elif (i == 1 and len(entry) >= 2 and entry[-1] == ","
                  and _matches_at(b, 1, entry[:-1])):
                # comma-suffixed entries also match comma-free at sentence start
                cand_len, cand_words = len(entry) - 1, entry[:-1]
            else:
                continue
            if cand_len > best_len:
                best_len, best_words = cand_len, cand_words
        if best_len:
            return RuleMatch(
                rule_id=RuleId.DISCOURSE_CONNECTIVE,
                connective=normalize_connective(best_words),
                start=i,
                length=best_len,
            )
    return None


def generate_discourse_connective(
    a: AnnotatedSentence,
    b: AnnotatedSentence,
    match: RuleMatch,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome | None:
    b2 = delete(b.tokens, match.start, match.length)
    # a comma left dangling where the connective was deleted goes with it
    if match.start <= len(b2) and b2[match.start - 1].text == ",":
        b2 = delete(b2, match.start, 1)
    if content_length(b2) < cfg.min_content_tokens:
        return None
    s1 = tuple(a.tokens)
    if not _sentence_wellformed(s1):
        return None
    return GenerationOutcome(
        sentence_1=s1,
        sentence_2=finalize_sentence(b2),
        applied_rules=(RuleId.DISCOURSE_CONNECTIVE,),
        connective=match.connective,
    )


# --- anaphora ---------------------------------------------------------------

@dataclass(frozen=True)
class AnaphoraContext:
    """Which original sentence (and which part of it) supplies antecedents
    and which receives replacements."""

    a_sentence: AnnotatedSentence
    a_index: int
    b_sentence: AnnotatedSentence
    b_index: int
    b_side_from: int = 1       # earliest token position counted as the second side
    a_side_to: int | None = None  # latest token position counted as the first side

    @classmethod
    def for_pair(cls, a, a_index, b, b_index) -> "AnaphoraContext":
        return cls(a, a_index, b, b_index)

    @classmethod
    def for_split(cls, z, z_index, split_index: int) -> "AnaphoraContext":
        return cls(z, z_index, z, z_index,
                   b_side_from=split_index, a_side_to=split_index - 1)


def _sided_mention_pairs(
    clusters: MentionClusterSet, ctx: AnaphoraContext
) -> list[tuple[Mention, list[Mention]]]:
    """Selected (second-side mention, antecedent candidates) pairs; second-side
    mentions are non-overlapping, longest-span-first."""
    b_spans = [
        (cid, m) for cid, m in clusters.mentions_in_sentence(ctx.b_index)
        if m.start >= ctx.b_side_from
    ]
    a_by_cluster: dict[int, list[Mention]] = {}
    for cid, m in clusters.mentions_in_sentence(ctx.a_index):
        if ctx.a_side_to is None or m.end <= ctx.a_side_to:
            a_by_cluster.setdefault(cid, []).append(m)
    candidates = [(cid, m) for cid, m in b_spans if a_by_cluster.get(cid)]
    candidates.sort(key=lambda cm: (-len(cm[1]), cm[1].start, cm[0]))
    selected: list[tuple[int, Mention]] = []
    for cid, m in candidates:
        if not any(m.overlaps(prev) for _, prev in selected):
            selected.append((cid, m))
    selected.sort(key=lambda cm: (cm[1].start, cm[1].end))
    return [(m, sorted(a_by_cluster[cid], key=lambda s: (s.start, s.end)))
            for cid, m in selected]


def _representative(candidates: Sequence[Mention]) -> Mention | None:
    """Longest name-kind span, else longest nominal; pronouns never serve as
    the replacement source."""
    for kind in ("name", "nominal"):
        best = None
        for m in candidates:
            if m.kind != kind:
                continue
            if best is None or (len(m), -m.start) > (len(best), -best.start):
                best = m
        if best is not None:
            return best
    return None


def _replace_texts(
    target: list[Token],
    y: Sequence[str],
    z: Sequence[Token],
    initial_case_tolerant: bool,
) -> list[Token]:
    """Replace every occurrence of the text sequence ``y`` left to right; with
    ``initial_case_tolerant`` the first token of a sentence-initial occurrence
    may differ in capitalization (finalization may have re-capitalized it)."""
    out: list[Token] = []
    idx, n, m = 0, len(target), len(y)
    while idx < n:
        window = target[idx: idx + m]
        if len(window) == m:
            hit = all(window[j].text == y[j] for j in range(m))
            if (not hit and initial_case_tolerant and idx == 0
                    and window[0].text.lower() == y[0].lower()
                    and all(window[j].text == y[j] for j in range(1, m))):
                hit = True
            if hit:
                out.extend(z)
                idx += m
                continue
        out.append(target[idx])
        idx += 1
    return out


def _apply_anaphora(
    target: Sequence[Token],
    clusters: MentionClusterSet,
    ctx: AnaphoraContext,
    initial_case_tolerant: bool,
) -> tuple[list[Token], bool, bool, bool]:
    """Returns (new tokens, changed, replaced-a-pronoun, replaced-a-nominal)."""
    result = list(target)
    changed = False
    saw_pronoun = saw_nominal = False
    for m_b, a_candidates in _sided_mention_pairs(clusters, ctx):
        rep = _representative(a_candidates)
        if rep is None:
            continue
        y = [t.text for t in ctx.b_sentence.tokens[m_b.start - 1: m_b.end]]
        z = list(ctx.a_sentence.tokens[rep.start - 1: rep.end])
        b_tok = ctx.b_sentence.tok(m_b.start)
        if len(y) == 1 and b_tok.pos == "PRP$":
            z.append(Token(text="'s", pos="POS"))
        new = _replace_texts(result, y, z, initial_case_tolerant)
        if texts(new) != texts(result):
            changed = True
            if m_b.kind == "pronoun":
                saw_pronoun = True
            elif m_b.kind == "nominal":
                saw_nominal = True
        result = new
    return result, changed, saw_pronoun, saw_nominal


def match_and_generate_anaphora(
    a: AnnotatedSentence,
    b: AnnotatedSentence,
    clusters: MentionClusterSet,
    *,
    a_index: int,
    b_index: int,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome | None:
    """Replace every mention in ``b`` that corefers with a mention in ``a`` by
    the antecedent text (possessive pronouns get the antecedent plus 's)."""
    if a.is_fragment or b.is_fragment:
        return None
    ctx = AnaphoraContext.for_pair(a, a_index, b, b_index)
    new_b, changed, saw_pron, saw_nom = _apply_anaphora(
        b.tokens, clusters, ctx, initial_case_tolerant=False)
    if not changed:
        return None
    s1 = tuple(a.tokens)
    if not _sentence_wellformed(s1):
        return None
    if content_length(new_b) < cfg.min_content_tokens:
        return None
    return GenerationOutcome(
        sentence_1=s1,
        sentence_2=finalize_sentence(new_b),
        applied_rules=(RuleId.ANAPHORA,),
        coref_pronoun=saw_pron,
        coref_nominal=saw_nom,
    )


def combine_with_anaphora(
    base: GenerationOutcome,
    clusters: MentionClusterSet,
    *,
    context: AnaphoraContext,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome:
    """Apply anaphora replacement to the second sentence of an existing
    decomposition; a no-op when the sides share no usable mention."""
    if base.applied_rules not in ((RuleId.DISCOURSE_CONNECTIVE,),
                                  (RuleId.INNER_CONNECTIVE,),
                                  (RuleId.SENTENCE_COORDINATION,)):
        raise ValueError(
            "anaphora combines only with discourse connective, inner connective "
            "or sentence coordination, got %r" % (base.applied_rules,))
    new_s2, changed, saw_pron, saw_nom = _apply_anaphora(
        base.sentence_2, clusters, context, initial_case_tolerant=True)
    if not changed:
        return base
    if content_length(new_s2) < cfg.min_content_tokens:
        return base
    return dc_replace(
        base,
        sentence_2=finalize_sentence(new_s2),
        applied_rules=base.applied_rules + (RuleId.ANAPHORA,),
        coref_pronoun=saw_pron,
        coref_nominal=saw_nom,
    )


# --- forward connective -----------------------------------------------------

def match_forward_connective(z: AnnotatedSentence, lex: Lexicons) -> RuleMatch | None:
    """Forward connective prefixing the sentence, with a comma later than the
    position right after it; the first such comma is the split point."""
    if z.is_fragment:
        return None
    n = len(z)
    for entry in sorted(lex.forward, key=len, reverse=True):
        length = len(entry)
        if length >= n or not _matches_at(z, 1, entry):
            continue
        if (entry in FORWARD_NO_COMMA and length + 1 <= n
                and z.tok(length + 1).text == ","):
            continue
        comma = next(
            (i for i in range(length + 2, n) if z.tok(i).text == ","), None)
        if comma is None:
            continue
        return RuleMatch(
            rule_id=RuleId.FORWARD_CONNECTIVE,
            connective=normalize_connective(entry),
            start=1,
            length=length,
            clause_open=comma,
        )
    return None


def _subject_span_after(z: AnnotatedSentence, boundary: int) -> tuple[int, int, int] | None:
    """Subject noun phrase immediately after ``boundary``: the dependency
    subtree of the first nsubj/nsubjpass token, which must start right after
    the boundary and be followed directly by a verb. Returns (lo, hi,
    verb position)."""
    n = len(z)
    for k in range(boundary + 1, n + 1):
        if z.tok(k).deprel not in SUBJECT_DEPRELS:
            continue
        lo, hi = z.subtree_range(k)
        lo = max(lo, boundary + 1)
        if lo != boundary + 1:
            return None
        if hi + 1 > n or z.tok(hi + 1).pos not in VERB_POS:
            return None
        return lo, hi, hi + 1
    return None


def _retensed_token(vbg: Token) -> Token | None:
    try:
        past = retense_vbg_to_past(vbg)
    except MorphologyError:
        return None
    return Token(text=past, pos="VBD", lemma=vbg.lemma or "")


def generate_forward_connective(
    z: AnnotatedSentence,
    match: RuleMatch,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome | None:
    a_side, b_side = split(z.tokens, match.clause_open)
    a_side = delete(a_side, 1, match.length)
    b_side = delete(b_side, 1, 1)
    if a_side and a_side[0].pos == "VBG":
        # the remainder is a participial fragment: give it the other side's
        # subject and move the verb to simple past
        sub = _subject_span_after(z, match.clause_open)
        past = _retensed_token(a_side[0])
        if sub is None or past is None:
            return None
        lo, hi, _ = sub
        a_side = tuple(z.tokens[lo - 1: hi]) + (past,) + a_side[1:]
    if (content_length(a_side) < cfg.min_content_tokens
            or content_length(b_side) < cfg.min_content_tokens):
        return None
    return GenerationOutcome(
        sentence_1=finalize_sentence(a_side),
        sentence_2=finalize_sentence(b_side),
        applied_rules=(RuleId.FORWARD_CONNECTIVE,),
        connective=match.connective,
        split_index=match.clause_open,
    )


# --- inner connective -------------------------------------------------------

def match_inner_connective(z: AnnotatedSentence, lex: Lexicons) -> RuleMatch | None:
    """Leftmost occurrence of any intra-sentence connective; the longest entry
    wins at a given position."""
    if z.is_fragment:
        return None
    entries = sorted(lex.intra, key=len, reverse=True)
    for p in range(1, len(z) + 1):
        for entry in entries:
            if _matches_at(z, p, entry):
                return RuleMatch(
                    rule_id=RuleId.INNER_CONNECTIVE,
                    connective=normalize_connective(entry),
                    start=p,
                    length=len(entry),
                )
    return None


def generate_inner_connective(
    z: AnnotatedSentence,
    match: RuleMatch,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome | None:
    if match.start < 2:
        return None
    a_side, b_side = split(z.tokens, match.start)
    b_side = trim(delete(b_side, 1, match.length))
    if (content_length(a_side) < cfg.min_content_tokens
            or content_length(b_side) < cfg.min_content_tokens):
        return None
    return GenerationOutcome(
        sentence_1=finalize_sentence(a_side),
        sentence_2=finalize_sentence(b_side),
        applied_rules=(RuleId.INNER_CONNECTIVE,),
        connective=match.connective,
        split_index=match.start,
    )


# --- cataphora --------------------------------------------------------------

def match_generate_cataphora(
    z: AnnotatedSentence, cfg: EngineConfig = EngineConfig()
) -> GenerationOutcome | None:
    """Fronted participial clause resolved against the subject that follows
    the comma: the subject span is copied to the front of the clause and the
    participle is re-tensed to simple past."""
    if z.is_fragment:
        return None
    first = z.tok(1)
    if first.pos != "VBG" or first.deprel != "vmod":
        return None
    n = len(z)
    for i in range(2, n):
        if z.tok(i).text != ",":
            continue
        sub = _subject_span_after(z, i)
        if sub is None:
            continue
        past = _retensed_token(first)
        if past is None:
            return None
        lo, hi, _ = sub
        subject = tuple(z.tokens[lo - 1: hi])
        a_side = subject + (past,) + tuple(z.tokens[1: i - 1])
        b_side = tuple(z.tokens[i:])
        if (content_length(a_side) < cfg.min_content_tokens
                or content_length(b_side) < cfg.min_content_tokens):
            return None
        return GenerationOutcome(
            sentence_1=finalize_sentence(a_side),
            sentence_2=finalize_sentence(b_side),
            applied_rules=(RuleId.CATAPHORA,),
            split_index=i,
        )
    return None


# --- coordination -----------------------------------------------------------

def _coordination_anchors(z: AnnotatedSentence):
    """(cc position, conj position) pairs with the conj within five tokens."""
    n = len(z)
    for i in range(2, n + 1):
        if z.tok(i).deprel != "cc":
            continue
        for j in range(i + 1, min(i + COORDINATION_WINDOW, n) + 1):
            if z.tok(j).deprel == "conj":
                yield i, j


def match_generate_sentence_coordination(
    z: AnnotatedSentence, cfg: EngineConfig = EngineConfig()
) -> GenerationOutcome | None:
    """Clausal coordination: the coordinated element follows its own subject
    marker between the conjunction and the conjunct."""
    if z.is_fragment:
        return None
    for i, j in _coordination_anchors(z):
        if not any(z.tok(k).deprel in SUBJECT_DEPRELS for k in range(i + 1, j)):
            continue
        a_side, b_side = split(z.tokens, i)
        b_side = delete(b_side, 1, 1)
        if (content_length(a_side) < cfg.min_content_tokens
                or content_length(b_side) < cfg.min_content_tokens):
            continue
        return GenerationOutcome(
            sentence_1=finalize_sentence(a_side),
            sentence_2=finalize_sentence(b_side),
            applied_rules=(RuleId.SENTENCE_COORDINATION,),
            connective=normalize_connective([z.tok(i).text]),
            split_index=i,
        )
    return None


def match_generate_vp_coordination(
    z: AnnotatedSentence, cfg: EngineConfig = EngineConfig()
) -> GenerationOutcome | None:
    """Predicate coordination: a verbal conjunct hanging off the root with no
    subject of its own between the conjunction and the verb; the shared
    subject (everything before the root verb) is copied to the second side."""
    if z.is_fragment:
        return None
    for i, j in _coordination_anchors(z):
        if z.tok(j).pos not in VERB_POS:
            continue
        # an intervening subject means the conjunct is a full clause
        if any(z.tok(k).deprel in SUBJECT_DEPRELS for k in range(i + 1, j)):
            continue
        k = z.tok(j).head
        if k == 0 or z.tok(k).deprel != "root":
            continue
        if not 2 <= k < i:
            continue
        a_side, b_side = split(z.tokens, i)
        b_side = prepend(delete(b_side, 1, 1), z.tokens[: k - 1])
        if (content_length(a_side) < cfg.min_content_tokens
                or content_length(b_side) < cfg.min_content_tokens):
            continue
        return GenerationOutcome(
            sentence_1=finalize_sentence(a_side),
            sentence_2=finalize_sentence(b_side),
            applied_rules=(RuleId.VP_COORDINATION,),
            connective=normalize_connective([z.tok(i).text]),
            split_index=i,
        )
    return None


# --- relative clause and apposition ----------------------------------------

def _comma_pair(z: AnnotatedSentence, i: int) -> int | None:
    """First comma after position i+1, strictly before the last token."""
    n = len(z)
    for j in range(i + 2, n):
        if z.tok(j).text == ",":
            return j
    return None


def _antecedent_span(z: AnnotatedSentence, i: int) -> tuple[Token, ...]:
    """Tokens from the leftmost node of the dependency subtree of the token
    before the comma up to that token."""
    r, _ = z.subtree_range(i - 1)
    r = min(r, i - 1)
    return tuple(z.tokens[r - 1: i - 1])


def match_generate_relative_clause(
    z: AnnotatedSentence, lex: Lexicons, cfg: EngineConfig = EngineConfig()
) -> GenerationOutcome | None:
    """Comma-bounded relative clause: the matrix clause keeps everything
    outside the commas; the clause becomes a sentence headed by the
    antecedent noun phrase."""
    if z.is_fragment:
        return None
    pronouns = {p.lower() for p in lex.relative_pronouns}
    n = len(z)
    for i in range(2, n):
        if z.tok(i).text != "," or i + 1 > n:
            continue
        rel = z.tok(i + 1).text.lower()
        if rel not in pronouns:
            continue
        j = _comma_pair(z, i)
        if j is None:
            continue
        if rel in NON_SUBJECT_RELATIVES:
            return None
        clause = z.tokens[i + 1: j - 1]
        if not any(t.pos in lex.verb_pos for t in clause):
            return None
        matrix = z.tokens[: i - 1] + z.tokens[j:]
        second = _antecedent_span(z, i) + clause
        if (content_length(matrix) < cfg.min_content_tokens
                or content_length(second) < cfg.min_content_tokens):
            return None
        return GenerationOutcome(
            sentence_1=finalize_sentence(matrix),
            sentence_2=finalize_sentence(second),
            applied_rules=(RuleId.RELATIVE_CLAUSE,),
        )
    return None


def match_generate_apposition(
    z: AnnotatedSentence, cfg: EngineConfig = EngineConfig()
) -> GenerationOutcome | None:
    """Comma-bounded appositive clause starting with a determiner or
    possessive and attached to a preceding token; the clause is promoted to a
    sentence with an inserted copula."""
    if z.is_fragment:
        return None
    n = len(z)
    for i in range(2, n):
        if z.tok(i).text != "," or i + 1 > n:
            continue
        if z.tok(i + 1).deprel not in ("det", "poss"):
            continue
        j = _comma_pair(z, i)
        if j is None:
            continue
        appos = next(
            (k for k in range(i + 1, j)
             if z.tok(k).deprel == "appos" and 1 <= z.tok(k).head < i),
            None)
        if appos is None:
            continue
        antecedent = _antecedent_span(z, i)
        clause = z.tokens[i: j - 1]
        matrix = z.tokens[: i - 1] + z.tokens[j:]
        try:
            be = select_be_verb(
                antecedent, matrix,
                clause_head_pos=z.tok(appos).pos,
                tense_policy=cfg.be_tense,
            )
        except MorphologyError:
            return None
        second = antecedent + (be,) + clause
        if (content_length(matrix) < cfg.min_content_tokens
                or content_length(second) < cfg.min_content_tokens):
            return None
        return GenerationOutcome(
            sentence_1=finalize_sentence(matrix),
            sentence_2=finalize_sentence(second),
            applied_rules=(RuleId.APPOSITION,),
        )
    return None


# --- top-level engine -------------------------------------------------------

def generate_from_single(
    z: AnnotatedSentence,
    z_index: int,
    clusters: MentionClusterSet,
    lex: Lexicons,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome | None:
    """Apply single-sentence rules in priority order (most specific structure
    first); inner-connective and sentence-coordination results are then
    combined with anaphora when mentions allow."""
    if z.is_fragment:
        return None

    def attempt(rule_id: RuleId) -> GenerationOutcome | None:
        if rule_id is RuleId.APPOSITION:
            return match_generate_apposition(z, cfg)
        if rule_id is RuleId.RELATIVE_CLAUSE:
            return match_generate_relative_clause(z, lex, cfg)
        if rule_id is RuleId.CATAPHORA:
            return match_generate_cataphora(z, cfg)
        if rule_id is RuleId.FORWARD_CONNECTIVE:
            m = match_forward_connective(z, lex)
            return generate_forward_connective(z, m, cfg) if m else None
        if rule_id is RuleId.INNER_CONNECTIVE:
            m = match_inner_connective(z, lex)
            return generate_inner_connective(z, m, cfg) if m else None
        if rule_id is RuleId.VP_COORDINATION:
            return match_generate_vp_coordination(z, cfg)
        if rule_id is RuleId.SENTENCE_COORDINATION:
            return match_generate_sentence_coordination(z, cfg)
        raise ValueError(rule_id)

    priority = (
        RuleId.APPOSITION,
        RuleId.RELATIVE_CLAUSE,
        RuleId.CATAPHORA,
        RuleId.FORWARD_CONNECTIVE,
        RuleId.INNER_CONNECTIVE,
        RuleId.VP_COORDINATION,
        RuleId.SENTENCE_COORDINATION,
    )
    for rule_id in priority:
        outcome = attempt(rule_id)
        if outcome is None:
            continue
        if rule_id in (RuleId.INNER_CONNECTIVE, RuleId.SENTENCE_COORDINATION):
            ctx = AnaphoraContext.for_split(z, z_index, outcome.split_index)
            outcome = combine_with_anaphora(outcome, clusters, context=ctx, cfg=cfg)
        return outcome
    return None


def generate_from_pair(
    a: AnnotatedSentence,
    a_index: int,
    b: AnnotatedSentence,
    b_index: int,
    clusters: MentionClusterSet,
    lex: Lexicons,
    cfg: EngineConfig = EngineConfig(),
) -> GenerationOutcome | None:
    """Apply pair rules: discourse connective first (combined with anaphora
    when both fire), plain anaphora otherwise."""
    if a.is_fragment or b.is_fragment:
        return None
    m = match_discourse_connective(a, b, lex)
    if m is not None:
        base = generate_discourse_connective(a, b, m, cfg)
        if base is not None:
            ctx = AnaphoraContext.for_pair(a, a_index, b, b_index)
            return combine_with_anaphora(base, clusters, context=ctx, cfg=cfg)
    return match_and_generate_anaphora(
        a, b, clusters, a_index=a_index, b_index=b_index, cfg=cfg)
