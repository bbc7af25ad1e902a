"""Evaluation: a modified SARI over kept/added/deleted n-grams, exact match,
and alignment-based analysis of connective and pronoun choices.

The SARI variant here differs from the classic formulation in two ways: any
0/0 precision or recall ratio counts as 1 (so a perfect output scores exactly
100), and all three n-gram categories are scored with F1 so that copying the
input wholesale is penalized on the delete side.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import FusionExample, Lexicons, normalize_connective, texts

MAX_NGRAM = 4

OTHER_LABEL = "<other>"

PRONOUN_WORDS = frozenset({
    "i", "me", "my", "mine", "you", "your", "yours",
    "he", "him", "his", "she", "her", "hers", "it", "its",
    "we", "us", "our", "ours", "they", "them", "their", "theirs",
})


@dataclass(frozen=True)
class SariBreakdown:
    """Per-n F1 for kept, added and deleted n-grams plus the aggregate score
    (100 times the mean over n of the mean of the three F1s)."""

    f1_keep: tuple[float, ...]
    f1_add: tuple[float, ...]
    f1_delete: tuple[float, ...]
    sari: float


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i: i + n]) for i in range(len(tokens) - n + 1))


def _ratio(numerator: int, denominator: int) -> float:
    if denominator == 0:
        return 1.0
    return numerator / denominator


def _f1(p: float, r: float) -> float:
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


def sari(
    input_tokens: Sequence[str],
    output_tokens: Sequence[str],
    reference_tokens: Sequence[str],
) -> SariBreakdown:
    """Score an output against both the input it rewrites and the single
    reference, over 1- to 4-grams of case-sensitive tokens."""
    if not input_tokens or not output_tokens or not reference_tokens:
        raise ValueError("sari requires non-empty input, output and reference")
    keeps, adds, deletes = [], [], []
    for n in range(1, MAX_NGRAM + 1):
        inp = _ngrams(input_tokens, n)
        out = _ngrams(output_tokens, n)
        ref = _ngrams(reference_tokens, n)

        keep_cand = inp & out
        keep_gold = inp & ref
        keep_hit = keep_cand & keep_gold
        keeps.append(_f1(_ratio(sum(keep_hit.values()), sum(keep_cand.values())),
                         _ratio(sum(keep_hit.values()), sum(keep_gold.values()))))

        add_cand = out - inp
        add_gold = ref - inp
        add_hit = add_cand & add_gold
        adds.append(_f1(_ratio(sum(add_hit.values()), sum(add_cand.values())),
                        _ratio(sum(add_hit.values()), sum(add_gold.values()))))

        del_cand = inp - out
        del_gold = inp - ref
        del_hit = del_cand & del_gold
        deletes.append(_f1(_ratio(sum(del_hit.values()), sum(del_cand.values())),
                           _ratio(sum(del_hit.values()), sum(del_gold.values()))))

    aggregate = 100.0 * sum(
        (k + a + d) / 3.0 for k, a, d in zip(keeps, adds, deletes)) / MAX_NGRAM
    return SariBreakdown(
        f1_keep=tuple(keeps), f1_add=tuple(adds), f1_delete=tuple(deletes),
        sari=aggregate)


def exact_match(
    output_tokens: Sequence[str],
    reference_tokens: Sequence[str],
    case_sensitive: bool = True,
) -> bool:
    out = [t.strip() for t in output_tokens]
    ref = [t.strip() for t in reference_tokens]
    if not case_sensitive:
        out = [t.lower() for t in out]
        ref = [t.lower() for t in ref]
    return out == ref


@dataclass(frozen=True)
class TokenAlignment:
    """Minimum-edit-distance alignment of an output sequence to a gold
    sequence. ``gold_to_output[j]`` is the 0-based output position aligned to
    gold position ``j`` (via a match or substitution), or None for a gap."""

    distance: int
    gold_to_output: tuple[int | None, ...]


def align_tokens(
    output_tokens: Sequence[str], gold_tokens: Sequence[str]
) -> TokenAlignment:
    """Unit-cost alignment; ties prefer match, then substitution, then a gold
    gap (deletion), then an output insertion."""
    n_out, n_gold = len(output_tokens), len(gold_tokens)
    dist = [[0] * (n_gold + 1) for _ in range(n_out + 1)]
    for i in range(n_out + 1):
        dist[i][0] = i
    for j in range(n_gold + 1):
        dist[0][j] = j
    for i in range(1, n_out + 1):
        row, prev = dist[i], dist[i - 1]
        for j in range(1, n_gold + 1):
            sub = prev[j - 1] + (output_tokens[i - 1] != gold_tokens[j - 1])
            row[j] = min(sub, prev[j] + 1, row[j - 1] + 1)

    gold_to_output: list[int | None] = [None] * n_gold
    i, j = n_out, n_gold
    while i > 0 or j > 0:
        if i > 0 and j > 0 and output_tokens[i - 1] == gold_tokens[j - 1] \
                and dist[i][j] == dist[i - 1][j - 1]:
            gold_to_output[j - 1] = i - 1
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and dist[i][j] == dist[i - 1][j - 1] + 1:
            gold_to_output[j - 1] = i - 1
            i, j = i - 1, j - 1
        elif j > 0 and dist[i][j] == dist[i][j - 1] + 1:
            j -= 1
        else:
            i -= 1
    return TokenAlignment(distance=dist[n_out][n_gold],
                          gold_to_output=tuple(gold_to_output))


@dataclass
class AlignmentReport:
    """Per-connective prediction accuracy with the most frequent fillers, and
    a row-normalized gold-versus-predicted pronoun confusion matrix."""

    connective_table: dict = field(default_factory=dict)
    pronoun_confusion: dict = field(default_factory=dict)
    skipped: int = 0

    def to_json(self) -> dict:
        return {
            "connective_table": self.connective_table,
            "pronoun_confusion": self.pronoun_confusion,
            "skipped": self.skipped,
        }


def _find_connective_span(gold: Sequence[str], connective: str) -> tuple[int, int] | None:
    words = connective.split()
    if not words:
        return None
    lowered = [g.lower() for g in gold]
    for start in range(len(gold) - len(words) + 1):
        if lowered[start: start + len(words)] == words:
            return start, start + len(words) - 1
    return None


def _aligned_span_text(
    alignment: TokenAlignment, output: Sequence[str], lo: int, hi: int
) -> str:
    positions = [p for p in alignment.gold_to_output[lo: hi + 1] if p is not None]
    if not positions:
        return ""
    return " ".join(output[min(positions): max(positions) + 1])


def _is_pronoun_position(token) -> bool:
    if token.pos:
        return token.pos in ("PRP", "PRP$")
    return token.text.lower() in PRONOUN_WORDS


def analyze(
    pairs: Iterable[tuple[FusionExample, Sequence[str]]],
    lexicons: Lexicons,
) -> AlignmentReport:
    """Align each predicted fusion to its gold text, then read off what the
    prediction put at the gold connective span and at every gold pronoun
    position. Non-connective (or missing) fillers and non-pronoun outputs are
    counted under the <other> label."""
    known_connectives = lexicons.all_connective_strings()
    conn_total: Counter = Counter()
    conn_correct: Counter = Counter()
    conn_fillers: dict[str, Counter] = {}
    pron_counts: dict[str, Counter] = {}
    skipped = 0

    for example, predicted in pairs:
        gold_tokens = list(example.coherent_first) + list(example.coherent_second)
        gold_texts = texts(gold_tokens)
        predicted = list(predicted)
        alignment = align_tokens(predicted, gold_texts)

        if example.connective:
            span = _find_connective_span(gold_texts, example.connective)
            if span is None:
                skipped += 1
            else:
                lo, hi = span
                filler = normalize_connective(
                    _aligned_span_text(alignment, predicted, lo, hi).split())
                label = filler if filler in known_connectives else OTHER_LABEL
                conn_total[example.connective] += 1
                if label == example.connective:
                    conn_correct[example.connective] += 1
                conn_fillers.setdefault(example.connective, Counter())[label] += 1

        for j, tok in enumerate(gold_tokens):
            if not _is_pronoun_position(tok):
                continue
            row = tok.text.lower()
            out_pos = alignment.gold_to_output[j]
            if out_pos is None:
                label = OTHER_LABEL
            else:
                out_word = predicted[out_pos].lower()
                label = out_word if out_word in PRONOUN_WORDS else OTHER_LABEL
            pron_counts.setdefault(row, Counter())[label] += 1

    connective_table = {}
    for conn in sorted(conn_total, key=lambda c: (-conn_total[c], c)):
        fillers = conn_fillers[conn]
        top = sorted(fillers.items(), key=lambda kv: (-kv[1], kv[0]))[:3]
        connective_table[conn] = {
            "count": conn_total[conn],
            "accuracy": conn_correct[conn] / conn_total[conn],
            "top_fillers": [{"label": label, "count": count} for label, count in top],
        }

    pronoun_confusion = {}
    for row in sorted(pron_counts):
        counts = pron_counts[row]
        total = sum(counts.values())
        pronoun_confusion[row] = {
            label: counts[label] / total for label in sorted(counts)
        }

    return AlignmentReport(
        connective_table=connective_table,
        pronoun_confusion=pronoun_confusion,
        skipped=skipped,
    )
