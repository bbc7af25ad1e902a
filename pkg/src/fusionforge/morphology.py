"""Small morphological repairs needed while decomposing sentences: turning a
present-participle verb into simple past, and picking the right ``be`` form
when an appositive clause is promoted to a sentence of its own.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import Sequence

from .core import Token

VOWELS = "aeiou"

PAST_POS = frozenset({"VBD", "VBN"})
PRESENT_POS = frozenset({"VBZ", "VBP", "MD"})
PLURAL_NOUN_POS = frozenset({"NNS", "NNPS"})
BARE_NOMINAL_POS = frozenset({"NN", "NNS"})

BE_FORMS = {
    ("singular", "present"): "is",
    ("plural", "present"): "are",
    ("singular", "past"): "was",
    ("plural", "past"): "were",
}


class MorphologyError(ValueError):
    """Raised when a required morphological repair cannot be made."""


@lru_cache(maxsize=1)
def irregular_past_table() -> dict[str, str]:
    """lemma -> simple past, from the shipped two-column data file."""
    text = resources.files("fusionforge").joinpath("data/irregular_verbs.tsv").read_text("utf-8")
    table: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MorphologyError(
                "irregular_verbs.tsv:%d: expected two tab-separated columns" % lineno)
        table[parts[0]] = parts[1]
    return table


def _past_from_lemma(lemma: str) -> str:
    table = irregular_past_table()
    if lemma in table:
        return table[lemma]
    if lemma.endswith("e"):
        return lemma + "d"
    if len(lemma) >= 2 and lemma.endswith("y") and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ied"
    # one-syllable consonant-vowel-consonant stems double the final consonant;
    # stress-final polysyllables live in the exception table
    if (len(lemma) >= 3
            and lemma[-1] not in VOWELS and lemma[-1] not in "wxy"
            and lemma[-2] in VOWELS
            and lemma[-3] not in VOWELS
            and sum(1 for i, c in enumerate(lemma)
                    if c in VOWELS and (i == 0 or lemma[i - 1] not in VOWELS)) == 1):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def _lemma_from_ing(surface: str) -> str:
    stem = surface[:-3]
    table = irregular_past_table()
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS:
        undoubled = stem[:-1]
        if undoubled in table:
            return undoubled
    if stem in table:
        return stem
    return stem


def retense_vbg_to_past(verb: Token) -> str:
    """Simple-past surface form for a present-participle token.

    Uses the token's lemma when available, otherwise derives a stem from the
    ``-ing`` surface form. The result is lowercase.
    """
    if verb.pos != "VBG":
        raise MorphologyError("retense requires POS VBG, got %r" % verb.pos)
    lemma = verb.lemma.lower()
    if lemma:
        return _past_from_lemma(lemma)
    surface = verb.text.lower()
    if not surface.endswith("ing") or len(surface) <= 3:
        raise MorphologyError("cannot re-tense %r: no lemma and no -ing suffix" % verb.text)
    stem = _lemma_from_ing(surface)
    table = irregular_past_table()
    if stem in table:
        return table[stem]
    # a stripped -ing stem never ends with "e", so adding "ed" also covers
    # e-drop verbs (stat+ed -> stated, hop+ed -> hoped)
    if len(stem) >= 2 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "ied"
    return stem + "ed"


def select_be_verb(
    subject_span: Sequence[Token],
    matrix_clause: Sequence[Token],
    *,
    clause_head_pos: str = "",
    tense_policy: str = "auto",
) -> Token:
    """Choose among is/are/was/were for an inserted copula.

    Number follows the subject head (the last token of the span): NNS/NNPS is
    plural. Tense follows the first finite verb of the matrix clause, except
    that under the default ``auto`` policy a past-tense matrix with a bare
    common-noun clause head states a timeless property and takes the present.
    ``tense_policy="matrix"`` always copies the matrix tense.
    """
    if tense_policy not in ("auto", "matrix"):
        raise MorphologyError("unknown tense policy %r" % tense_policy)
    if not subject_span:
        raise MorphologyError("empty subject span")
    number = "plural" if subject_span[-1].pos in PLURAL_NOUN_POS else "singular"
    tense = ""
    for tok in matrix_clause:
        if tok.pos in PAST_POS:
            tense = "past"
            break
        if tok.pos in PRESENT_POS:
            tense = "present"
            break
    if not tense:
        raise MorphologyError("matrix clause contains no finite verb")
    if tense_policy == "auto" and tense == "past" and clause_head_pos in BARE_NOMINAL_POS:
        tense = "present"
    form = BE_FORMS[(number, tense)]
    pos = {"is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD"}[form]
    return Token(text=form, pos=pos, lemma="be")
