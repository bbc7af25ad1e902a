"""Token-list edit operations: the only mutation vocabulary the rule
generators are allowed to use.

All operations are pure: they take token sequences and return new tuples,
never touching the inputs. Indices are 1-based. Dependency annotations on
tokens in an edited list are positionally stale; detection logic must only
read annotations from the original, unedited sentence.
"""
from __future__ import annotations

from typing import Sequence

from .core import Token

TRIM_PUNCTUATION = frozenset({".", ",", ";", ":", "!", "?"})
SENTENCE_FINAL = frozenset({".", "!", "?"})


class EditBoundsError(IndexError):
    """An edit was requested outside the bounds of the token list."""


TokenList = tuple[Token, ...]


def delete(x: Sequence[Token], i: int, n: int) -> TokenList:
    """Remove the ``n`` tokens starting at position ``i``."""
    if n < 0:
        raise EditBoundsError("deletion count must be >= 0, got %d" % n)
    if i < 1 or i + n - 1 > len(x):
        raise EditBoundsError(
            "delete(%d, %d) out of range for length %d" % (i, n, len(x)))
    return tuple(x[: i - 1]) + tuple(x[i - 1 + n:])


def prepend(x: Sequence[Token], y: Sequence[Token]) -> TokenList:
    """Attach ``y`` at the beginning of ``x``."""
    return tuple(y) + tuple(x)


def replace(x: Sequence[Token], y: Sequence[str], z: Sequence[Token]) -> TokenList:
    """Replace every occurrence of the text sequence ``y`` with the tokens
    ``z``, scanning left to right without overlap."""
    if not y:
        raise EditBoundsError("replace target must contain at least one token")
    y = list(y)
    out: list[Token] = []
    idx = 0
    n = len(x)
    m = len(y)
    while idx < n:
        if idx + m <= n and all(x[idx + j].text == y[j] for j in range(m)):
            out.extend(z)
            idx += m
        else:
            out.append(x[idx])
            idx += 1
    return tuple(out)


def split(x: Sequence[Token], i: int) -> tuple[TokenList, TokenList]:
    """Split into (tokens before position ``i``, tokens from ``i`` on)."""
    if not 1 < i <= len(x):
        raise EditBoundsError("split index %d out of range 2..%d" % (i, len(x)))
    return tuple(x[: i - 1]), tuple(x[i - 1:])


def trim(x: Sequence[Token]) -> TokenList:
    """Drop everything after the first punctuation token (which is kept).
    No punctuation means no change."""
    for idx, tok in enumerate(x):
        if tok.text in TRIM_PUNCTUATION:
            return tuple(x[: idx + 1])
    return tuple(x)


def _capitalize(tok: Token) -> Token:
    text = tok.text
    if text and text[0].isalpha() and not text[0].isupper():
        return Token(text=text[0].upper() + text[1:], pos=tok.pos,
                     deprel=tok.deprel, head=tok.head, lemma=tok.lemma)
    return tok


def finalize_sentence(x: Sequence[Token]) -> TokenList:
    """Surface cleanup applied once per generated sentence: strip dangling
    leading commas, rewrite a trailing comma/semicolon to a period, ensure a
    sentence-final punctuation token, and capitalize the first alphabetic
    token."""
    toks = list(x)
    while toks and toks[0].text == ",":
        toks.pop(0)
    if toks and toks[-1].text in {",", ";"}:
        toks[-1] = Token(text=".", pos=".")
    if not toks or toks[-1].text not in SENTENCE_FINAL:
        toks.append(Token(text=".", pos="."))
    for idx, tok in enumerate(toks):
        if tok.text[0].isalpha():
            toks[idx] = _capitalize(tok)
            break
    return tuple(toks)


def content_length(x: Sequence[Token]) -> int:
    """Number of tokens that are not pure punctuation."""
    return sum(1 for t in x if any(c.isalnum() for c in t.text))
