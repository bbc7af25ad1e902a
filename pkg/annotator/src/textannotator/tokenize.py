"""Sentence segmentation and word tokenization for the built-in backend."""
from __future__ import annotations

import re

_SENT_BOUNDARY = re.compile(r"(?<=[.!?])\s+(?=[A-Z\"'0-9])")

_CONTRACTION = re.compile(r"n't\b", re.IGNORECASE)
_CLITIC = re.compile(r"'(s|re|ve|ll|d|m)\b", re.IGNORECASE)
_BARE_APOSTROPHE = re.compile(r"(?<=s)'(?=\s|$)")
_PUNCT = re.compile(r"([,;:!?()\[\]{}\"])")
_FINAL_PERIOD = re.compile(r"\.(?=\s|$)")


def split_sentences(text: str) -> list[str]:
    parts = [p.strip() for p in _SENT_BOUNDARY.split(text.strip())]
    return [p for p in parts if p]


def tokenize(sentence: str) -> list[str]:
    text = _PUNCT.sub(r" \1 ", sentence)
    text = _FINAL_PERIOD.sub(" .", text)
    text = _CONTRACTION.sub(" n't", text)
    text = _CLITIC.sub(r" '\1", text)
    text = _BARE_APOSTROPHE.sub(" '", text)
    return text.split()
