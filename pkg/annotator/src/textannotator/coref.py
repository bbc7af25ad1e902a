"""Heuristic mention clustering: repeated proper-noun tokens corefer, and
third-person personal pronouns link to the most recent name. Good enough to
exercise anaphora handling downstream; deterministic by construction."""
from __future__ import annotations

PERSON_PRONOUNS = {"he", "she", "him", "his", "her"}

# proper nouns that are never antecedents for a person pronoun
TIME_NAMES = {"monday", "tuesday", "wednesday", "thursday", "friday",
              "saturday", "sunday", "january", "february", "march", "april",
              "may", "june", "july", "august", "september", "october",
              "november", "december"}


def cluster_mentions(sentences: list[list[dict]]) -> list[list[dict]]:
    clusters: dict[str, list[dict]] = {}
    order: list[str] = []
    last_name: str | None = None

    for sent_idx, tokens in enumerate(sentences):
        for pos, token in enumerate(tokens, start=1):
            text, tag = token["text"], token["pos"]
            if tag in ("NNP", "NNPS") and text.lower() not in TIME_NAMES:
                key = text.lower()
                if key not in clusters:
                    clusters[key] = []
                    order.append(key)
                clusters[key].append(
                    {"sent": sent_idx, "start": pos, "end": pos, "kind": "name"})
                last_name = key
            elif tag in ("PRP", "PRP$") and text.lower() in PERSON_PRONOUNS:
                if last_name is not None:
                    clusters[last_name].append(
                        {"sent": sent_idx, "start": pos, "end": pos,
                         "kind": "pronoun"})

    return [clusters[key] for key in order if len(clusters[key]) > 1]
