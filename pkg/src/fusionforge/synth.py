"""Deterministic synthetic corpora for pipeline experiments and tests.

Documents are assembled from templates with hand-built dependency parses, so
every discourse phenomenon the rules detect is represented, along with plain
sentences (negative-control fodder), short sentences and non-ASCII sentences
(filter fodder). Output records follow the JSON-lines input schema of the
pipeline.
"""
from __future__ import annotations

import json
import random
from typing import Iterator

NAMES = ("Alvarez", "Brennan", "Castillo", "Dumont", "Egan", "Farrell",
         "Gideon", "Halvorsen", "Ibsen", "Jansson", "Keller", "Lorenzo",
         "Novak", "Ortiz", "Petrov", "Quimby", "Rosario", "Santana", "Tanaka")
NOUNS = ("captain", "gallery", "referee", "stadium", "harbor", "trophy",
         "banner", "ledger", "turbine", "orchard", "village", "curator",
         "sculptor", "architect", "pavilion", "chorus", "garrison", "lantern")
NOUNS2 = ("parade", "bridge", "mural", "anthem", "podium", "archive",
          "vineyard", "workshop", "council", "theater", "monument",
          "terrace", "foundry", "almanac", "beacon", "quarry", "chapel")
EVENTS = ("ceremony", "rehearsal", "auction", "regatta", "banquet",
          "tournament", "premiere", "recital")
ADJECTIVES = ("veteran", "famous", "cheerful", "sturdy", "quiet", "narrow",
              "golden", "distant", "modest", "lively")
ADVERBS = ("quickly", "slowly", "carefully", "calmly", "bravely")
PLACES = ("Lisbon", "Tampere", "Geneva", "Oslo", "Dayton", "Calgary",
          "Valencia", "Bergen")
# (lemma, simple past, third singular)
VERBS = (("praise", "praised", "praises"), ("paint", "painted", "paints"),
         ("guard", "guarded", "guards"), ("repair", "repaired", "repairs"),
         ("cross", "crossed", "crosses"), ("clean", "cleaned", "cleans"),
         ("visit", "visited", "visits"), ("count", "counted", "counts"),
         ("watch", "watched", "watches"), ("follow", "followed", "follows"),
         ("escort", "escorted", "escorts"), ("measure", "measured", "measures"),
         ("sketch", "sketched", "sketches"), ("tour", "toured", "tours"),
         ("greet", "greeted", "greets"))
# (lemma, present participle)
PARTICIPLES = (("trail", "trailing"), ("lift", "lifting"), ("chase", "chasing"),
               ("guard", "guarding"), ("study", "studying"))
BACKWARD_STARTERS = ("However", "Moreover", "Furthermore", "Nevertheless",
                     "Therefore", "Consequently", "Accordingly", "Additionally")


def tk(text, pos, deprel, head, lemma=""):
    token = {"text": text, "pos": pos, "deprel": deprel, "head": head}
    if lemma:
        token["lemma"] = lemma
    return token


def _plain(rng) -> dict:
    adj = rng.choice(ADJECTIVES)
    noun = rng.choice(NOUNS)
    lemma, past, _ = rng.choice(VERBS)
    noun2 = rng.choice(NOUNS2)
    place = rng.choice(PLACES)
    return {"tokens": [
        tk("The", "DT", "det", 3), tk(adj, "JJ", "amod", 3),
        tk(noun, "NN", "nsubj", 4), tk(past, "VBD", "root", 0, lemma),
        tk("the", "DT", "det", 6), tk(noun2, "NN", "dobj", 4),
        tk("near", "IN", "prep", 4), tk("the", "DT", "det", 9),
        tk(place, "NNP", "pobj", 7), tk(".", ".", "punct", 4),
    ]}


def _discourse_b(rng) -> dict:
    conn = rng.choice(BACKWARD_STARTERS)
    adj = rng.choice(ADJECTIVES)
    noun = rng.choice(NOUNS)
    lemma, past, _ = rng.choice(VERBS)
    noun2 = rng.choice(NOUNS2)
    place = rng.choice(PLACES)
    return {"tokens": [
        tk(conn, "RB", "advmod", 6), tk(",", ",", "punct", 6),
        tk("the", "DT", "det", 5), tk(adj, "JJ", "amod", 5),
        tk(noun, "NN", "nsubj", 6), tk(past, "VBD", "root", 0, lemma),
        tk("the", "DT", "det", 8), tk(noun2, "NN", "dobj", 6),
        tk("at", "IN", "prep", 6), tk("the", "DT", "det", 11),
        tk(place, "NNP", "pobj", 9), tk(".", ".", "punct", 6),
    ]}


def _unit_pair_discourse(rng):
    return [_plain(rng), _discourse_b(rng)], []


def _unit_pair_plain(rng):
    return [_plain(rng), _plain(rng)], []


def _unit_pair_anaphora(rng):
    name = rng.choice(NAMES)
    lemma1, past1, _ = rng.choice(VERBS)
    lemma2, past2, _ = rng.choice(VERBS)
    noun = rng.choice(NOUNS)
    noun2 = rng.choice(NOUNS2)
    event1, event2 = rng.choice(EVENTS), rng.choice(EVENTS)
    a = {"tokens": [
        tk(name, "NNP", "nsubj", 2), tk(past1, "VBD", "root", 0, lemma1),
        tk("the", "DT", "det", 4), tk(noun, "NN", "dobj", 2),
        tk("before", "IN", "prep", 2), tk("the", "DT", "det", 7),
        tk(event1, "NN", "pobj", 5), tk(".", ".", "punct", 2),
    ]}
    if rng.random() < 0.5:
        b = {"tokens": [
            tk("He", "PRP", "nsubj", 2), tk(past2, "VBD", "root", 0, lemma2),
            tk("the", "DT", "det", 4), tk(noun2, "NN", "dobj", 2),
            tk("after", "IN", "prep", 2), tk("the", "DT", "det", 7),
            tk(event2, "NN", "pobj", 5), tk(".", ".", "punct", 2),
        ]}
    else:
        b = {"tokens": [
            tk("His", "PRP$", "poss", 2), tk(noun2, "NN", "nsubj", 3),
            tk(past2, "VBD", "root", 0, lemma2), tk("the", "DT", "det", 5),
            tk(rng.choice(NOUNS), "NN", "dobj", 3), tk("after", "IN", "prep", 3),
            tk("the", "DT", "det", 8), tk(event2, "NN", "pobj", 6),
            tk(".", ".", "punct", 3),
        ]}
    cluster = [{"sent": 0, "start": 1, "end": 1, "kind": "name"},
               {"sent": 1, "start": 1, "end": 1, "kind": "pronoun"}]
    return [a, b], [cluster]


def _unit_inner(rng):
    adj = rng.choice(ADJECTIVES)
    lemma1, past1, _ = rng.choice(VERBS)
    lemma2, past2, _ = rng.choice(VERBS)
    sentence = {"tokens": [
        tk("The", "DT", "det", 3), tk(adj, "JJ", "amod", 3),
        tk(rng.choice(NOUNS), "NN", "nsubj", 4), tk(past1, "VBD", "root", 0, lemma1),
        tk("the", "DT", "det", 6), tk(rng.choice(NOUNS2), "NN", "dobj", 4),
        tk("because", "IN", "mark", 10), tk("the", "DT", "det", 9),
        tk(rng.choice(NOUNS), "NN", "nsubj", 10), tk(past2, "VBD", "advcl", 4, lemma2),
        tk("the", "DT", "det", 12), tk(rng.choice(NOUNS2), "NN", "dobj", 10),
        tk(rng.choice(ADVERBS), "RB", "advmod", 10), tk(".", ".", "punct", 4),
    ]}
    return [sentence], []


def _unit_inner_anaphora(rng):
    name = rng.choice(NAMES)
    lemma1, past1, _ = rng.choice(VERBS)
    lemma2, past2, _ = rng.choice(VERBS)
    sentence = {"tokens": [
        tk(name, "NNP", "nsubj", 2), tk(past1, "VBD", "root", 0, lemma1),
        tk("the", "DT", "det", 5), tk(rng.choice(ADJECTIVES), "JJ", "amod", 5),
        tk(rng.choice(NOUNS), "NN", "dobj", 2), tk("gladly", "RB", "advmod", 2),
        tk("because", "IN", "mark", 10), tk("his", "PRP$", "poss", 9),
        tk(rng.choice(NOUNS2), "NN", "nsubj", 10), tk(past2, "VBD", "advcl", 2, lemma2),
        tk("the", "DT", "det", 12), tk(rng.choice(NOUNS2), "NN", "dobj", 10),
        tk("twice", "RB", "advmod", 10), tk(".", ".", "punct", 2),
    ]}
    cluster = [{"sent": 0, "start": 1, "end": 1, "kind": "name"},
               {"sent": 0, "start": 8, "end": 8, "kind": "pronoun"}]
    return [sentence], [cluster]


def _unit_sentence_coordination(rng):
    lemma1, past1, _ = rng.choice(VERBS)
    lemma2, past2, _ = rng.choice(VERBS)
    conj = rng.choice(("and", "but", "or", "so"))
    sentence = {"tokens": [
        tk("The", "DT", "det", 3), tk(rng.choice(ADJECTIVES), "JJ", "amod", 3),
        tk(rng.choice(NOUNS), "NN", "nsubj", 4), tk(past1, "VBD", "root", 0, lemma1),
        tk("the", "DT", "det", 6), tk(rng.choice(NOUNS2), "NN", "dobj", 4),
        tk(",", ",", "punct", 4), tk(conj, "CC", "cc", 4),
        tk("the", "DT", "det", 10), tk(rng.choice(NOUNS), "NN", "nsubj", 11),
        tk(past2, "VBD", "conj", 4, lemma2), tk("the", "DT", "det", 13),
        tk(rng.choice(NOUNS2), "NN", "dobj", 11),
        tk(rng.choice(ADVERBS), "RB", "advmod", 11), tk(".", ".", "punct", 4),
    ]}
    return [sentence], []


def _unit_vp_coordination(rng):
    lemma1, past1, _ = rng.choice(VERBS)
    lemma2, past2, _ = rng.choice(VERBS)
    conj = rng.choice(("but", "yet", "and"))
    sentence = {"tokens": [
        tk("The", "DT", "det", 3), tk(rng.choice(ADJECTIVES), "JJ", "amod", 3),
        tk(rng.choice(NOUNS), "NN", "nsubj", 4), tk(past1, "VBD", "root", 0, lemma1),
        tk("the", "DT", "det", 6), tk(rng.choice(NOUNS2), "NN", "dobj", 4),
        tk(",", ",", "punct", 4), tk(conj, "CC", "cc", 4),
        tk(past2, "VBD", "conj", 4, lemma2), tk("the", "DT", "det", 11),
        tk(rng.choice(NOUNS2), "NN", "dobj", 9),
        tk(rng.choice(ADVERBS), "RB", "advmod", 9), tk(".", ".", "punct", 4),
    ]}
    return [sentence], []


def _unit_apposition(rng):
    _, _, third = rng.choice(VERBS)
    sentence = {"tokens": [
        tk("The", "DT", "det", 3), tk(rng.choice(ADJECTIVES), "JJ", "amod", 3),
        tk(rng.choice(NOUNS), "NN", "nsubj", 9), tk(",", ",", "punct", 3),
        tk("a", "DT", "det", 7), tk(rng.choice(ADJECTIVES), "JJ", "amod", 7),
        tk(rng.choice(NOUNS2), "NN", "appos", 3), tk(",", ",", "punct", 3),
        tk(third, "VBZ", "root", 0), tk("the", "DT", "det", 11),
        tk(rng.choice(NOUNS2), "NN", "dobj", 9), tk("near", "IN", "prep", 9),
        tk("the", "DT", "det", 14), tk(rng.choice(PLACES), "NNP", "pobj", 12),
        tk(".", ".", "punct", 9),
    ]}
    return [sentence], []


def _unit_relative(rng):
    name = rng.choice(NAMES)
    lemma1, past1, _ = rng.choice(VERBS)
    _, _, third = rng.choice(VERBS)
    year = str(rng.randint(1950, 2015))
    sentence = {"tokens": [
        tk(name, "NNP", "nsubj", 10), tk(",", ",", "punct", 1),
        tk("who", "WP", "nsubj", 4), tk(past1, "VBD", "rcmod", 1, lemma1),
        tk("the", "DT", "det", 6), tk(rng.choice(NOUNS2), "NN", "dobj", 4),
        tk("in", "IN", "prep", 4), tk(year, "CD", "pobj", 7),
        tk(",", ",", "punct", 1), tk(third, "VBZ", "root", 0),
        tk("the", "DT", "det", 12), tk(rng.choice(NOUNS2), "NN", "dobj", 10),
        tk("with", "IN", "prep", 10), tk("care", "NN", "pobj", 13),
        tk(".", ".", "punct", 10),
    ]}
    return [sentence], []


def _unit_cataphora(rng):
    lemma_ing, ing = rng.choice(PARTICIPLES)
    lemma2, past2, _ = rng.choice(VERBS)
    sentence = {"tokens": [
        tk(ing.capitalize(), "VBG", "vmod", 10, lemma_ing),
        tk("the", "DT", "det", 3), tk(rng.choice(NOUNS2), "NN", "dobj", 1),
        tk("with", "IN", "prep", 1), tk("ease", "NN", "pobj", 4),
        tk(",", ",", "punct", 10), tk("the", "DT", "det", 9),
        tk(rng.choice(ADJECTIVES), "JJ", "amod", 9),
        tk(rng.choice(NOUNS), "NN", "nsubj", 10),
        tk(past2, "VBD", "root", 0, lemma2), tk("the", "DT", "det", 12),
        tk(rng.choice(NOUNS2), "NN", "dobj", 10), tk(".", ".", "punct", 10),
    ]}
    return [sentence], []


def _unit_forward(rng):
    lemma1, past1, _ = rng.choice(VERBS)
    lemma2, past2, _ = rng.choice(VERBS)
    sentence = {"tokens": [
        tk("Although", "IN", "mark", 5), tk("the", "DT", "det", 4),
        tk(rng.choice(ADJECTIVES), "JJ", "amod", 4),
        tk(rng.choice(NOUNS), "NN", "nsubj", 5),
        tk(past1, "VBD", "advcl", 11, lemma1), tk("the", "DT", "det", 7),
        tk(rng.choice(NOUNS2), "NN", "dobj", 5), tk(",", ",", "punct", 11),
        tk("the", "DT", "det", 10), tk(rng.choice(NOUNS), "NN", "nsubj", 11),
        tk(past2, "VBD", "root", 0, lemma2), tk("the", "DT", "det", 13),
        tk(rng.choice(NOUNS2), "NN", "dobj", 11),
        tk(rng.choice(ADVERBS), "RB", "advmod", 11), tk(".", ".", "punct", 11),
    ]}
    return [sentence], []


def _unit_short(rng):
    lemma, past, _ = rng.choice(VERBS)
    sentence = {"tokens": [
        tk("The", "DT", "det", 2), tk(rng.choice(NOUNS), "NN", "nsubj", 3),
        tk(past, "VBD", "root", 0, lemma), tk(rng.choice(ADVERBS), "RB", "advmod", 3),
        tk(".", ".", "punct", 3),
    ]}
    return [sentence], []


def _unit_non_ascii(rng):
    lemma, past, _ = rng.choice(VERBS)
    sentence = {"tokens": [
        tk("The", "DT", "det", 2), tk("café", "NN", "nsubj", 3),
        tk(past, "VBD", "root", 0, lemma), tk("the", "DT", "det", 5),
        tk(rng.choice(NOUNS2), "NN", "dobj", 3), tk("near", "IN", "prep", 3),
        tk("the", "DT", "det", 8), tk("river", "NN", "pobj", 6),
        tk(".", ".", "punct", 3),
    ]}
    return [sentence], []


UNIT_BUILDERS = (
    (_unit_pair_plain, 20),
    (_unit_pair_discourse, 10),
    (_unit_pair_anaphora, 10),
    (_unit_inner, 8),
    (_unit_inner_anaphora, 5),
    (_unit_sentence_coordination, 8),
    (_unit_vp_coordination, 8),
    (_unit_apposition, 8),
    (_unit_relative, 8),
    (_unit_cataphora, 5),
    (_unit_forward, 5),
    (_unit_short, 3),
    (_unit_non_ascii, 2),
)


def _pick_unit(rng):
    total = sum(w for _, w in UNIT_BUILDERS)
    roll = rng.random() * total
    acc = 0.0
    for builder, weight in UNIT_BUILDERS:
        acc += weight
        if roll < acc:
            return builder
    return UNIT_BUILDERS[-1][0]


def build_document(doc_index: int, rng: random.Random) -> dict:
    sentences: list[dict] = []
    clusters: list[list[dict]] = []
    for _ in range(rng.randint(1, 2)):
        builder = _pick_unit(rng)
        unit_sentences, unit_clusters = builder(rng)
        offset = len(sentences)
        for cluster in unit_clusters:
            clusters.append([
                {**m, "sent": m["sent"] + offset} for m in cluster
            ])
        sentences.extend(unit_sentences)
    doc = {"doc_id": "synth-%06d" % doc_index, "sentences": sentences}
    if clusters:
        doc["clusters"] = clusters
    return doc


def build_corpus(n_docs: int, seed: int = 0) -> Iterator[dict]:
    rng = random.Random(seed)
    for i in range(n_docs):
        yield build_document(i, rng)


def write_corpus(path, n_docs: int, seed: int = 0) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for doc in build_corpus(n_docs, seed):
            fh.write(json.dumps(doc, ensure_ascii=False) + "\n")
            count += 1
    return count
