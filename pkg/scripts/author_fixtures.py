#!/usr/bin/env python3
"""Author the hand-crafted annotation fixtures and serialize them to
tests/data/.

Each token is written as ``text|POS|deprel|head`` with an optional ``|lemma``
field (head 0 marks the root). Run from the repository root:

    python3 scripts/author_fixtures.py
"""
from __future__ import annotations

import json
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"


def tok(spec: str) -> dict:
    parts = spec.split("|")
    if len(parts) not in (4, 5):
        raise ValueError("bad token spec %r" % spec)
    entry = {
        "text": parts[0],
        "pos": parts[1],
        "deprel": parts[2],
        "head": int(parts[3]),
    }
    if len(parts) == 5:
        entry["lemma"] = parts[4]
    return entry


def sent(*specs: str) -> dict:
    return {"tokens": [tok(s) for s in specs]}


def mention(sent_idx: int, start: int, end: int, kind: str) -> dict:
    return {"sent": sent_idx, "start": start, "end": end, "kind": kind}


def doc(doc_id: str, sentences: list[dict], clusters: list[list[dict]] | None = None) -> dict:
    out = {"doc_id": doc_id, "sentences": sentences}
    if clusters:
        out["clusters"] = clusters
    return out


GOLDEN_DOCS: list[dict] = []
GOLDEN_EXPECTED: dict[str, dict] = {}
NEGATIVE_DOCS: list[dict] = []
NEGATIVE_EXPECTED: dict[str, dict] = {}


def golden(doc_id, sentences, expected, clusters=None):
    GOLDEN_DOCS.append(doc(doc_id, sentences, clusters))
    GOLDEN_EXPECTED[doc_id] = expected


def negative(doc_id, sentences, rule, candidate, clusters=None):
    NEGATIVE_DOCS.append(doc(doc_id, sentences, clusters))
    NEGATIVE_EXPECTED[doc_id] = {"rule": rule, "candidate": candidate}


# --- golden: one document per worked example --------------------------------

golden(
    "golden:discourse_connective",
    [
        sent("Hebden|NNP|nn|2", "Bridge|NNP|nsubj|6", "is|VBZ|cop|6|be",
             "a|DT|det|6", "popular|JJ|amod|6", "place|NN|root|0",
             "to|TO|aux|8", "live|VB|vmod|6|live", ".|.|punct|6"),
        sent("However|RB|advmod|5", ",|,|punct|5", "space|NN|nsubjpass|5",
             "is|VBZ|auxpass|5|be", "limited|VBN|root|0|limit",
             "due|JJ|prep|5", "to|TO|mwe|6", "the|DT|det|10",
             "steep|JJ|amod|10", "valleys|NNS|pobj|6", "and|CC|cc|10",
             "lack|NN|conj|10", "of|IN|prep|12", "flat|JJ|amod|15",
             "land|NN|pobj|13", ".|.|punct|5"),
    ],
    {
        "candidate": [0, 1],
        "type": "Discourse connective",
        "connective": "however",
        "sentence_1": "Hebden Bridge is a popular place to live .",
        "sentence_2": "Space is limited due to the steep valleys and lack of flat land .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:anaphora",
    [
        sent("Rider|NNP|nsubj|2", "entered|VBD|root|0|enter", "the|DT|det|4",
             "weekend|NN|dobj|2", "averaging|VBG|vmod|2|average",
             "23.0|CD|num|7", "points|NNS|dobj|5", ",|,|punct|2",
             "good|JJ|amod|7", "for|IN|prep|9", "10th|JJ|pobj|10",
             "in|IN|prep|9", "the|DT|det|14", "league|NN|pobj|12",
             ".|.|punct|2"),
        sent("He|PRP|nsubj|2", "said|VBD|root|0|say", "those|DT|det|4",
             "numbers|NNS|nsubj|5", "mean|VBP|ccomp|2|mean",
             "little|JJ|dobj|5", "because|IN|prep|5", "of|IN|pcomp|7",
             "the|DT|det|15", "Hawks|NNPS|poss|15", "'|POS|possessive|10",
             "11|CD|num|15", "-|:|punct|12", "18|CD|num|15",
             "record|NN|pobj|8", ".|.|punct|2"),
    ],
    {
        "candidate": [0, 1],
        "type": "Anaphora",
        "connective": "",
        "sentence_1": "Rider entered the weekend averaging 23.0 points , "
                      "good for 10th in the league .",
        "sentence_2": "Rider said those numbers mean little because of the "
                      "Hawks ' 11 - 18 record .",
        "coref_pronoun": True,
        "coref_nominal": False,
    },
    clusters=[[mention(0, 1, 1, "name"), mention(1, 1, 1, "pronoun")]],
)

golden(
    "golden:forward_connective",
    [
        sent("Although|IN|mark|5", "the|DT|det|3", "friendship|NN|nsubj|5",
             "somewhat|RB|advmod|5", "healed|VBD|advcl|10|heal",
             "years|NNS|npadvmod|7", "later|RB|advmod|5", ",|,|punct|10",
             "it|PRP|nsubj|10", "was|VBD|root|0|be", "a|DT|det|13",
             "devastating|JJ|amod|13", "loss|NN|attr|10", "to|TO|prep|13",
             "Croly|NNP|pobj|14", ".|.|punct|10"),
    ],
    {
        "candidate": [0, 0],
        "type": "Forward connective",
        "connective": "although",
        "sentence_1": "The friendship somewhat healed years later .",
        "sentence_2": "It was a devastating loss to Croly .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:inner_connective",
    [
        sent("Open|JJ|amod|2", "workouts|NNS|nsubjpass|4", "are|VBP|auxpass|4|be",
             "held|VBN|root|0|hold", "every|DT|det|6", "Sunday|NNP|npadvmod|4",
             "unless|IN|mark|11", "the|DT|det|9", "gym|NN|nsubjpass|11",
             "is|VBZ|auxpass|11|be", "closed|VBN|advcl|4|close",
             "for|IN|prep|11", "a|DT|det|14", "holiday|NN|pobj|12",
             "or|CC|cc|14", "other|JJ|amod|18", "special|JJ|amod|18",
             "events|NNS|conj|14", ".|.|punct|4"),
    ],
    {
        "candidate": [0, 0],
        "type": "Inner connective",
        "connective": "unless",
        "sentence_1": "Open workouts are held every Sunday .",
        "sentence_2": "The gym is closed for a holiday or other special events .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:cataphora",
    [
        sent("Stating|VBG|vmod|14|state", "that|IN|mark|6", "the|DT|det|4",
             "proponents|NNS|nsubj|6", "were|VBD|cop|6|be",
             "unlikely|JJ|ccomp|1", "to|TO|aux|8", "succeed|VB|xcomp|6|succeed",
             "in|IN|prep|8", "this|DT|det|11", "appeal|NN|pobj|9",
             ",|,|punct|14", "Walker|NNP|nsubj|14", "rejected|VBD|root|0|reject",
             "the|DT|det|17", "stay|NN|nn|17", "request|NN|dobj|14",
             "on|IN|prep|14", "October|NNP|pobj|18", "23|CD|num|19",
             ".|.|punct|14"),
    ],
    {
        "candidate": [0, 0],
        "type": "Cataphora",
        "connective": "",
        "sentence_1": "Walker stated that the proponents were unlikely to "
                      "succeed in this appeal .",
        "sentence_2": "Walker rejected the stay request on October 23 .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:sentence_coordination",
    [
        sent("The|DT|det|2", "time|NN|nsubj|7", "of|IN|prep|2", "the|DT|det|6",
             "autumn|NN|nn|6", "floods|NNS|pobj|3", "came|VBD|root|0|come",
             ",|,|punct|7", "and|CC|cc|7", "the|DT|det|12", "hundred|CD|num|12",
             "streams|NNS|nsubj|13", "poured|VBD|conj|7|pour", "into|IN|prep|13",
             "the|DT|det|17", "Yellow|NNP|nn|17", "River|NNP|pobj|14",
             ".|.|punct|7"),
    ],
    {
        "candidate": [0, 0],
        "type": "Sentence coordination",
        "connective": "and",
        "sentence_1": "The time of the autumn floods came .",
        "sentence_2": "The hundred streams poured into the Yellow River .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:vp_coordination",
    [
        sent("The|DT|det|2", "Sharks|NNPS|nsubj|3", "started|VBD|root|0|start",
             "the|DT|det|5", "year|NN|dobj|3", "0|CD|npadvmod|3", "-|:|punct|6",
             "4|CD|dep|6", ",|,|punct|3", "yet|CC|cc|3",
             "recovered|VBD|conj|3|recover", "to|TO|aux|13",
             "claim|VB|xcomp|11|claim", "sixth|JJ|amod|15", "spot|NN|dobj|13",
             ".|.|punct|3"),
    ],
    {
        "candidate": [0, 0],
        "type": "Verb phrase coordination",
        "connective": "yet",
        "sentence_1": "The Sharks started the year 0 - 4 .",
        "sentence_2": "The Sharks recovered to claim sixth spot .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:relative_clause",
    [
        sent("Kubler|NNP|nsubj|10", ",|,|punct|1", "who|WP|nsubj|4",
             "retired|VBD|rcmod|1|retire", "from|IN|prep|4",
             "cycling|NN|pobj|5", "in|IN|prep|4", "1957|CD|pobj|7",
             ",|,|punct|1", "remained|VBD|root|0|remain", "a|DT|det|13",
             "revered|JJ|amod|13", "figure|NN|attr|10", "in|IN|prep|13",
             "the|DT|det|18", "wealthy|JJ|amod|18", "alpine|JJ|amod|18",
             "nation|NN|pobj|14", ".|.|punct|10"),
    ],
    {
        "candidate": [0, 0],
        "type": "Relative clause",
        "connective": "",
        "sentence_1": "Kubler remained a revered figure in the wealthy alpine nation .",
        "sentence_2": "Kubler retired from cycling in 1957 .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:apposition",
    [
        sent("The|DT|det|2", "frigidarium|NN|nsubj|11", ",|,|punct|2",
             "the|DT|det|6", "last|JJ|amod|6", "stop|NN|appos|2",
             "in|IN|prep|6", "the|DT|det|9", "bathhouse|NN|pobj|7",
             ",|,|punct|2", "was|VBD|root|0|be", "where|WRB|advmod|15",
             "guests|NNS|nsubj|15", "would|MD|aux|15", "cool|VB|advcl|11|cool",
             "off|RP|prt|15", "in|IN|prep|15", "a|DT|det|20",
             "large|JJ|amod|20", "pool|NN|pobj|17", ".|.|punct|11"),
    ],
    {
        "candidate": [0, 0],
        "type": "Apposition",
        "connective": "",
        "sentence_1": "The frigidarium was where guests would cool off in a large pool .",
        "sentence_2": "The frigidarium is the last stop in the bathhouse .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:apposition_tradition",
    [
        sent("The|DT|det|5", "Jacksonville|NNP|nn|5", "Jazz|NNP|nn|5",
             "Piano|NNP|nn|5", "Competition|NNP|nsubj|12", ",|,|punct|5",
             "a|DT|det|10", "30|CD|num|9", "year|NN|nn|10",
             "tradition|NN|appos|5", ",|,|punct|5", "takes|VBZ|root|0|take",
             "place|NN|dobj|12", "at|IN|prep|12", "the|DT|det|17",
             "Florida|NNP|nn|17", "Theatre|NNP|pobj|14", ".|.|punct|12"),
    ],
    {
        "candidate": [0, 0],
        "type": "Apposition",
        "connective": "",
        "sentence_1": "The Jacksonville Jazz Piano Competition takes place "
                      "at the Florida Theatre .",
        "sentence_2": "The Jacksonville Jazz Piano Competition is a 30 year tradition .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "golden:two_rule_trace",
    [
        sent("Ruiz|NNP|nsubj|2", "ordered|VBD|root|0|order", "his|PRP$|poss|5",
             "first|JJ|amod|5", "shot|NN|dobj|2", "to|TO|aux|8",
             "be|VB|auxpass|8|be", "retaken|VBN|xcomp|2|retake",
             "because|IN|mark|12", "Brazilian|JJ|amod|11",
             "players|NNS|nsubj|12", "entered|VBD|advcl|2|enter",
             "the|DT|det|15", "penalty|NN|nn|15", "area|NN|dobj|12",
             "before|IN|prep|12", "his|PRP$|poss|18", "kick|NN|pobj|16",
             ".|.|punct|2"),
    ],
    {
        "candidate": [0, 0],
        "type": "Inner connective + anaphora",
        "connective": "because",
        "sentence_1": "Ruiz ordered his first shot to be retaken .",
        "sentence_2": "Brazilian players entered the penalty area before Ruiz 's kick .",
        "coref_pronoun": True,
        "coref_nominal": False,
    },
    clusters=[[mention(0, 1, 1, "name"), mention(0, 3, 3, "pronoun"),
               mention(0, 17, 17, "pronoun")]],
)

# --- derived: hand-traced fixtures beyond the worked examples ----------------

golden(
    "derived:by_then",
    [
        sent("The|DT|det|2", "storm|NN|nsubj|4", "had|VBD|aux|4|have",
             "ended|VBN|root|0|end", "well|RB|advmod|6", "before|IN|prep|4",
             "dawn|NN|pobj|6", ".|.|punct|4"),
        sent("By|IN|prep|6", "then|RB|pobj|1", ",|,|punct|6",
             "crowds|NNS|nsubj|6", "had|VBD|aux|6|have",
             "gathered|VBN|root|0|gather", "outside|IN|prep|6",
             "the|DT|det|9", "gates|NNS|pobj|7", ".|.|punct|6"),
    ],
    {
        "candidate": [0, 1],
        "type": "Discourse connective",
        "connective": "by then",
        "sentence_1": "The storm had ended well before dawn .",
        "sentence_2": "Crowds had gathered outside the gates .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "derived:forward_participle",
    [
        sent("Since|IN|prep|9", "winning|VBG|pcomp|1|win", "the|DT|det|4",
             "title|NN|dobj|2", ",|,|punct|9", "the|DT|det|7",
             "club|NN|nsubj|9", "has|VBZ|aux|9|have",
             "slumped|VBN|root|0|slump", ".|.|punct|9"),
    ],
    {
        "candidate": [0, 0],
        "type": "Forward connective",
        "connective": "since",
        "sentence_1": "The club won the title .",
        "sentence_2": "The club has slumped .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "derived:cataphora_span",
    [
        sent("Trailing|VBG|vmod|7|trail", "by|IN|prep|1", "two|CD|pobj|2",
             ",|,|punct|7", "the|DT|det|6", "team|NN|nsubj|7",
             "called|VBD|root|0|call", "a|DT|det|9", "timeout|NN|dobj|7",
             ".|.|punct|7"),
    ],
    {
        "candidate": [0, 0],
        "type": "Cataphora",
        "connective": "",
        "sentence_1": "The team trailed by two .",
        "sentence_2": "The team called a timeout .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "derived:relative_np",
    [
        sent("The|DT|det|4", "old|JJ|amod|4", "lighthouse|NN|nn|4",
             "keeper|NN|nsubj|12", ",|,|punct|4", "who|WP|nsubj|7",
             "retired|VBD|rcmod|4|retire", "in|IN|prep|7", "1997|CD|pobj|8",
             ",|,|punct|4", "still|RB|advmod|12", "lives|VBZ|root|0|live",
             "nearby|RB|advmod|12", ".|.|punct|12"),
    ],
    {
        "candidate": [0, 0],
        "type": "Relative clause",
        "connective": "",
        "sentence_1": "The old lighthouse keeper still lives nearby .",
        "sentence_2": "The old lighthouse keeper retired in 1997 .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "derived:vp_subject_prefix",
    [
        sent("The|DT|det|2", "riders|NNS|nsubj|3", "braved|VBD|root|0|brave",
             "the|DT|det|5", "cold|NN|dobj|3", ",|,|punct|3", "but|CC|cc|3",
             "finished|VBD|conj|3|finish", "the|DT|det|10",
             "stage|NN|dobj|8", ".|.|punct|3"),
    ],
    {
        "candidate": [0, 0],
        "type": "Verb phrase coordination",
        "connective": "but",
        "sentence_1": "The riders braved the cold .",
        "sentence_2": "The riders finished the stage .",
        "coref_pronoun": False,
        "coref_nominal": False,
    },
)

golden(
    "derived:coordination_anaphora",
    [
        sent("Marta|NNP|nsubj|2", "scored|VBD|root|0|score", "twice|RB|advmod|2",
             "in|IN|prep|2", "the|DT|det|6", "final|NN|pobj|4", ",|,|punct|2",
             "and|CC|cc|2", "her|PRP$|poss|10", "team|NN|nsubj|11",
             "lifted|VBD|conj|2|lift", "the|DT|det|13", "trophy|NN|dobj|11",
             ".|.|punct|2"),
    ],
    {
        "candidate": [0, 0],
        "type": "Sentence coordination + anaphora",
        "connective": "and",
        "sentence_1": "Marta scored twice in the final .",
        "sentence_2": "Marta 's team lifted the trophy .",
        "coref_pronoun": True,
        "coref_nominal": False,
    },
    clusters=[[mention(0, 1, 1, "name"), mention(0, 9, 9, "pronoun")]],
)

golden(
    "derived:discourse_anaphora",
    [
        sent("Santos|NNP|nsubj|2", "trained|VBD|root|0|train", "all|DT|det|4",
             "winter|NN|npadvmod|2", "for|IN|prep|2", "the|DT|det|7",
             "race|NN|pobj|5", ".|.|punct|2"),
        sent("However|RB|advmod|4", ",|,|punct|4", "he|PRP|nsubj|4",
             "finished|VBD|root|0|finish", "outside|IN|prep|4",
             "the|DT|det|8", "top|JJ|amod|8", "ten|CD|pobj|5",
             ".|.|punct|4"),
    ],
    {
        "candidate": [0, 1],
        "type": "Discourse connective + anaphora",
        "connective": "however",
        "sentence_1": "Santos trained all winter for the race .",
        "sentence_2": "Santos finished outside the top ten .",
        "coref_pronoun": True,
        "coref_nominal": False,
    },
    clusters=[[mention(0, 1, 1, "name"), mention(1, 3, 3, "pronoun")]],
)

golden(
    "derived:double_mention",
    [
        sent("Ruth|NNP|nsubj|2", "visited|VBD|root|0|visit", "the|DT|det|4",
             "harbor|NN|dobj|2", "early|RB|advmod|2", "on|IN|prep|2",
             "Monday|NNP|pobj|6", ".|.|punct|2"),
        sent("She|PRP|nsubj|2", "said|VBD|root|0|say", "she|PRP|nsubj|4",
             "loved|VBD|ccomp|2|love", "the|DT|det|7", "morning|NN|nn|7",
             "light|NN|dobj|4", ".|.|punct|2"),
    ],
    {
        "candidate": [0, 1],
        "type": "Anaphora",
        "connective": "",
        "sentence_1": "Ruth visited the harbor early on Monday .",
        "sentence_2": "Ruth said Ruth loved the morning light .",
        "coref_pronoun": True,
        "coref_nominal": False,
    },
    clusters=[[mention(0, 1, 1, "name"), mention(1, 1, 1, "pronoun"),
               mention(1, 3, 3, "pronoun")]],
)

# --- negatives: each violates exactly one condition clause --------------------

PLAIN_A = sent("The|DT|det|2", "festival|NN|nsubj|3", "drew|VBD|root|0|draw",
               "a|DT|det|6", "large|JJ|amod|6", "crowd|NN|dobj|3",
               "downtown|RB|advmod|3", ".|.|punct|3")

negative(
    "neg:discourse_connective:absent",
    [PLAIN_A,
     sent("Space|NN|nsubjpass|3", "is|VBZ|auxpass|3|be", "limited|VBN|root|0|limit",
          "due|JJ|prep|3", "to|TO|mwe|4", "the|DT|det|8", "steep|JJ|amod|8",
          "valleys|NNS|pobj|4", ".|.|punct|3")],
    "discourse_connective", [0, 1],
)

negative(
    "neg:discourse_connective:window",
    [sent("The|DT|det|2", "meeting|NN|nsubj|3", "ran|VBD|root|0|run",
          "long|RB|advmod|3", "into|IN|prep|3", "the|DT|det|7",
          "evening|NN|pobj|5", ".|.|punct|3"),
     sent("The|DT|det|3", "town|NN|nn|3", "report|NN|nsubj|4",
          "said|VBD|root|0|say", "that|IN|mark|11", "by|IN|prep|11",
          "then|RB|pobj|6", ",|,|punct|11", "crowds|NNS|nsubj|11",
          "had|VBD|aux|11|have", "gathered|VBN|ccomp|4|gather", ".|.|punct|4")],
    "discourse_connective", [0, 1],
)

negative(
    "neg:discourse_connective:partial",
    [PLAIN_A,
     sent("By|IN|prep|6", "nightfall|NN|pobj|1", ",|,|punct|6",
          "crowds|NNS|nsubj|6", "had|VBD|aux|6|have",
          "gathered|VBN|root|0|gather", "near|IN|prep|6", "the|DT|det|9",
          "square|NN|pobj|7", ".|.|punct|6")],
    "discourse_connective", [0, 1],
)

negative(
    "neg:anaphora:no_shared_cluster",
    [sent("Keller|NNP|nsubj|2", "praised|VBD|root|0|praise", "the|DT|det|4",
          "design|NN|dobj|2", "of|IN|prep|4", "the|DT|det|7",
          "bridge|NN|pobj|5", ".|.|punct|2"),
     sent("Morris|NNP|nsubj|2", "questioned|VBD|root|0|question", "the|DT|det|4",
          "cost|NN|dobj|2", "of|IN|prep|4", "the|DT|det|7",
          "project|NN|pobj|5", ".|.|punct|2")],
    "anaphora", [0, 1],
    clusters=[[mention(0, 1, 1, "name")], [mention(1, 1, 1, "name")]],
)

negative(
    "neg:anaphora:antecedent_side_empty",
    [sent("Keller|NNP|nsubj|2", "praised|VBD|root|0|praise", "the|DT|det|4",
          "design|NN|dobj|2", "of|IN|prep|4", "the|DT|det|7",
          "bridge|NN|pobj|5", ".|.|punct|2"),
     sent("Morris|NNP|nsubj|2", "questioned|VBD|root|0|question", "the|DT|det|4",
          "cost|NN|dobj|2", "of|IN|prep|4", "the|DT|det|7",
          "project|NN|pobj|5", ".|.|punct|2")],
    "anaphora", [0, 1],
    clusters=[[mention(1, 1, 1, "name"), mention(1, 4, 4, "nominal")]],
)

negative(
    "neg:anaphora:pronoun_only_antecedent",
    [sent("He|PRP|nsubj|2", "praised|VBD|root|0|praise", "the|DT|det|4",
          "design|NN|dobj|2", "of|IN|prep|4", "the|DT|det|7",
          "bridge|NN|pobj|5", ".|.|punct|2"),
     sent("He|PRP|nsubj|2", "questioned|VBD|root|0|question", "the|DT|det|4",
          "cost|NN|dobj|2", "of|IN|prep|4", "the|DT|det|7",
          "project|NN|pobj|5", ".|.|punct|2")],
    "anaphora", [0, 1],
    clusters=[[mention(0, 1, 1, "pronoun"), mention(1, 1, 1, "pronoun")]],
)

negative(
    "neg:forward_connective:no_prefix",
    [sent("The|DT|det|2", "friendship|NN|nsubj|4", "somewhat|RB|advmod|4",
          "healed|VBD|root|0|heal", "years|NNS|npadvmod|6", "later|RB|advmod|4",
          ",|,|punct|4", "it|PRP|nsubj|9", "was|VBD|parataxis|4|be",
          "a|DT|det|11", "loss|NN|attr|9", ".|.|punct|4")],
    "forward_connective", [0, 0],
)

negative(
    "neg:forward_connective:comma_adjacent",
    [sent("Although|IN|mark|5", ",|,|punct|5", "the|DT|det|4",
          "friendship|NN|nsubj|5", "healed|VBD|advcl|8|heal", ",|,|punct|8",
          "it|PRP|nsubj|8", "was|VBD|root|0|be", "a|DT|det|10",
          "loss|NN|attr|8", ".|.|punct|8")],
    "forward_connective", [0, 0],
)

negative(
    "neg:forward_connective:no_comma",
    [sent("Although|IN|mark|5", "the|DT|det|3", "friendship|NN|nsubj|5",
          "somewhat|RB|advmod|5", "healed|VBD|advcl|9|heal",
          "years|NNS|npadvmod|7", "later|RB|advmod|5", "it|PRP|nsubj|9",
          "was|VBD|root|0|be", "a|DT|det|12", "devastating|JJ|amod|12",
          "loss|NN|attr|9", ".|.|punct|9")],
    "forward_connective", [0, 0],
)

negative(
    "neg:inner_connective:absent",
    [sent("The|DT|det|2", "gallery|NN|nsubj|3", "displayed|VBD|root|0|display",
          "paintings|NNS|dobj|3", "from|IN|prep|3", "three|CD|num|7",
          "centuries|NNS|pobj|5", ".|.|punct|3")],
    "inner_connective", [0, 0],
)

negative(
    "neg:inner_connective:conjunction_not_intra",
    [sent("The|DT|det|2", "crew|NN|nsubj|3", "worked|VBD|root|0|work",
          "fast|RB|advmod|3", "so|IN|mark|8", "the|DT|det|7",
          "delay|NN|nsubj|8", "stayed|VBD|advcl|3|stay", "small|JJ|acomp|8",
          ".|.|punct|3")],
    "inner_connective", [0, 0],
)

negative(
    "neg:inner_connective:partial_multiword",
    [sent("The|DT|det|2", "theater|NN|nsubj|4", "is|VBZ|cop|4|be",
          "busier|JJR|root|0", "now|RB|advmod|4", "than|IN|prep|4",
          "in|IN|pcomp|6", "the|DT|det|9", "spring|NN|pobj|7", ".|.|punct|4")],
    "inner_connective", [0, 0],
)

negative(
    "neg:cataphora:not_participle",
    [sent("Stated|VBD|vmod|6|state", "plainly|RB|advmod|1", ",|,|punct|6",
          "the|DT|det|5", "ruling|NN|nsubj|6", "ended|VBD|root|0|end",
          "the|DT|det|8", "appeal|NN|dobj|6", ".|.|punct|6")],
    "cataphora", [0, 0],
)

negative(
    "neg:cataphora:not_clause_modifier",
    [sent("Swimming|VBG|nsubj|5|swim", "in|IN|prep|1", "open|JJ|amod|4",
          "water|NN|pobj|2", "builds|VBZ|root|0|build", "endurance|NN|dobj|5",
          ",|,|punct|5", "the|DT|det|9", "coach|NN|nsubj|10",
          "said|VBD|parataxis|5|say", ".|.|punct|5")],
    "cataphora", [0, 0],
)

negative(
    "neg:cataphora:no_comma",
    [sent("Stating|VBG|vmod|5|state", "the|DT|det|3", "rules|NNS|dobj|1",
          "clearly|RB|advmod|5", "helped|VBD|root|0|help", "the|DT|det|8",
          "new|JJ|amod|8", "players|NNS|dobj|5", ".|.|punct|5")],
    "cataphora", [0, 0],
)

negative(
    "neg:cataphora:verb_not_adjacent",
    [sent("Stating|VBG|vmod|11|state", "the|DT|det|3", "case|NN|dobj|1",
          ",|,|punct|11", "the|DT|det|6", "report|NN|nsubj|11", "on|IN|prep|6",
          "the|DT|det|9", "matter|NN|pobj|7", "quickly|RB|advmod|11",
          "vanished|VBD|root|0|vanish", ".|.|punct|11")],
    "cataphora", [0, 0],
)

negative(
    "neg:sentence_coordination:window",
    [sent("The|DT|det|2", "rains|NNS|nsubj|3", "came|VBD|root|0|come",
          ",|,|punct|3", "and|CC|cc|3", "after|IN|prep|12", "three|CD|num|9",
          "long|JJ|amod|9", "days|NNS|pobj|6", "the|DT|det|11",
          "rivers|NNS|nsubj|12", "rose|VBD|conj|3|rise", ".|.|punct|3")],
    "sentence_coordination", [0, 0],
)

negative(
    "neg:sentence_coordination:no_conjunct",
    [sent("The|DT|det|2", "rains|NNS|nsubj|3", "came|VBD|root|0|come",
          ",|,|punct|3", "and|CC|cc|3", "so|RB|advmod|7",
          "did|VBD|parataxis|3|do", "the|DT|det|10", "cold|JJ|amod|10",
          "wind|NN|nsubj|7", ".|.|punct|3")],
    "sentence_coordination", [0, 0],
)

negative(
    "neg:sentence_coordination:no_subject",
    [sent("The|DT|det|2", "Sharks|NNPS|nsubj|3", "started|VBD|root|0|start",
          "the|DT|det|5", "year|NN|dobj|3", "0|CD|npadvmod|3", "-|:|punct|6",
          "4|CD|dep|6", ",|,|punct|3", "yet|CC|cc|3",
          "recovered|VBD|conj|3|recover", "to|TO|aux|13", "claim|VB|xcomp|11|claim",
          "sixth|JJ|amod|15", "spot|NN|dobj|13", ".|.|punct|3")],
    "sentence_coordination", [0, 0],
)

negative(
    "neg:vp_coordination:conjunct_not_verb",
    [sent("The|DT|det|3", "final|JJ|amod|3", "stop|NN|nsubj|7",
          "was|VBD|cop|7|be", "the|DT|det|7", "cold|JJ|amod|7",
          "room|NN|root|0", ",|,|punct|7", "or|CC|cc|7", "the|DT|det|11",
          "frigidarium|NN|conj|7", "itself|PRP|dep|11", ".|.|punct|7")],
    "vp_coordination", [0, 0],
)

negative(
    "neg:vp_coordination:not_root_attached",
    [sent("He|PRP|nsubj|2", "said|VBD|root|0|say", "the|DT|det|4",
          "Sharks|NNPS|nsubj|5", "started|VBD|ccomp|2|start",
          "slowly|RB|advmod|5", ",|,|punct|5", "yet|CC|cc|5",
          "recovered|VBD|conj|5|recover", "quickly|RB|advmod|9", ".|.|punct|2")],
    "vp_coordination", [0, 0],
)

negative(
    "neg:vp_coordination:empty_subject_prefix",
    [sent("Ran|VBD|root|0|run", "the|DT|det|3", "drills|NNS|dobj|1",
          ",|,|punct|1", "yet|CC|cc|1", "missed|VBD|conj|1|miss",
          "the|DT|det|9", "final|JJ|amod|9", "game|NN|dobj|6", ".|.|punct|1")],
    "vp_coordination", [0, 0],
)

negative(
    "neg:vp_coordination:intervening_subject",
    [sent("The|DT|det|2", "time|NN|nsubj|7", "of|IN|prep|2", "the|DT|det|6",
          "autumn|NN|nn|6", "floods|NNS|pobj|3", "came|VBD|root|0|come",
          ",|,|punct|7", "and|CC|cc|7", "the|DT|det|12", "hundred|CD|num|12",
          "streams|NNS|nsubj|13", "poured|VBD|conj|7|pour", "into|IN|prep|13",
          "the|DT|det|17", "Yellow|NNP|nn|17", "River|NNP|pobj|14",
          ".|.|punct|7")],
    "vp_coordination", [0, 0],
)

negative(
    "neg:relative_clause:pronoun_not_relative",
    [sent("The|DT|det|2", "bike|NN|nsubj|10", ",|,|punct|2", "that|WDT|dobj|6",
          "he|PRP|nsubj|6", "rode|VBD|rcmod|2|ride", "in|IN|prep|6",
          "1957|CD|pobj|7", ",|,|punct|2", "stayed|VBD|root|0|stay",
          "in|IN|prep|10", "the|DT|det|13", "museum|NN|pobj|11",
          ".|.|punct|10")],
    "relative_clause", [0, 0],
)

negative(
    "neg:relative_clause:single_comma",
    [sent("Kubler|NNP|nsubj|9", ",|,|punct|1", "who|WP|nsubj|4",
          "retired|VBD|rcmod|1|retire", "from|IN|prep|4", "cycling|NN|pobj|5",
          "in|IN|prep|4", "1957|CD|pobj|7", "remained|VBD|root|0|remain",
          "a|DT|det|12", "revered|JJ|amod|12", "figure|NN|attr|9",
          ".|.|punct|9")],
    "relative_clause", [0, 0],
)

negative(
    "neg:relative_clause:possessive_relative",
    [sent("Kubler|NNP|nsubj|9", ",|,|punct|1", "whose|WP$|poss|4",
          "record|NN|nsubj|5", "stood|VBD|rcmod|1|stand", "for|IN|prep|5",
          "decades|NNS|pobj|6", ",|,|punct|1", "remained|VBD|root|0|remain",
          "a|DT|det|12", "revered|JJ|amod|12", "figure|NN|attr|9",
          ".|.|punct|9")],
    "relative_clause", [0, 0],
)

negative(
    "neg:relative_clause:clause_without_verb",
    [sent("Kubler|NNP|nsubj|7", ",|,|punct|1", "who|WP|dep|1", "in|IN|prep|3",
          "1957|CD|pobj|4", ",|,|punct|1", "remained|VBD|root|0|remain",
          "a|DT|det|10", "revered|JJ|amod|10", "figure|NN|attr|7",
          "in|IN|prep|10", "the|DT|det|13", "nation|NN|pobj|11",
          ".|.|punct|7")],
    "relative_clause", [0, 0],
)

negative(
    "neg:apposition:clause_opener_deprel",
    [sent("The|DT|det|2", "frigidarium|NN|nsubj|10", ",|,|punct|2",
          "largest|JJS|appos|2", "of|IN|prep|4", "the|DT|det|8",
          "ancient|JJ|amod|8", "rooms|NNS|pobj|5", ",|,|punct|2",
          "was|VBD|root|0|be", "quite|RB|advmod|12", "cold|JJ|acomp|10",
          ".|.|punct|10")],
    "apposition", [0, 0],
)

negative(
    "neg:apposition:no_appositive",
    [sent("The|DT|det|2", "workers|NNS|nsubj|10", ",|,|punct|10",
          "the|DT|det|5", "day|NN|npadvmod|10", "before|IN|prep|5",
          "the|DT|det|8", "event|NN|pobj|6", ",|,|punct|10",
          "cleaned|VBD|root|0|clean", "the|DT|det|12", "pool|NN|dobj|10",
          ".|.|punct|10")],
    "apposition", [0, 0],
)

negative(
    "neg:apposition:single_comma",
    [sent("The|DT|det|2", "frigidarium|NN|nsubj|10", ",|,|punct|2",
          "the|DT|det|6", "last|JJ|amod|6", "stop|NN|appos|2", "in|IN|prep|6",
          "the|DT|det|9", "bathhouse|NN|pobj|7", "was|VBD|root|0|be",
          "where|WRB|advmod|13", "guests|NNS|nsubj|13",
          "cooled|VBD|advcl|10|cool", "off|RP|prt|13", ".|.|punct|10")],
    "apposition", [0, 0],
)


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with open(OUT_DIR / "golden_docs.jsonl", "w", encoding="utf-8") as fh:
        for record in GOLDEN_DOCS:
            fh.write(json.dumps(record) + "\n")
    with open(OUT_DIR / "golden_expected.json", "w", encoding="utf-8") as fh:
        json.dump(GOLDEN_EXPECTED, fh, indent=2)
        fh.write("\n")
    with open(OUT_DIR / "negative_docs.jsonl", "w", encoding="utf-8") as fh:
        for record in NEGATIVE_DOCS:
            fh.write(json.dumps(record) + "\n")
    with open(OUT_DIR / "negative_expected.json", "w", encoding="utf-8") as fh:
        json.dump(NEGATIVE_EXPECTED, fh, indent=2)
        fh.write("\n")
    print("wrote %d golden and %d negative fixture documents to %s"
          % (len(GOLDEN_DOCS), len(NEGATIVE_DOCS), OUT_DIR))


if __name__ == "__main__":
    main()
