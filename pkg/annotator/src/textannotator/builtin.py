"""Self-contained deterministic annotation backend.

A closed-class lexicon plus suffix heuristics assign Penn Treebank POS tags;
a pattern-based pass assigns one root per sentence and heads/labels for the
remaining tokens. Labels follow Universal Dependencies naming and are mapped
to the pipeline's label set by the shipped mapping table. Accuracy is
deliberately modest: the backend exists so the adapter runs without any
model download, and it guarantees schema-valid, deterministic output.
"""
from __future__ import annotations

import re

from .tokenize import split_sentences, tokenize

DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "every",
               "each", "some", "any", "no", "another", "all", "both"}
PRP = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "us",
       "them", "himself", "herself", "itself", "themselves"}
PRP_DOLLAR = {"my", "your", "his", "her", "its", "our", "their"}
PREPOSITIONS = {"of", "in", "on", "at", "by", "for", "with", "from", "about",
                "into", "over", "after", "before", "under", "near", "outside",
                "inside", "during", "without", "against", "between", "through",
                "toward", "towards", "upon", "off", "unless", "because",
                "although", "since", "while", "if", "than", "whether", "until",
                "despite", "beyond", "along", "across", "behind", "around"}
CONJUNCTIONS = {"and", "but", "or", "nor", "yet", "so"}
MODALS = {"will", "would", "can", "could", "may", "might", "shall", "should",
          "must"}
BE_AUX = {"am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD",
          "be": "VB", "been": "VBN", "being": "VBG",
          "has": "VBZ", "have": "VBP", "had": "VBD",
          "does": "VBZ", "do": "VBP", "did": "VBD"}
WH = {"who": "WP", "whom": "WP", "whose": "WP$", "which": "WDT",
      "what": "WDT", "when": "WRB", "where": "WRB", "why": "WRB",
      "how": "WRB"}
ADVERBS = {"not", "never", "often", "always", "still", "also", "again",
           "here", "there", "now", "then", "soon", "too", "very", "quite",
           "rather", "twice", "later", "early", "away", "back"}
# common verbs whose past or base form a suffix rule would miss
VERB_FORMS = {
    "said": "VBD", "made": "VBD", "took": "VBD", "went": "VBD", "came": "VBD",
    "got": "VBD", "saw": "VBD", "ran": "VBD", "won": "VBD", "held": "VBD",
    "left": "VBD", "met": "VBD", "told": "VBD", "found": "VBD", "gave": "VBD",
    "kept": "VBD", "knew": "VBD", "began": "VBD", "brought": "VBD",
    "thought": "VBD", "stood": "VBD", "drew": "VBD", "grew": "VBD",
    "fell": "VBD", "rose": "VBD", "sat": "VBD", "spoke": "VBD", "wrote": "VBD",
    "led": "VBD", "read": "VBD", "sold": "VBD", "built": "VBD", "sent": "VBD",
    "lost": "VBD", "paid": "VBD", "caught": "VBD", "taught": "VBD",
    "bought": "VBD", "become": "VB", "becomes": "VBZ", "became": "VBD",
    "say": "VBP", "says": "VBZ", "make": "VBP", "take": "VBP", "go": "VBP",
    "come": "VBP", "get": "VBP", "see": "VBP", "run": "VBP", "win": "VBP",
    "hold": "VBP", "keep": "VBP", "know": "VBP", "live": "VBP", "work": "VBP",
    "play": "VBP", "stay": "VBP", "remain": "VBP", "remains": "VBZ",
    "remained": "VBD", "mean": "VBP", "means": "VBZ",
}
PUNCT_TAGS = {".": ".", ",": ",", ";": ":", ":": ":", "!": ".", "?": ".",
              "-": ":", "--": ":", "(": "(", ")": ")", '"': "''",
              "'": "POS", "'s": "POS", "n't": "RB"}
ADJ_SUFFIXES = ("ous", "ful", "ive", "ical", "ish", "able", "ible", "ant",
                "ent", "less")
_NUMBER = re.compile(r"^\d+(?:[.,:\-/]\d+)*$")
_ORDINAL = re.compile(r"^\d+(?:st|nd|rd|th)$")

FINITE = {"VBD", "VBZ", "VBP", "MD"}
VERBAL = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
NOUNY = {"NN", "NNS", "NNP", "NNPS"}


def _tag_word(word: str, position: int, prev_tag: str) -> str:
    if word in PUNCT_TAGS:
        return PUNCT_TAGS[word]
    lower = word.lower()
    if lower in ("'s",):
        return "POS"
    if _NUMBER.match(word):
        return "CD"
    if _ORDINAL.match(word):
        return "JJ"
    if lower in DETERMINERS:
        return "DT"
    if lower in PRP_DOLLAR:
        return "PRP$"
    if lower in PRP:
        return "PRP"
    if lower == "to":
        return "TO"
    if lower in CONJUNCTIONS:
        return "CC"
    if lower in MODALS:
        return "MD"
    if lower in BE_AUX:
        return BE_AUX[lower]
    if lower in WH:
        return WH[lower]
    if lower in PREPOSITIONS:
        return "IN"
    if lower in ADVERBS:
        return "RB"
    if lower in VERB_FORMS:
        return VERB_FORMS[lower]
    if position > 0 and word[0].isupper():
        return "NNPS" if lower.endswith("s") and not lower.endswith("ss") else "NNP"
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBD"
    if lower.endswith("ly") and len(lower) > 3:
        return "RB"
    if lower.endswith(ADJ_SUFFIXES):
        return "JJ"
    if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 3:
        # plural noun after a nominal opener, third-singular verb after a subject
        if prev_tag in {"DT", "JJ", "PRP$", "CD"}:
            return "NNS"
        if prev_tag in {"PRP", "NN", "NNP", "NNS", "NNPS"}:
            return "VBZ"
        return "NNS"
    if position == 0 and word[0].isupper():
        return "NNP"
    return "NN"


def tag(words: list[str]) -> list[str]:
    tags: list[str] = []
    for i, word in enumerate(words):
        prev = tags[-1] if tags else ""
        tags.append(_tag_word(word, i, prev))
    return tags


def _lemma(word: str, pos: str) -> str:
    lower = word.lower()
    if pos == "VBG" and lower.endswith("ing") and len(lower) > 4:
        stem = lower[:-3]
        if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiou":
            return stem[:-1]
        return stem
    return lower


def _nearest(positions, i, before=True):
    if before:
        candidates = [p for p in positions if p < i]
        return candidates[-1] if candidates else None
    candidates = [p for p in positions if p > i]
    return candidates[0] if candidates else None


def parse(words: list[str], tags: list[str]) -> tuple[list[int], list[str]]:
    """Heads (1-based, 0 for root) and UD-style labels. Guarantees exactly
    one root, in-bounds heads and no self-attachment."""
    n = len(words)
    heads = [0] * n
    labels = [""] * n

    verb_pos = [i for i, t in enumerate(tags) if t in VERBAL]
    finite_pos = [i for i, t in enumerate(tags) if t in FINITE]
    noun_pos = [i for i, t in enumerate(tags) if t in NOUNY]

    if finite_pos:
        root = finite_pos[0]
    elif verb_pos:
        root = verb_pos[0]
    elif noun_pos:
        root = noun_pos[0]
    else:
        root = 0
    labels[root] = "root"
    heads[root] = 0

    def attach(i, head, label):
        if i == root or i == head or labels[i]:
            return
        heads[i] = head + 1
        labels[i] = label

    # passive: be-form directly before a VBN root
    passive = (tags[root] == "VBN" and root > 0
               and words[root - 1].lower() in BE_AUX)

    # coordination segments: a verb after a CC is a conjunct of the root,
    # with any nouns between the CC and the verb as its subject
    cc_positions = [i for i, t in enumerate(tags) if t == "CC"]
    conj_verbs = set()
    for cc in cc_positions:
        attach(cc, root, "cc")
        seg_end = min([c for c in cc_positions if c > cc] + [n])
        verb = next((v for v in verb_pos if cc < v < seg_end and v != root), None)
        if verb is not None:
            attach(verb, root, "conj")
            conj_verbs.add(verb)
            for p in range(cc + 1, verb):
                if tags[p] in NOUNY:
                    attach(p, verb, "nsubj")
        else:
            nxt = next((p for p in noun_pos if cc < p < seg_end), None)
            prev = _nearest(noun_pos, cc, before=True)
            if nxt is not None and prev is not None:
                attach(nxt, prev, "conj")

    # appositive: noun , [DT|PRP$] ... noun , with no finite verb inside
    for i in range(1, n):
        if words[i] != "," or tags[i - 1] not in NOUNY:
            continue
        close = next((j for j in range(i + 1, n) if words[j] == ","), None)
        if close is None or close == i + 1:
            continue
        inner = range(i + 1, close)
        if tags[i + 1] not in {"DT", "PRP$"}:
            continue
        if any(tags[p] in FINITE for p in inner):
            continue
        inner_nouns = [p for p in inner if tags[p] in NOUNY]
        if not inner_nouns:
            continue
        attach(inner_nouns[-1], i - 1, "appos")
        for p in inner_nouns[:-1]:
            attach(p, inner_nouns[-1], "compound")

    # sentence-initial participial clause set off by a comma
    if tags[0] == "VBG" and root != 0 and "," in words[1:]:
        attach(0, root, "acl")

    # prepositions and their objects
    prep_positions = [i for i, t in enumerate(tags) if t == "IN"]
    for prep in prep_positions:
        head = _nearest(verb_pos, prep, before=True)
        if head is None:
            head = _nearest(noun_pos, prep, before=True)
        attach(prep, root if head is None else head, "case")
        obj = next((p for p in noun_pos if p > prep and not labels[p]), None)
        if obj is not None and (obj - prep) <= 4:
            attach(obj, prep, "obl")

    # remaining nouns: compound chains, then subject/object placement
    for i in noun_pos:
        if labels[i] or i == root:
            continue
        nxt = i + 1
        if nxt < n and tags[nxt] in NOUNY and nxt != root and not labels[nxt]:
            attach(i, nxt, "compound")
            continue
        if i < root:
            attach(i, root, "nsubj:pass" if passive else "nsubj")
        else:
            verb = _nearest(sorted(verb_pos), i, before=True)
            attach(i, root if verb is None else verb, "obj")

    # pronouns: subjects before a verb, objects after
    for i, t in enumerate(tags):
        if t != "PRP" or labels[i] or i == root:
            continue
        verb = _nearest(verb_pos, i, before=False)
        if verb is not None and i < verb:
            attach(i, verb, "nsubj:pass" if (passive and verb == root) else "nsubj")
        else:
            prev = _nearest(verb_pos, i, before=True)
            attach(i, root if prev is None else prev, "obj")

    # modifiers
    for i, t in enumerate(tags):
        if labels[i] or i == root:
            continue
        if t in {"DT", "PRP$", "CD", "JJ"}:
            head = next((p for p in noun_pos if p > i), None)
            label = {"DT": "det", "PRP$": "nmod:poss", "CD": "nummod",
                     "JJ": "amod"}[t]
            attach(i, root if head is None else head, label)
        elif t == "MD" or (words[i].lower() in BE_AUX and i not in conj_verbs
                           and i != root):
            verb = _nearest(verb_pos, i, before=False)
            if verb is not None:
                attach(i, verb, "aux")
        elif t == "TO":
            verb = _nearest(verb_pos, i, before=False)
            attach(i, root if verb is None else verb, "mark")
        elif t == "RB":
            verb = _nearest(verb_pos, i, before=True)
            attach(i, root if verb is None else verb, "advmod")
        elif t in {".", ",", ":", "''", "(", ")"}:
            attach(i, root, "punct")

    for i in range(n):
        if not labels[i] and i != root:
            attach(i, root, "dep")
    return heads, labels


def annotate_sentence(sentence: str) -> list[dict]:
    words = tokenize(sentence)
    if not words:
        return []
    tags = tag(words)
    heads, labels = parse(words, tags)
    return [
        {"text": w, "pos": t, "deprel": lab, "head": h, "lemma": _lemma(w, t)}
        for w, t, lab, h in zip(words, tags, labels, heads)
    ]


def annotate_document(text: str, segment: bool = True) -> list[list[dict]]:
    sentences = split_sentences(text) if segment else [text.strip()]
    out = []
    for sentence in sentences:
        tokens = annotate_sentence(sentence)
        if tokens:
            out.append(tokens)
    return out
