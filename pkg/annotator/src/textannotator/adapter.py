"""Convert raw text into the dependency-annotated JSON-lines corpus format.

Input is UTF-8 plain text, one document per line (or per blank-line block
with ``doc_mode="block"``). Output records carry 1-based token heads (0 for
the root), Penn Treebank POS tags, dependency labels restricted to the set
the downstream rules read (everything else becomes ``dep``), lemmas, and
optional coreference clusters.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from . import builtin
from .coref import cluster_mentions
from .mapping import load_label_map, map_label

BACKENDS = ("builtin", "spacy")


class AdapterError(RuntimeError):
    pass


@dataclass(frozen=True)
class AdapterConfig:
    model: str = "builtin"          # "builtin" or "spacy:<model-name>"
    batch_size: int = 64
    segment_sentences: bool = True
    coref: bool = True
    doc_mode: str = "line"          # "line" or "block"
    label_map_path: str | None = None

    def backend(self) -> str:
        name = self.model.split(":", 1)[0]
        if name not in BACKENDS:
            raise AdapterError("unknown backend %r (expected one of %s)"
                               % (name, ", ".join(BACKENDS)))
        return name


def _iter_documents(fh, doc_mode: str) -> Iterator[str]:
    if doc_mode == "line":
        for line in fh:
            line = line.strip()
            if line:
                yield line
        return
    block: list[str] = []
    for line in fh:
        if line.strip():
            block.append(line.strip())
        elif block:
            yield " ".join(block)
            block = []
    if block:
        yield " ".join(block)


def _annotate_with_builtin(text: str, config: AdapterConfig) -> list[list[dict]]:
    return builtin.annotate_document(text, segment=config.segment_sentences)


def _annotate_with_spacy(texts: list[str], config: AdapterConfig):
    try:
        import spacy
    except ImportError as exc:
        raise AdapterError(
            "the spacy backend needs the spacy package installed "
            "(pip install textannotator[spacy] plus a model)") from exc
    model = config.model.split(":", 1)[1] if ":" in config.model else "en_core_web_sm"
    try:
        nlp = spacy.load(model)
    except OSError as exc:
        raise AdapterError("cannot load spacy model %r: %s" % (model, exc)) from exc
    for doc in nlp.pipe(texts, batch_size=config.batch_size):
        sentences = []
        spans = doc.sents if config.segment_sentences else [doc[:]]
        for span in spans:
            tokens = []
            for tok in span:
                if not tok.text.strip():
                    continue
                head = 0 if tok.head is tok else tok.head.i - span.start + 1
                tokens.append({
                    "text": "".join(tok.text.split()),
                    "pos": tok.tag_,
                    "deprel": tok.dep_,
                    "head": head,
                    "lemma": tok.lemma_.lower(),
                })
            if tokens:
                sentences.append(tokens)
        yield sentences


def document_record(doc_id: str, sentences: list[list[dict]],
                    config: AdapterConfig) -> dict | None:
    if not sentences:
        return None
    table = load_label_map(config.label_map_path)
    for tokens in sentences:
        for token in tokens:
            token["deprel"] = map_label(token["deprel"], table)
    record = {"doc_id": doc_id, "sentences": [{"tokens": t} for t in sentences]}
    if config.coref:
        clusters = cluster_mentions(sentences)
        if clusters:
            record["clusters"] = clusters
    return record


def annotate_file(in_path, out_path, config: AdapterConfig = AdapterConfig()) -> int:
    """Annotate a raw-text file; returns the number of documents written."""
    backend = config.backend()
    with open(in_path, "r", encoding="utf-8") as fh:
        raw_docs = list(_iter_documents(fh, config.doc_mode))

    if backend == "spacy":
        annotated = _annotate_with_spacy(raw_docs, config)
    else:
        annotated = (_annotate_with_builtin(text, config) for text in raw_docs)

    count = 0
    with open(out_path, "w", encoding="utf-8") as out:
        for idx, sentences in enumerate(annotated):
            record = document_record("doc-%06d" % idx, sentences, config)
            if record is None:
                continue
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
            count += 1
    return count
