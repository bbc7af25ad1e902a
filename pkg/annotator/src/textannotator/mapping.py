"""Dependency-label mapping from the backend's scheme to the label set the
downstream rules read. The table ships as editable data so the approximation
stays auditable."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

FALLBACK_LABEL = "dep"

TARGET_LABELS = frozenset({
    "root", "cc", "conj", "nsubj", "nsubjpass", "appos", "det", "poss",
    "vmod", FALLBACK_LABEL,
})


@lru_cache(maxsize=None)
def load_label_map(path: str | None = None) -> dict[str, str]:
    if path is None:
        text = resources.files("textannotator").joinpath(
            "data/label_map.tsv").read_text("utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    table: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError("label map line %d: expected two columns" % lineno)
        source, target = parts
        if target not in TARGET_LABELS:
            raise ValueError(
                "label map line %d: %r is not a pipeline label" % (lineno, target))
        table[source] = target
    return table


def map_label(label: str, table: dict[str, str]) -> str:
    return table.get(label, FALLBACK_LABEL)
