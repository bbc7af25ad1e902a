import json
from pathlib import Path

import pytest

from fusionforge.core import default_lexicons
from fusionforge.pipeline import RunReport, ingest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def lexicons():
    return default_lexicons()


def _load_docs(path):
    report = RunReport()
    docs = {doc.doc_id: doc for doc in ingest(path, report)}
    assert report.counters.get("documents_skipped", 0) == 0, report.messages
    return docs


@pytest.fixture(scope="session")
def golden_docs():
    return _load_docs(DATA_DIR / "golden_docs.jsonl")


@pytest.fixture(scope="session")
def golden_expected():
    with open(DATA_DIR / "golden_expected.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def negative_docs():
    return _load_docs(DATA_DIR / "negative_docs.jsonl")


@pytest.fixture(scope="session")
def negative_expected():
    with open(DATA_DIR / "negative_expected.json", encoding="utf-8") as fh:
        return json.load(fh)
