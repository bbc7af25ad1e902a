"""Acceptance suite: one test per release criterion, each printing a
PASS line (run with ``pytest tests/test_acceptance.py -v -s``).

Tolerances are fixed here and nowhere else:
  - golden decompositions reproduce token-for-token (0 diffs) in < 1 s
  - >= 3 negative fixtures per rule, each matching nothing
  - scorer equals the brute-force oracle within 1e-9 on 1000 random triples,
    and scores exactly 100.0 when output == reference
  - 10,000 randomized trials per edit-op property
  - two pipeline runs over a 10,000-document corpus are byte-identical,
    documents never straddle splits, split fractions within +/-0.004
  - down-sampling at keep 0.1 retains 0.10 +/- 0.01 of 100k targeted
    examples; keep 0 retains none
  - >= 1000 generated examples with zero unsanctioned output tokens
  - no emitted sentence with <= 6 tokens or non-ASCII text under defaults
  - planted analyzer rates reproduced exactly; confusion rows sum to
    1 +/- 1e-9
"""
import dataclasses
import random
import time
from collections import Counter

from fusionforge.core import (
    DiscourseType,
    FusionExample,
    Provenance,
    Token,
    texts,
    tokens_from_texts,
)
from fusionforge.editops import delete, prepend, replace, split
from fusionforge.metrics import OTHER_LABEL, analyze, sari
from fusionforge.pipeline import (
    Candidate,
    PipelineConfig,
    RunReport,
    assign_split,
    audit_example,
    downsample,
    enumerate_candidates,
    generate_example,
    ingest,
    read_tsv,
    run_generate,
)
from fusionforge.rules import discourse_type_of
from fusionforge.synth import write_corpus

from test_metrics import oracle_sari
from test_rules import run_engine, run_matcher

PAPER_GOLDEN_IDS = [
    "golden:discourse_connective", "golden:anaphora",
    "golden:forward_connective", "golden:inner_connective",
    "golden:cataphora", "golden:sentence_coordination",
    "golden:vp_coordination", "golden:relative_clause",
    "golden:apposition", "golden:apposition_tradition",
    "golden:two_rule_trace",
]


def _pass(name):
    print("ACCEPTANCE %s: PASS" % name)


def test_golden_rules(golden_docs, golden_expected, lexicons):
    start = time.perf_counter()
    diffs = 0
    for doc_id in PAPER_GOLDEN_IDS:
        doc = golden_docs[doc_id]
        exp = golden_expected[doc_id]
        outcome = run_engine(doc, exp["candidate"], lexicons)
        assert outcome is not None, doc_id
        got = (
            " ".join(texts(outcome.sentence_1)),
            " ".join(texts(outcome.sentence_2)),
            discourse_type_of(outcome.applied_rules).value,
            outcome.connective,
        )
        want = (exp["sentence_1"], exp["sentence_2"], exp["type"],
                exp["connective"])
        if got != want:
            diffs += 1
    elapsed = time.perf_counter() - start
    assert diffs == 0
    assert elapsed < 1.0, "golden decompositions took %.3fs" % elapsed
    _pass("golden-rules (%d fixtures, %.0f ms)" % (len(PAPER_GOLDEN_IDS),
                                                   elapsed * 1000))


def test_rule_condition_conformance(negative_docs, negative_expected, lexicons):
    per_rule = Counter()
    for doc_id, exp in negative_expected.items():
        doc = negative_docs[doc_id]
        assert run_matcher(exp["rule"], doc, exp["candidate"], lexicons) is None, doc_id
        per_rule[exp["rule"]] += 1
    rules_covered = {
        "discourse_connective", "anaphora", "forward_connective",
        "inner_connective", "cataphora", "sentence_coordination",
        "vp_coordination", "relative_clause", "apposition",
    }
    assert set(per_rule) == rules_covered
    assert all(count >= 3 for count in per_rule.values()), per_rule
    _pass("rule-condition-conformance (%d negative fixtures)"
          % sum(per_rule.values()))


def test_sari_oracle_equivalence():
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(1000):
        vocab = [chr(97 + i) for i in range(rng.randint(1, 10))]
        def seq():
            return [rng.choice(vocab) for _ in range(rng.randint(1, 8))]
        inp, out, ref = seq(), seq(), seq()
        worst = max(worst, abs(sari(inp, out, ref).sari
                               - oracle_sari(inp, out, ref)))
        assert worst <= 1e-9
    for _ in range(100):
        vocab = [chr(97 + i) for i in range(rng.randint(1, 10))]
        inp = [rng.choice(vocab) for _ in range(rng.randint(1, 8))]
        ref = [rng.choice(vocab) for _ in range(rng.randint(1, 8))]
        assert sari(inp, ref, ref).sari == 100.0
    _pass("sari-oracle-equivalence (1000 triples, worst diff %.2e)" % worst)


def test_edit_op_properties():
    rng = random.Random(7)
    vocab = ["a", "b", "c", "the", "crew", ",", "."]

    def rand_tokens(lo=1, hi=10):
        return tokens_from_texts(
            rng.choice(vocab) for _ in range(rng.randint(lo, hi)))

    for _ in range(10000):
        x = rand_tokens(2)
        i = rng.randint(2, len(x))
        v, w = split(x, i)
        assert v + w == x and len(v) + len(w) == len(x)

    for _ in range(10000):
        x = rand_tokens()
        n = rng.randint(0, len(x))
        assert prepend(delete(x, 1, n), x[:n]) == x

    for _ in range(10000):
        x = rand_tokens()
        pick = rng.randrange(len(x))
        target = [x[pick].text]
        assert texts(replace(x, target, (Token(x[pick].text),))) == texts(x)
    _pass("edit-op-properties (3 x 10000 trials)")


def test_pipeline_determinism_and_split_integrity(tmp_path, lexicons):
    corpus = tmp_path / "corpus.jsonl"
    n_docs = 10000
    write_corpus(corpus, n_docs, seed=42)
    cfg = PipelineConfig(rng_seed=13)

    run_generate(corpus, tmp_path / "run1", cfg, lexicons)
    run_generate(corpus, tmp_path / "run2", cfg, lexicons)
    for name in ("train.tsv", "dev.tsv", "test.tsv"):
        first = (tmp_path / "run1" / name).read_bytes()
        second = (tmp_path / "run2" / name).read_bytes()
        assert first == second, "%s differs between runs" % name

    doc_split: dict[str, str] = {}
    split_counts = Counter()
    emitted_by_split = Counter()
    for doc in ingest(corpus, RunReport()):
        name = assign_split(doc.doc_id, cfg.split_ratios)
        assert doc_split.setdefault(doc.doc_id, name) == name
        split_counts[name] += 1
        for cand in enumerate_candidates(doc):
            if generate_example(cand, lexicons, cfg) is not None:
                emitted_by_split[name] += 1
    for name in ("train", "dev", "test"):
        rows = sum(1 for _ in read_tsv(tmp_path / "run1" / ("%s.tsv" % name)))
        assert rows == emitted_by_split[name]

    fractions = {name: split_counts[name] / n_docs
                 for name in ("train", "dev", "test")}
    for name, target in (("train", 0.98), ("dev", 0.01), ("test", 0.01)):
        assert abs(fractions[name] - target) <= 0.004, fractions
    _pass("pipeline-determinism-and-split-integrity "
          "(fractions train %.4f dev %.4f test %.4f)"
          % (fractions["train"], fractions["dev"], fractions["test"]))


def _targeted_example(i):
    a = tokens_from_texts("The first group left early today .".split())
    b = tokens_from_texts("The second group stayed rather late .".split())
    fused = tokens_from_texts(
        "The first group left early today , and the second group stayed "
        "rather late .".split())
    return FusionExample(
        incoherent_first=a, incoherent_second=b,
        coherent_first=fused, coherent_second=(),
        discourse_type=DiscourseType.SENTENCE_COORDINATION, connective="and",
        provenance=Provenance("doc-%d" % i, (0,)))


def test_downsampling():
    base = _targeted_example(0)
    stream = (dataclasses.replace(base, provenance=Provenance("doc-%d" % i, (0,)))
              for i in range(100000))
    cfg = PipelineConfig(downsample_keep_prob=0.1, rng_seed=99)
    kept = sum(1 for _ in downsample(stream, cfg))
    fraction = kept / 100000
    assert abs(fraction - 0.10) <= 0.01, fraction

    plain = dataclasses.replace(
        base,
        coherent_first=tokens_from_texts(
            "The first group left early today because the second group "
            "stayed rather late .".split()),
        discourse_type=DiscourseType.INNER_CONNECTIVE, connective="because")
    mixed = []
    for i in range(2000):
        mixed.append(dataclasses.replace(
            base, provenance=Provenance("t-%d" % i, (0,))))
        mixed.append(dataclasses.replace(
            plain, provenance=Provenance("p-%d" % i, (0,))))
    zero_cfg = PipelineConfig(downsample_keep_prob=0.0, rng_seed=99)
    survivors = list(downsample(mixed, zero_cfg))
    assert len(survivors) == 2000
    assert all(e.connective == "because" for e in survivors)
    _pass("downsampling (kept fraction %.4f at keep=0.1; none at keep=0)"
          % fraction)


def test_content_accounting(tmp_path, lexicons):
    corpus = tmp_path / "corpus.jsonl"
    write_corpus(corpus, 1200, seed=77)
    cfg = PipelineConfig(rng_seed=77)
    audited = 0
    violations = []
    for doc in ingest(corpus, RunReport()):
        for cand in enumerate_candidates(doc):
            example = generate_example(cand, lexicons, cfg)
            if example is None:
                continue
            audited += 1
            bad = audit_example(example)
            if bad:
                violations.append((doc.doc_id, bad))
    assert audited >= 1000, "only %d examples generated" % audited
    assert violations == [], violations[:5]
    _pass("content-accounting (%d examples, 0 violations)" % audited)


def test_filter_soundness(tmp_path, lexicons):
    corpus = tmp_path / "corpus.jsonl"
    write_corpus(corpus, 1500, seed=88)
    run_generate(corpus, tmp_path / "out", PipelineConfig(rng_seed=88), lexicons)
    checked = 0
    for name in ("train", "dev", "test"):
        for example in read_tsv(tmp_path / "out" / ("%s.tsv" % name)):
            sides = [example.coherent_first, example.coherent_second,
                     example.incoherent_first, example.incoherent_second]
            for side in sides:
                if not side:
                    continue
                checked += 1
                assert len(side) > 6, texts(side)
                assert all(t.text.isascii() for t in side), texts(side)
    assert checked > 0
    _pass("filter-soundness (%d emitted sentences)" % checked)


def test_alignment_analyzer(lexicons):
    conn_gold = tokens_from_texts(
        "The team won the cup , and the fans cheered loudly .".split())
    conn_example = FusionExample(
        incoherent_first=tokens_from_texts("The team won the cup .".split()),
        incoherent_second=tokens_from_texts("The fans cheered loudly .".split()),
        coherent_first=conn_gold, coherent_second=(),
        discourse_type=DiscourseType.SENTENCE_COORDINATION, connective="and")
    pron_gold = tuple(Token(w, pos=("PRP" if w == "he" else ""))
                      for w in "Before the race , he studied the course map .".split())
    pron_example = FusionExample(
        incoherent_first=tokens_from_texts(
            "Before the race , Dumont studied the course map .".split()),
        incoherent_second=(),
        coherent_first=pron_gold, coherent_second=(),
        discourse_type=DiscourseType.ANAPHORA, has_coref_pronoun=True)

    gold_conn_words = texts(conn_gold)
    gold_pron_words = texts(pron_gold)
    pairs = []
    for _ in range(40):  # correct connective
        pairs.append((conn_example, list(gold_conn_words)))
    for _ in range(12):  # substituted connective
        pairs.append((conn_example,
                      [w if w != "and" else "but" for w in gold_conn_words]))
    for _ in range(8):   # connective dropped entirely
        pairs.append((conn_example,
                      [w for w in gold_conn_words if w != "and"]))
    for _ in range(30):  # correct pronoun
        pairs.append((pron_example, list(gold_pron_words)))
    for _ in range(6):   # wrong pronoun
        pairs.append((pron_example,
                      [w if w != "he" else "she" for w in gold_pron_words]))
    for _ in range(4):   # entity name instead of a pronoun
        pairs.append((pron_example,
                      [w if w != "he" else "Dumont" for w in gold_pron_words]))
    assert len(pairs) == 100

    report = analyze(pairs, lexicons)
    conn = report.connective_table["and"]
    assert conn["count"] == 60
    assert conn["accuracy"] == 40 / 60
    top = {f["label"]: f["count"] for f in conn["top_fillers"]}
    assert top == {"and": 40, "but": 12, OTHER_LABEL: 8}

    row = report.pronoun_confusion["he"]
    assert row["he"] == 30 / 40
    assert row["she"] == 6 / 40
    assert row[OTHER_LABEL] == 4 / 40
    assert abs(sum(row.values()) - 1.0) <= 1e-9
    _pass("alignment-analyzer (planted rates reproduced exactly)")
