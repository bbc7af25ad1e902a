import dataclasses
import json
from collections import Counter

import pytest

from fusionforge.cli import main as forge_main
from fusionforge.core import (
    DiscourseType,
    FusionExample,
    Provenance,
    texts,
    tokens_from_texts,
)
from fusionforge.pipeline import (
    Candidate,
    ConfigError,
    IngestError,
    PipelineConfig,
    RunReport,
    assign_split,
    audit_example,
    compute_stats,
    downsample,
    enumerate_candidates,
    example_to_row,
    generate_example,
    ingest,
    read_tsv,
    row_to_example,
    run_generate,
    write_tsv,
)
from fusionforge.synth import build_corpus, write_corpus


class TestConfig:
    def test_defaults_valid(self):
        cfg = PipelineConfig()
        assert cfg.min_sentence_tokens == 7
        assert cfg.split_ratios == (0.98, 0.01, 0.01)

    @pytest.mark.parametrize("kwargs", [
        {"negative_rate": 1.5},
        {"downsample_keep_prob": -0.1},
        {"split_ratios": (0.5, 0.5, 0.5)},
        {"split_ratios": (1.0, 0.0)},
        {"min_sentence_tokens": 0},
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ConfigError):
            PipelineConfig(**kwargs)


class TestIngest:
    def test_valid_documents(self, tmp_path):
        path = tmp_path / "docs.jsonl"
        write_corpus(path, 3, seed=1)
        report = RunReport()
        docs = list(ingest(path, report))
        assert len(docs) == 3
        assert report.counters["documents_ok"] == 3

    def test_bad_mention_span_skips_document(self, tmp_path):
        record = {
            "doc_id": "bad",
            "sentences": [{"tokens": [
                {"text": "Hi", "pos": "UH", "deprel": "root", "head": 0}]}],
            "clusters": [[{"sent": 0, "start": 1, "end": 5, "kind": "name"}]],
        }
        path = tmp_path / "docs.jsonl"
        path.write_text(json.dumps(record) + "\n", encoding="utf-8")
        report = RunReport()
        assert list(ingest(path, report)) == []
        assert report.counters["documents_skipped"] == 1
        assert report.messages

    def test_bad_json_line_skipped(self, tmp_path):
        path = tmp_path / "docs.jsonl"
        path.write_text("{not json}\n", encoding="utf-8")
        report = RunReport()
        assert list(ingest(path, report)) == []
        assert report.counters["documents_skipped"] == 1

    def test_missing_file_fatal(self, tmp_path):
        with pytest.raises(IngestError):
            list(ingest(tmp_path / "absent.jsonl"))

    def test_count_matches_line_scan(self, tmp_path):
        path = tmp_path / "docs.jsonl"
        write_corpus(path, 50, seed=2)
        with open(path, "a", encoding="utf-8") as fh:
            fh.write("{broken\n")
        with open(path, encoding="utf-8") as fh:
            line_count = sum(1 for line in fh if line.strip())
        report = RunReport()
        docs = list(ingest(path, report))
        assert len(docs) == line_count - 1
        assert report.counters["documents_seen"] == line_count


class TestEnumerate:
    def test_three_sentences(self, golden_docs):
        doc = golden_docs["golden:anaphora"]
        cands = [(c.first, c.last) for c in enumerate_candidates(doc)]
        assert cands == [(0, 0), (0, 1), (1, 1)]

    def test_single_sentence(self, golden_docs):
        doc = golden_docs["golden:cataphora"]
        assert [(c.first, c.last) for c in enumerate_candidates(doc)] == [(0, 0)]

    def test_count_is_2n_minus_1(self):
        for doc in build_corpus(40, seed=3):
            from fusionforge.pipeline import parse_document
            parsed = parse_document(doc)
            n = len(parsed.sentences)
            assert sum(1 for _ in enumerate_candidates(parsed)) == 2 * n - 1


class TestGenerateExample:
    def test_two_rule_fixture(self, golden_docs, lexicons):
        doc = golden_docs["golden:two_rule_trace"]
        cand = Candidate(doc=doc, first=0, last=0)
        ex = generate_example(cand, lexicons, PipelineConfig())
        assert ex is not None
        assert ex.discourse_type is DiscourseType.INNER_CONNECTIVE_ANAPHORA
        assert " ".join(texts(ex.incoherent_second)) == \
            "Brazilian players entered the penalty area before Ruiz 's kick ."
        assert ex.provenance == Provenance("golden:two_rule_trace", (0,))

    def test_short_sentence_filtered(self, golden_docs, lexicons):
        doc = golden_docs["golden:two_rule_trace"]
        cand = Candidate(doc=doc, first=0, last=0)
        cfg = PipelineConfig(min_sentence_tokens=25)
        report = RunReport()
        assert generate_example(cand, lexicons, cfg, report=report) is None
        assert report.counters["candidates_input_filtered"] == 1

    def test_negative_rate_one_yields_control(self, negative_docs, lexicons):
        doc = negative_docs["neg:anaphora:no_shared_cluster"]
        cand = Candidate(doc=doc, first=0, last=1)
        ex = generate_example(cand, lexicons, PipelineConfig(negative_rate=1.0))
        assert ex is not None
        assert ex.discourse_type is DiscourseType.NONE
        assert texts(ex.incoherent_first) == texts(ex.coherent_first)

    def test_negative_rate_zero_yields_nothing(self, negative_docs, lexicons):
        doc = negative_docs["neg:anaphora:no_shared_cluster"]
        cand = Candidate(doc=doc, first=0, last=1)
        assert generate_example(cand, lexicons,
                                PipelineConfig(negative_rate=0.0)) is None

    def test_single_no_match_yields_nothing(self, negative_docs, lexicons):
        doc = negative_docs["neg:inner_connective:absent"]
        cand = Candidate(doc=doc, first=0, last=0)
        assert generate_example(cand, lexicons,
                                PipelineConfig(negative_rate=1.0)) is None


class TestAssignSplit:
    def test_deterministic(self):
        for doc_id in ("a", "doc-17", "synth-000001"):
            assert assign_split(doc_id, (0.98, 0.01, 0.01)) == \
                assign_split(doc_id, (0.98, 0.01, 0.01))

    def test_degenerate_ratios(self):
        assert all(assign_split("d%d" % i, (1.0, 0.0, 0.0)) == "train"
                   for i in range(100))

    def test_dev_fraction_within_tolerance(self):
        counts = Counter(assign_split("doc-%d" % i, (0.98, 0.01, 0.01))
                         for i in range(10000))
        assert abs(counts["dev"] / 10000 - 0.01) <= 0.004

    def test_empty_doc_id_rejected(self):
        with pytest.raises(ValueError):
            assign_split("", (0.98, 0.01, 0.01))


def _example(conn, dtype, doc_id="d0"):
    a = tokens_from_texts("The first group left early today .".split())
    b = tokens_from_texts("The second group stayed rather late .".split())
    fused = tokens_from_texts(
        ("The first group left early today , %s the second group stayed "
         "rather late ." % (conn or "and")).split())
    if dtype is DiscourseType.NONE:
        return FusionExample(
            incoherent_first=a, incoherent_second=b,
            coherent_first=a, coherent_second=b,
            discourse_type=dtype, provenance=Provenance(doc_id, (0, 1)))
    return FusionExample(
        incoherent_first=a, incoherent_second=b,
        coherent_first=fused, coherent_second=(),
        discourse_type=dtype, connective=conn,
        provenance=Provenance(doc_id, (0,)))


class TestDownsample:
    def test_non_target_always_kept(self):
        examples = [_example("because", DiscourseType.INNER_CONNECTIVE, "d%d" % i)
                    for i in range(200)]
        cfg = PipelineConfig(downsample_keep_prob=0.0)
        assert len(list(downsample(examples, cfg))) == 200

    def test_keep_prob_zero_removes_targets(self):
        examples = [_example("and", DiscourseType.SENTENCE_COORDINATION, "d%d" % i)
                    for i in range(200)]
        cfg = PipelineConfig(downsample_keep_prob=0.0)
        assert list(downsample(examples, cfg)) == []

    def test_anaphora_without_connective_is_target(self):
        a = tokens_from_texts("The first group left early today .".split())
        b = tokens_from_texts("He stayed rather late that night .".split())
        b2 = tokens_from_texts("Smith stayed rather late that night .".split())
        ex = FusionExample(incoherent_first=a, incoherent_second=b2,
                           coherent_first=a, coherent_second=b,
                           discourse_type=DiscourseType.ANAPHORA,
                           provenance=Provenance("dx", (0, 1)))
        cfg = PipelineConfig(downsample_keep_prob=0.0)
        assert list(downsample([ex], cfg)) == []

    def test_deterministic_under_seed(self):
        examples = [_example("but", DiscourseType.SENTENCE_COORDINATION, "d%d" % i)
                    for i in range(500)]
        cfg = PipelineConfig(downsample_keep_prob=0.3, rng_seed=11)
        first = [e.provenance.doc_id for e in downsample(examples, cfg)]
        second = [e.provenance.doc_id for e in downsample(examples, cfg)]
        assert first == second
        other = [e.provenance.doc_id
                 for e in downsample(examples, PipelineConfig(
                     downsample_keep_prob=0.3, rng_seed=12))]
        assert first != other


class TestStats:
    def test_empty(self):
        stats = compute_stats([])
        assert stats.total == 0
        assert stats.to_json()["no_connective"]["percent"] == 0.0

    def test_percentages(self):
        examples = [
            _example("and", DiscourseType.SENTENCE_COORDINATION, "a"),
            _example("and", DiscourseType.SENTENCE_COORDINATION, "b"),
            _example("because", DiscourseType.INNER_CONNECTIVE, "c"),
            _example("", DiscourseType.NONE, "d"),
        ]
        report = compute_stats(examples).to_json()
        assert report["connectives"]["and"]["percent"] == 50.0
        assert report["no_connective"]["count"] == 1
        # denominator includes connective-free examples
        assert report["connectives"]["because"]["percent"] == 25.0

    def test_recount_oracle(self):
        examples = []
        for i in range(500):
            conn = ("and", "because", "so")[i % 3]
            dtype = (DiscourseType.SENTENCE_COORDINATION,
                     DiscourseType.INNER_CONNECTIVE,
                     DiscourseType.SENTENCE_COORDINATION)[i % 3]
            examples.append(_example(conn, dtype, "d%d" % i))
        stats = compute_stats(examples)
        recount = Counter(e.connective for e in examples)
        for conn, count in recount.items():
            assert stats.connective_counts[conn] == count
        assert stats.total == 500


class TestTsvRoundTrip:
    def test_fields_survive(self):
        examples = [
            _example("because", DiscourseType.INNER_CONNECTIVE, "a"),
            _example("", DiscourseType.NONE, "b"),
        ]
        rows = [example_to_row(e) for e in examples]
        parsed = [row_to_example(r) for r in rows]
        for original, loaded in zip(examples, parsed):
            assert texts(original.incoherent_first) == texts(loaded.incoherent_first)
            assert texts(original.coherent_second) == texts(loaded.coherent_second)
            assert original.discourse_type == loaded.discourse_type
            assert original.connective == loaded.connective

    def test_file_round_trip(self, tmp_path):
        examples = [_example("and", DiscourseType.SENTENCE_COORDINATION, "a")]
        path = tmp_path / "x.tsv"
        assert write_tsv(examples, path) == 1
        loaded = list(read_tsv(path))
        assert len(loaded) == 1
        assert loaded[0].connective == "and"

    def test_bad_column_count(self):
        with pytest.raises(ValueError):
            row_to_example("a\tb\tc")


class TestAudit:
    def test_generated_fixture_passes(self, golden_docs, lexicons):
        doc = golden_docs["golden:two_rule_trace"]
        ex = generate_example(Candidate(doc=doc, first=0, last=0),
                              lexicons, PipelineConfig())
        assert audit_example(ex) == []

    def test_foreign_token_flagged(self):
        ex = _example("because", DiscourseType.INNER_CONNECTIVE)
        bad = dataclasses.replace(
            ex, incoherent_second=tokens_from_texts(
                "The second group stayed banana late .".split()))
        assert audit_example(bad) == ["banana"]

    def test_sanctioned_insertions_pass(self):
        coherent = tokens_from_texts(
            "The pool , the last stop , drew crowds every day .".split())
        ex = FusionExample(
            incoherent_first=tokens_from_texts(
                "The pool drew crowds every day .".split()),
            incoherent_second=tokens_from_texts(
                "The pool is the last stop .".split()),
            coherent_first=coherent, coherent_second=(),
            discourse_type=DiscourseType.APPOSITION)
        assert audit_example(ex) == []


class TestRunGenerate:
    def test_small_corpus(self, tmp_path, lexicons):
        corpus = tmp_path / "corpus.jsonl"
        write_corpus(corpus, 120, seed=5)
        report = run_generate(corpus, tmp_path / "out",
                              PipelineConfig(rng_seed=5), lexicons)
        assert report.counters["examples_emitted"] > 0
        assert report.counters.get("examples_audit_failed", 0) == 0
        for name in ("train.tsv", "dev.tsv", "test.tsv", "stats.json"):
            assert (tmp_path / "out" / name).exists()

    def test_repeat_runs_byte_identical(self, tmp_path, lexicons):
        corpus = tmp_path / "corpus.jsonl"
        write_corpus(corpus, 60, seed=6)
        cfg = PipelineConfig(rng_seed=9)
        run_generate(corpus, tmp_path / "a", cfg, lexicons)
        run_generate(corpus, tmp_path / "b", cfg, lexicons)
        for name in ("train.tsv", "dev.tsv", "test.tsv"):
            assert (tmp_path / "a" / name).read_bytes() == \
                (tmp_path / "b" / name).read_bytes()


class TestCli:
    def _generate(self, tmp_path, *extra):
        corpus = tmp_path / "corpus.jsonl"
        if not corpus.exists():
            write_corpus(corpus, 80, seed=8)
        return forge_main([
            "generate", "--input", str(corpus), "--out", str(tmp_path / "out"),
            "--seed", "4", *extra])

    def test_generate_ok(self, tmp_path, capsys):
        assert self._generate(tmp_path) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["counters"]["examples_emitted"] > 0

    def test_missing_input_exit_1(self, tmp_path):
        code = forge_main(["generate", "--input", str(tmp_path / "nope.jsonl"),
                           "--out", str(tmp_path / "out")])
        assert code == 1

    def test_bad_ratios_exit_2(self, tmp_path):
        code = self._generate(tmp_path, "--ratios", "0.5,0.4,0.4")
        assert code == 2

    def test_split_stats_downsample(self, tmp_path, capsys):
        assert self._generate(tmp_path) == 0
        capsys.readouterr()
        assert forge_main(["split", "--input", str(tmp_path / "corpus.jsonl"),
                           "--out", str(tmp_path / "splits")]) == 0
        counts = json.loads(capsys.readouterr().out)["documents"]
        assert sum(counts.values()) == 80
        train = tmp_path / "out" / "train.tsv"
        assert forge_main(["stats", "--input", str(train)]) == 0
        stats = json.loads(capsys.readouterr().out)
        assert stats["total"] > 0
        assert forge_main(["downsample", "--input", str(train),
                           "--out", str(tmp_path / "down.tsv"),
                           "--keep-prob", "0.0"]) == 0
        kept = list(read_tsv(tmp_path / "down.tsv"))
        assert all(e.connective not in ("and", "but") for e in kept)

    def test_score_gold_as_prediction(self, tmp_path, capsys):
        assert self._generate(tmp_path) == 0
        capsys.readouterr()
        train = tmp_path / "out" / "train.tsv"
        pred = tmp_path / "pred.txt"
        with open(pred, "w", encoding="utf-8") as fh:
            for ex in read_tsv(train):
                fused = texts(ex.coherent_first) + texts(ex.coherent_second)
                fh.write(" ".join(fused) + "\n")
        assert forge_main(["score", "--gold", str(train),
                           "--pred", str(pred)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["sari"] == pytest.approx(100.0)
        assert report["exact_match"] == 1.0

    def test_analyze_runs(self, tmp_path, capsys):
        assert self._generate(tmp_path) == 0
        capsys.readouterr()
        train = tmp_path / "out" / "train.tsv"
        pred = tmp_path / "pred.txt"
        with open(pred, "w", encoding="utf-8") as fh:
            for ex in read_tsv(train):
                fused = texts(ex.coherent_first) + texts(ex.coherent_second)
                fh.write(" ".join(fused) + "\n")
        assert forge_main(["analyze", "--gold", str(train),
                           "--pred", str(pred)]) == 0
        report = json.loads(capsys.readouterr().out)
        for entry in report["connective_table"].values():
            assert entry["accuracy"] == 1.0

    def test_mismatched_prediction_count_exit_1(self, tmp_path, capsys):
        assert self._generate(tmp_path) == 0
        capsys.readouterr()
        train = tmp_path / "out" / "train.tsv"
        pred = tmp_path / "pred.txt"
        pred.write_text("just one line\n", encoding="utf-8")
        assert forge_main(["score", "--gold", str(train),
                           "--pred", str(pred)]) == 1
