import pytest

from fusionforge import rules
from fusionforge.core import (
    AnnotatedSentence,
    MentionClusterSet,
    Token,
    texts,
    tokens_from_texts,
)
from fusionforge.editops import delete, replace, split, trim
from fusionforge.rules import (
    AnaphoraContext,
    EngineConfig,
    GenerationOutcome,
    RuleId,
    combine_with_anaphora,
    discourse_type_of,
    generate_from_pair,
    generate_from_single,
    match_discourse_connective,
    match_forward_connective,
    match_inner_connective,
)

CFG = EngineConfig()


def run_engine(doc, candidate, lexicons, cfg=CFG):
    first, last = candidate
    if first == last:
        return generate_from_single(
            doc.sentences[first], first, doc.clusters, lexicons, cfg)
    return generate_from_pair(
        doc.sentences[first], first, doc.sentences[last], last,
        doc.clusters, lexicons, cfg)


def run_matcher(rule, doc, candidate, lexicons):
    first, last = candidate
    if rule == "discourse_connective":
        return match_discourse_connective(
            doc.sentences[first], doc.sentences[last], lexicons)
    if rule == "anaphora":
        return rules.match_and_generate_anaphora(
            doc.sentences[first], doc.sentences[last], doc.clusters,
            a_index=first, b_index=last)
    z = doc.sentences[first]
    if rule == "forward_connective":
        return rules.match_forward_connective(z, lexicons)
    if rule == "inner_connective":
        return rules.match_inner_connective(z, lexicons)
    if rule == "cataphora":
        return rules.match_generate_cataphora(z)
    if rule == "sentence_coordination":
        return rules.match_generate_sentence_coordination(z)
    if rule == "vp_coordination":
        return rules.match_generate_vp_coordination(z)
    if rule == "relative_clause":
        return rules.match_generate_relative_clause(z, lexicons)
    if rule == "apposition":
        return rules.match_generate_apposition(z)
    raise ValueError(rule)


GOLDEN_IDS = [
    "golden:discourse_connective", "golden:anaphora",
    "golden:forward_connective", "golden:inner_connective",
    "golden:cataphora", "golden:sentence_coordination",
    "golden:vp_coordination", "golden:relative_clause",
    "golden:apposition", "golden:apposition_tradition",
    "golden:two_rule_trace",
    "derived:by_then", "derived:forward_participle",
    "derived:cataphora_span", "derived:relative_np",
    "derived:vp_subject_prefix", "derived:coordination_anaphora",
    "derived:discourse_anaphora", "derived:double_mention",
]


@pytest.mark.parametrize("doc_id", GOLDEN_IDS)
def test_golden_fixture(doc_id, golden_docs, golden_expected, lexicons):
    doc = golden_docs[doc_id]
    exp = golden_expected[doc_id]
    outcome = run_engine(doc, exp["candidate"], lexicons)
    assert outcome is not None, doc_id
    assert " ".join(texts(outcome.sentence_1)) == exp["sentence_1"]
    assert " ".join(texts(outcome.sentence_2)) == exp["sentence_2"]
    assert discourse_type_of(outcome.applied_rules).value == exp["type"]
    assert outcome.connective == exp["connective"]
    assert outcome.coref_pronoun == exp["coref_pronoun"]
    assert outcome.coref_nominal == exp["coref_nominal"]


def test_negative_fixtures(negative_docs, negative_expected, lexicons):
    assert len(negative_expected) >= 27
    for doc_id, exp in negative_expected.items():
        doc = negative_docs[doc_id]
        result = run_matcher(exp["rule"], doc, exp["candidate"], lexicons)
        assert result is None, doc_id


def test_negative_coverage_per_rule(negative_expected):
    per_rule = {}
    for exp in negative_expected.values():
        per_rule[exp["rule"]] = per_rule.get(exp["rule"], 0) + 1
    for rule_id in RuleId:
        assert per_rule.get(rule_id.value, 0) >= 3, rule_id


class TestDiscourseConnectiveMatching:
    def test_match_records_entry_length(self, golden_docs, lexicons):
        doc = golden_docs["derived:by_then"]
        m = match_discourse_connective(doc.sentences[0], doc.sentences[1], lexicons)
        assert m is not None
        assert (m.start, m.length, m.connective) == (1, 2, "by then")

    def test_smallest_offset_wins(self, golden_docs, lexicons):
        # "by then" at offset 1 beats "then ," at offset 2
        doc = golden_docs["derived:by_then"]
        m = match_discourse_connective(doc.sentences[0], doc.sentences[1], lexicons)
        assert m.start == 1

    def test_case_insensitive_only_sentence_initially(self, lexicons):
        a = AnnotatedSentence.build(_annot("The rain fell hard ."))
        b1 = AnnotatedSentence.build(_annot("However the rain stopped ."))
        assert match_discourse_connective(a, b1, lexicons) is not None
        # capitalized connective past position 1 is not matched
        b2 = AnnotatedSentence.build(_annot("He said However rain stopped ."))
        assert match_discourse_connective(a, b2, lexicons) is None

    def test_comma_suffixed_entry_matches_comma_free_at_start(self, lexicons):
        a = AnnotatedSentence.build(_annot("The rain fell hard ."))
        b = AnnotatedSentence.build(_annot("Moreover the field flooded badly ."))
        m = match_discourse_connective(a, b, lexicons)
        assert m is not None and m.connective == "moreover"

    def test_fragments_never_match(self, golden_docs, lexicons):
        doc = golden_docs["golden:discourse_connective"]
        frag = AnnotatedSentence(tokens=doc.sentences[1].tokens, is_fragment=True)
        assert match_discourse_connective(doc.sentences[0], frag, lexicons) is None


class TestForwardConnective:
    def test_split_point_is_first_valid_comma(self, golden_docs, lexicons):
        doc = golden_docs["golden:forward_connective"]
        m = match_forward_connective(doc.sentences[0], lexicons)
        assert (m.start, m.length, m.clause_open) == (1, 1, 8)

    def test_comma_right_after_connective_rejected(self, lexicons):
        z = AnnotatedSentence.build(_annot("Although , he left early ."))
        assert match_forward_connective(z, lexicons) is None


class TestInnerConnective:
    def test_leftmost_longest(self, lexicons):
        z = AnnotatedSentence.build(
            _annot("He waited , because the road flooded ."))
        m = match_inner_connective(z, lexicons)
        # ", because" starts one token before "because" and wins
        assert (m.start, m.length, m.connective) == (3, 2, "because")

    def test_sentence_initial_match_aborts_generation(self, lexicons):
        z = AnnotatedSentence.build(
            _annot("Because the road flooded he waited ."))
        m = match_inner_connective(z, lexicons)
        assert m is not None and m.start == 1
        assert rules.generate_inner_connective(z, m) is None


class TestPriorities:
    def test_forward_beats_inner_on_shared_connective(self, golden_docs, lexicons):
        doc = golden_docs["golden:forward_connective"]
        outcome = run_engine(doc, [0, 0], lexicons)
        assert outcome.applied_rules == (RuleId.FORWARD_CONNECTIVE,)

    def test_intervening_subject_routes_to_sentence_coordination(
            self, golden_docs, lexicons):
        doc = golden_docs["golden:sentence_coordination"]
        z = doc.sentences[0]
        assert rules.match_generate_vp_coordination(z) is None
        outcome = run_engine(doc, [0, 0], lexicons)
        assert outcome.applied_rules == (RuleId.SENTENCE_COORDINATION,)

    def test_no_subject_routes_to_vp_coordination(self, golden_docs, lexicons):
        doc = golden_docs["golden:vp_coordination"]
        z = doc.sentences[0]
        assert rules.match_generate_sentence_coordination(z) is None
        outcome = run_engine(doc, [0, 0], lexicons)
        assert outcome.applied_rules == (RuleId.VP_COORDINATION,)

    def test_apposition_checked_before_relative(self, golden_docs, lexicons):
        doc = golden_docs["golden:apposition"]
        outcome = run_engine(doc, [0, 0], lexicons)
        assert outcome.applied_rules == (RuleId.APPOSITION,)

    def test_generation_abort_falls_through_to_later_rules(
            self, negative_docs, lexicons):
        # a possessive relative aborts; nothing later matches either
        doc = negative_docs["neg:relative_clause:possessive_relative"]
        assert run_engine(doc, [0, 0], lexicons) is None


class TestEngineHygiene:
    def test_deterministic(self, golden_docs, golden_expected, lexicons):
        for doc_id, exp in golden_expected.items():
            doc = golden_docs[doc_id]
            first = run_engine(doc, exp["candidate"], lexicons)
            second = run_engine(doc, exp["candidate"], lexicons)
            assert first == second

    def test_matching_is_read_only(self, golden_docs, golden_expected, lexicons):
        for doc_id, exp in golden_expected.items():
            doc = golden_docs[doc_id]
            snapshots = [tuple(s.tokens) for s in doc.sentences]
            run_engine(doc, exp["candidate"], lexicons)
            assert [tuple(s.tokens) for s in doc.sentences] == snapshots

    def test_connective_stripped_from_output(
            self, golden_docs, golden_expected, lexicons):
        for doc_id, exp in golden_expected.items():
            if not exp["connective"]:
                continue
            doc = golden_docs[doc_id]
            outcome = run_engine(doc, exp["candidate"], lexicons)
            out_words = [t.lower() for t in
                         texts(outcome.sentence_1) + texts(outcome.sentence_2)]
            joined = " ".join(out_words)
            assert " %s " % exp["connective"] not in " %s " % joined, doc_id

    def test_outcome_invariants_enforced(self):
        good = tokens_from_texts("The race ended .".split())
        no_period = tokens_from_texts("The race ended".split())
        lowercase = tokens_from_texts("the race ended .".split())
        GenerationOutcome(sentence_1=good, sentence_2=good,
                          applied_rules=(RuleId.APPOSITION,))
        with pytest.raises(Exception):
            GenerationOutcome(sentence_1=no_period, sentence_2=good,
                              applied_rules=(RuleId.APPOSITION,))
        with pytest.raises(Exception):
            GenerationOutcome(sentence_1=good, sentence_2=lowercase,
                              applied_rules=(RuleId.APPOSITION,))


class TestCombineWithAnaphora:
    def test_rejects_uncombinable_base(self):
        good = tokens_from_texts("The race ended .".split())
        base = GenerationOutcome(sentence_1=good, sentence_2=good,
                                 applied_rules=(RuleId.APPOSITION,))
        ctx = AnaphoraContext.for_pair(
            AnnotatedSentence.build(_annot("The race ended .")), 0,
            AnnotatedSentence.build(_annot("The crowd left .")), 1)
        with pytest.raises(ValueError):
            combine_with_anaphora(base, MentionClusterSet(), context=ctx)

    def test_no_mentions_is_identity(self, golden_docs, lexicons):
        doc = golden_docs["golden:inner_connective"]
        z = doc.sentences[0]
        m = match_inner_connective(z, lexicons)
        base = rules.generate_inner_connective(z, m)
        ctx = AnaphoraContext.for_split(z, 0, base.split_index)
        assert combine_with_anaphora(base, doc.clusters, context=ctx) == base


class TestTwoRuleTrace:
    """Step-by-step decomposition of the possessive-anaphora fixture."""

    def test_intermediate_states(self, golden_docs):
        doc = golden_docs["golden:two_rule_trace"]
        z = doc.sentences[0].tokens
        a_side, b_side = split(z, 9)
        assert " ".join(texts(a_side)) == \
            "Ruiz ordered his first shot to be retaken"
        assert texts(b_side)[0] == "because"
        b_side = delete(b_side, 1, 1)
        assert " ".join(texts(b_side)) == \
            "Brazilian players entered the penalty area before his kick ."
        assert trim(b_side) == b_side  # only the final period qualifies
        replaced = replace(b_side, ["his"],
                           (Token("Ruiz", pos="NNP"), Token("'s", pos="POS")))
        assert " ".join(texts(replaced)) == \
            "Brazilian players entered the penalty area before Ruiz 's kick ."

    def test_first_sentence_keeps_its_pronoun(
            self, golden_docs, golden_expected, lexicons):
        doc = golden_docs["golden:two_rule_trace"]
        outcome = run_engine(doc, [0, 0], lexicons)
        assert "his" in texts(outcome.sentence_1)
        assert "his" not in texts(outcome.sentence_2)


def _annot(text):
    """Flat parse for matcher-level tests that only read surface tokens."""
    words = text.split()
    out = []
    for i, w in enumerate(words):
        if i == 0:
            out.append(Token(w, deprel="root"))
        else:
            out.append(Token(w, deprel="dep", head=1))
    return tuple(out)
