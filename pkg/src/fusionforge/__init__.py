"""fusionforge: rule-based construction and evaluation of sentence-fusion
datasets from dependency-annotated text."""

from .core import (
    AnnotatedSentence,
    AnnotationError,
    DiscourseType,
    Document,
    FusionExample,
    LexiconError,
    Lexicons,
    Mention,
    MentionClusterSet,
    Provenance,
    Token,
    default_lexicons,
    load_lexicons,
    mention_pairs,
)
from .editops import delete, prepend, replace, split, trim
from .metrics import align_tokens, analyze, exact_match, sari
from .pipeline import (
    PipelineConfig,
    assign_split,
    audit_example,
    compute_stats,
    downsample,
    enumerate_candidates,
    generate_example,
    ingest,
    run_generate,
)
from .rules import (
    EngineConfig,
    GenerationOutcome,
    RuleId,
    RuleMatch,
    generate_from_pair,
    generate_from_single,
)

__version__ = "0.1.0"
