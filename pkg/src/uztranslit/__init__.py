"""Transliteration between the three Uzbek scripts: Cyrillic, Latin, new Latin."""

from .alphabets import (
    GLOTTAL_STOP,
    OKINA,
    Alphabet,
    CaseClass,
    CharClass,
    classify_case,
    classify_char,
    normalize_apostrophes,
)
from .evaluation import (
    EvalReport,
    ParallelLexicon,
    evaluate,
    load_parallel_lexicon,
    load_parallel_lexicon_path,
    micro_f1,
    render_scores,
    report_render,
)
from .lexicon import (
    ExceptionEntry,
    ExceptionLexicon,
    LexiconFormatError,
    apply_exception,
    load_default_lexicon,
    load_lexicon,
    load_lexicon_path,
)
from .pipeline import Transliterator, TranslitOptions, transliterate
from .rules import (
    ContextRule,
    RuleSet,
    apply_rules,
    render_digraph_case,
    rule_table_dump,
    ruleset_for,
)
from .tokenizer import Token, TokenKind, reunite, tokenize

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CaseClass",
    "CharClass",
    "ContextRule",
    "EvalReport",
    "ExceptionEntry",
    "ExceptionLexicon",
    "GLOTTAL_STOP",
    "LexiconFormatError",
    "OKINA",
    "ParallelLexicon",
    "RuleSet",
    "Token",
    "TokenKind",
    "Transliterator",
    "TranslitOptions",
    "apply_exception",
    "apply_rules",
    "classify_case",
    "classify_char",
    "evaluate",
    "load_default_lexicon",
    "load_lexicon",
    "load_lexicon_path",
    "load_parallel_lexicon",
    "load_parallel_lexicon_path",
    "micro_f1",
    "normalize_apostrophes",
    "render_digraph_case",
    "render_scores",
    "report_render",
    "reunite",
    "rule_table_dump",
    "ruleset_for",
    "tokenize",
    "transliterate",
]
