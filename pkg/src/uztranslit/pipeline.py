"""End-to-end transliteration: normalize, tokenize, exceptions, rules, reunite."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .alphabets import Alphabet, classify_case, normalize_apostrophes
from .lexicon import ExceptionLexicon, apply_exception, load_default_lexicon
from .rules import RULE_GROUP_COUNTS, RuleSet, apply_rules, ruleset_for
from .tokenizer import TokenKind, tokenize


@dataclass(frozen=True)
class TranslitOptions:
    source: Alphabet
    target: Alphabet
    normalize_apostrophes: bool = True


class Transliterator:
    """Immutable engine holding one lexicon and all six rulesets.

    Safe for unrestricted concurrent use once constructed.
    """

    def __init__(self, lexicon: ExceptionLexicon | None = None):
        self.lexicon = lexicon if lexicon is not None else load_default_lexicon()
        self.rulesets: dict[tuple[Alphabet, Alphabet], RuleSet] = {
            (source, target): ruleset_for(source, target)
            for source, target in permutations(Alphabet, 2)
        }
        for (source, target), ruleset in self.rulesets.items():
            expected = RULE_GROUP_COUNTS[frozenset({source, target})]
            if len(ruleset.rule_groups) != expected:
                raise ValueError(
                    f"{source.value}->{target.value} ruleset has "
                    f"{len(ruleset.rule_groups)} rule groups, expected {expected}"
                )

    def transliterate_word(self, word: str, source: Alphabet, target: Alphabet) -> str:
        """Convert one word token, exception lexicon first, rules otherwise."""
        if source is target:
            return word
        ruleset = self.rulesets[(source, target)]
        case = classify_case(word)
        hit = self.lexicon.match_prefix(word.lower(), source)
        if hit is not None:
            entry, suffix = hit
            return apply_exception(word, entry, apply_rules(suffix, ruleset), target, case)
        return apply_rules(word, ruleset)

    def transliterate(self, text: str, options: TranslitOptions) -> str:
        """Convert a whole buffer; non-word spans pass through untouched."""
        if options.normalize_apostrophes:
            text = normalize_apostrophes(text)
        if options.source is options.target:
            return text
        pieces = [
            self.transliterate_word(token.text, options.source, options.target)
            if token.kind is TokenKind.WORD
            else token.text
            for token in tokenize(text)
        ]
        return "".join(pieces)


@lru_cache(maxsize=1)
def default_transliterator() -> Transliterator:
    return Transliterator()


def transliterate(
    text: str,
    source: Alphabet,
    target: Alphabet,
    *,
    normalize: bool = True,
    transliterator: Transliterator | None = None,
) -> str:
    """Convenience wrapper over a shared default engine."""
    engine = transliterator if transliterator is not None else default_transliterator()
    return engine.transliterate(text, TranslitOptions(source, target, normalize))
