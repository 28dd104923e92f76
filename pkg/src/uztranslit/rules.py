"""Contextual rewrite rules and one-to-one character maps for all six directions.

Each ordered alphabet pair gets a RuleSet: an ordered list of contextual
rules applied left to right (first match at a position wins, matched input
is consumed) followed by a character map for everything else.  Unknown
characters pass through untouched.

Rule groups — one letter phenomenon counted once, both cases and all
context variants collapsed — number 11 for Latin↔Cyrillic, 6 for
New-Latin↔Cyrillic (ş/ç/ō/ḡ/ñ ride in the character map there), and 5 for
Latin↔New-Latin.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import permutations
from typing import Mapping

from .alphabets import (
    GLOTTAL_STOP,
    OKINA,
    Alphabet,
    CharClass,
    classify_char,
    letters,
)


class LeftContext(enum.Enum):
    #: Word boundary or a preceding vowel.
    START_OR_VOWEL = "start_or_vowel"
    #: Word boundary, preceding vowel, or the Cyrillic soft sign (the
    #: iotation context of е).
    START_VOWEL_OR_SOFT = "start_vowel_or_soft"
    #: A preceding vowel only.
    VOWEL = "vowel"


class RightContext(enum.Enum):
    VOWEL = "vowel"


@dataclass(frozen=True)
class ContextRule:
    """One rewrite: a literal lowercase pattern, optional contexts, a group tag."""

    pattern: str
    replacement: str
    group: str
    left: LeftContext | None = None
    right: RightContext | None = None


@dataclass(frozen=True)
class RuleSet:
    """All conversion data for one ordered direction."""

    source: Alphabet
    target: Alphabet
    rules: tuple[ContextRule, ...]
    char_map: Mapping[str, str]
    _map_unit_lengths: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        lengths = sorted({len(k) for k in self.char_map}, reverse=True)
        object.__setattr__(self, "_map_unit_lengths", tuple(lengths))

    @property
    def rule_groups(self) -> tuple[str, ...]:
        """Group tags in first-appearance order."""
        seen: dict[str, None] = {}
        for rule in self.rules:
            seen.setdefault(rule.group, None)
        return tuple(seen)


def _rules(*specs: tuple) -> tuple[ContextRule, ...]:
    """Build rules from (pattern, replacement, group[, left[, right]]) tuples,
    longest pattern first, declaration order preserved within a length."""
    built = [ContextRule(*spec) for spec in specs]
    return tuple(sorted(built, key=lambda r: -len(r.pattern)))


_SV = LeftContext.START_OR_VOWEL
_YE = LeftContext.START_VOWEL_OR_SOFT
_V = LeftContext.VOWEL
_RV = RightContext.VOWEL

# --- Cyrillic -> Latin (11 groups) -------------------------------------------

_CYR_LAT_RULES = _rules(
    ("е", "ye", "e-ye", _YE),
    ("е", "e", "e-ye"),
    ("ё", "yo", "yo"),
    ("ю", "yu", "yu"),
    ("я", "ya", "ya"),
    ("ц", "ts", "ts", _V),
    ("ц", "s", "ts"),
    ("ш", "sh", "sh"),
    ("ч", "ch", "ch"),
    ("нг", "ng", "ng"),
    ("ў", "o" + OKINA, "o-okina"),
    ("ғ", "g" + OKINA, "g-okina"),
    ("ъ", GLOTTAL_STOP, "glottal"),
)

_CYR_LAT_MAP = {
    "а": "a", "б": "b", "в": "v", "г": "g", "д": "d", "ж": "j", "з": "z",
    "и": "i", "й": "y", "к": "k", "л": "l", "м": "m", "н": "n", "о": "o",
    "п": "p", "р": "r", "с": "s", "т": "t", "у": "u", "ф": "f", "х": "x",
    "э": "e", "қ": "q", "ҳ": "h",
    # The soft sign vanishes; words that cannot survive that live in the
    # exception lexicon.
    "ь": "",
}

# --- Latin -> Cyrillic (11 groups) -------------------------------------------

_LAT_CYR_RULES = _rules(
    ("ye", "е", "e-ye", _SV),
    ("e", "э", "e-ye", _SV),
    ("e", "е", "e-ye"),
    ("yo", "ё", "yo"),
    ("yu", "ю", "yu"),
    ("ya", "я", "ya"),
    ("ts", "ц", "ts", _V, _RV),
    ("sh", "ш", "sh"),
    ("ch", "ч", "ch"),
    ("ng", "нг", "ng"),
    ("o" + OKINA, "ў", "o-okina"),
    ("g" + OKINA, "ғ", "g-okina"),
    (GLOTTAL_STOP, "ъ", "glottal"),
)

_LAT_CYR_MAP = {
    "a": "а", "b": "б", "d": "д", "f": "ф", "g": "г", "h": "ҳ", "i": "и",
    "j": "ж", "k": "к", "l": "л", "m": "м", "n": "н", "o": "о", "p": "п",
    "q": "қ", "r": "р", "s": "с", "t": "т", "u": "у", "v": "в", "x": "х",
    "y": "й", "z": "з",
}

# --- Cyrillic -> New Latin (6 groups) ----------------------------------------

_CYR_NEWLAT_RULES = _rules(
    ("е", "ye", "e-ye", _YE),
    ("е", "e", "e-ye"),
    ("ё", "yo", "yo"),
    ("ю", "yu", "yu"),
    ("я", "ya", "ya"),
    ("ц", "ts", "ts", _V),
    ("ц", "s", "ts"),
    ("ъ", GLOTTAL_STOP, "glottal"),
)

_CYR_NEWLAT_MAP = dict(_CYR_LAT_MAP) | {
    "ш": "ş", "ч": "ç", "ў": "ō", "ғ": "ḡ",
    # The velar-nasal digraph becomes a single letter; the two-character
    # unit keeps this in the map layer rather than the contextual rules.
    "нг": "ñ",
}

# --- New Latin -> Cyrillic (6 groups) ----------------------------------------

_NEWLAT_CYR_RULES = _rules(
    ("ye", "е", "e-ye", _SV),
    ("e", "э", "e-ye", _SV),
    ("e", "е", "e-ye"),
    ("yo", "ё", "yo"),
    ("yu", "ю", "yu"),
    ("ya", "я", "ya"),
    ("ts", "ц", "ts", _V, _RV),
    (GLOTTAL_STOP, "ъ", "glottal"),
)

_NEWLAT_CYR_MAP = dict(_LAT_CYR_MAP) | {
    "ş": "ш", "ç": "ч", "ō": "ў", "ḡ": "ғ", "ñ": "нг",
}

# --- Latin <-> New Latin (5 groups) ------------------------------------------

_LAT_NEWLAT_RULES = _rules(
    ("sh", "ş", "sh"),
    ("ch", "ç", "ch"),
    ("o" + OKINA, "ō", "o-okina"),
    ("g" + OKINA, "ḡ", "g-okina"),
    ("ng", "ñ", "ng"),
)

_NEWLAT_LAT_RULES = _rules(
    ("ş", "sh", "sh"),
    ("ç", "ch", "ch"),
    ("ō", "o" + OKINA, "o-okina"),
    ("ḡ", "g" + OKINA, "g-okina"),
    ("ñ", "ng", "ng"),
)


def _identity_map(alphabet: Alphabet) -> dict[str, str]:
    return {c: c for c in sorted(letters(alphabet))}


_LAT_NEWLAT_MAP = _identity_map(Alphabet.LATIN)
_NEWLAT_LAT_MAP = _identity_map(Alphabet.NEW_LATIN)


_RULESETS: dict[tuple[Alphabet, Alphabet], RuleSet] = {
    (Alphabet.CYRILLIC, Alphabet.LATIN): RuleSet(
        Alphabet.CYRILLIC, Alphabet.LATIN, _CYR_LAT_RULES, _CYR_LAT_MAP),
    (Alphabet.LATIN, Alphabet.CYRILLIC): RuleSet(
        Alphabet.LATIN, Alphabet.CYRILLIC, _LAT_CYR_RULES, _LAT_CYR_MAP),
    (Alphabet.CYRILLIC, Alphabet.NEW_LATIN): RuleSet(
        Alphabet.CYRILLIC, Alphabet.NEW_LATIN, _CYR_NEWLAT_RULES, _CYR_NEWLAT_MAP),
    (Alphabet.NEW_LATIN, Alphabet.CYRILLIC): RuleSet(
        Alphabet.NEW_LATIN, Alphabet.CYRILLIC, _NEWLAT_CYR_RULES, _NEWLAT_CYR_MAP),
    (Alphabet.LATIN, Alphabet.NEW_LATIN): RuleSet(
        Alphabet.LATIN, Alphabet.NEW_LATIN, _LAT_NEWLAT_RULES, _LAT_NEWLAT_MAP),
    (Alphabet.NEW_LATIN, Alphabet.LATIN): RuleSet(
        Alphabet.NEW_LATIN, Alphabet.LATIN, _NEWLAT_LAT_RULES, _NEWLAT_LAT_MAP),
}

#: Expected rule-group counts (direction-symmetric), asserted at import.
RULE_GROUP_COUNTS: dict[frozenset[Alphabet], int] = {
    frozenset({Alphabet.LATIN, Alphabet.NEW_LATIN}): 5,
    frozenset({Alphabet.NEW_LATIN, Alphabet.CYRILLIC}): 6,
    frozenset({Alphabet.LATIN, Alphabet.CYRILLIC}): 11,
}

for _dir, _rs in _RULESETS.items():
    _expected = RULE_GROUP_COUNTS[frozenset(_dir)]
    if len(_rs.rule_groups) != _expected:
        raise AssertionError(
            f"rule data corrupt: {_dir[0].value}->{_dir[1].value} has "
            f"{len(_rs.rule_groups)} groups, expected {_expected}"
        )


def ruleset_for(source: Alphabet, target: Alphabet) -> RuleSet:
    """Static RuleSet for one ordered direction; identity directions error."""
    if source is target:
        raise ValueError(f"no ruleset for the identity direction {source.value}->{source.value}")
    return _RULESETS[(source, target)]


def _is_cased(ch: str) -> bool:
    return ch.isupper() or ch.islower()


def _adjacent_upper(word: str, start: int, end: int) -> bool | None:
    """Case of the nearest cased character after the span, else before it."""
    for k in range(end, len(word)):
        if _is_cased(word[k]):
            return word[k].isupper()
    for k in range(start - 1, -1, -1):
        if _is_cased(word[k]):
            return word[k].isupper()
    return None


def render_digraph_case(replacement: str, source_is_upper: bool, adjacent_upper: bool | None) -> str:
    """Case-render a multi-character replacement of an uppercase source letter.

    An uppercase neighbour (next letter if any, else previous) makes the
    whole replacement uppercase (acronyms: АҚШ -> AQSH); otherwise only the
    first character is uppercased (Шўрва -> Shoʻrva).
    """
    if not source_is_upper:
        return replacement
    if adjacent_upper:
        return replacement.upper()
    return replacement[:1].upper() + replacement[1:]


def _render(word: str, start: int, end: int, replacement: str) -> str:
    if not replacement:
        return ""
    matched = word[start:end]
    first_cased = next((c for c in matched if _is_cased(c)), None)
    if first_cased is None or first_cased.islower():
        return replacement
    if len(replacement) == 1:
        return replacement.upper()
    return render_digraph_case(replacement, True, _adjacent_upper(word, start, end))


def _splits_okina(word: str, start: int, end: int) -> bool:
    # Reject a match whose last character is an okina carrier while the okina
    # itself sits just outside the span: in "yoʻl" the o belongs to oʻ, so
    # the yo rule must not fire; same for "ng" in "toʻngʻich".
    return (
        end < len(word)
        and word[end] == OKINA
        and word[end - 1].lower() in ("o", "g")
    )


def _left_satisfied(word: str, i: int, ctx: LeftContext, source: Alphabet) -> bool:
    at_start = i == 0
    if at_start:
        return ctx in (LeftContext.START_OR_VOWEL, LeftContext.START_VOWEL_OR_SOFT)
    prev = word[i - 1]
    if prev == OKINA and i >= 2:
        prev = word[i - 2]
    if ctx is LeftContext.START_VOWEL_OR_SOFT and prev.lower() == "ь":
        return True
    return classify_char(prev, source) is CharClass.VOWEL


def _right_satisfied(word: str, end: int, ctx: RightContext, source: Alphabet) -> bool:
    return end < len(word) and classify_char(word[end], source) is CharClass.VOWEL


def _match_at(word: str, i: int, ruleset: RuleSet) -> tuple[int, str] | None:
    """Return (consumed length, lowercase replacement) for position i."""
    for rule in ruleset.rules:
        end = i + len(rule.pattern)
        if word[i:end].lower() != rule.pattern:
            continue
        if _splits_okina(word, i, end):
            continue
        if rule.left is not None and not _left_satisfied(word, i, rule.left, ruleset.source):
            continue
        if rule.right is not None and not _right_satisfied(word, end, rule.right, ruleset.source):
            continue
        return len(rule.pattern), rule.replacement
    for length in ruleset._map_unit_lengths:
        end = i + length
        if end > len(word):
            continue
        unit = word[i:end].lower()
        replacement = ruleset.char_map.get(unit)
        if replacement is None or _splits_okina(word, i, end):
            continue
        return length, replacement
    return None


def apply_rules(word: str, ruleset: RuleSet) -> str:
    """Convert one word token: single left-to-right pass, rules before map,
    unknown characters untouched."""
    out: list[str] = []
    i = 0
    while i < len(word):
        match = _match_at(word, i, ruleset)
        if match is None:
            out.append(word[i])
            i += 1
            continue
        length, replacement = match
        out.append(_render(word, i, i + length, replacement))
        i += length
    return "".join(out)


def rule_table_dump(source: Alphabet, target: Alphabet) -> str:
    """Human-readable listing of one direction's rule groups and character map."""
    ruleset = ruleset_for(source, target)
    lines = [f"ruleset: {source.value} → {target.value}"]

    by_group: dict[str, list[ContextRule]] = {}
    for rule in ruleset.rules:
        by_group.setdefault(rule.group, []).append(rule)
    lines.append(f"contextual rule groups ({len(by_group)}):")
    for group in ruleset.rule_groups:
        variants = by_group[group]
        contextual = any(v.left is not None or v.right is not None for v in variants)
        patterns = {v.pattern for v in variants}
        if len(patterns) == 1:
            body = f"{variants[0].pattern} → " + " | ".join(v.replacement or "∅" for v in variants)
        else:
            body = " | ".join(f"{v.pattern} → {v.replacement or '∅'}" for v in variants)
        lines.append(f"  {body}{' (context)' if contextual else ''}")

    if all(k == v for k, v in ruleset.char_map.items()):
        lines.append("character map: identity for all remaining letters")
    else:
        lines.append(f"character map ({len(ruleset.char_map)}):")
        for pattern in sorted(ruleset.char_map):
            lines.append(f"  {pattern} → {ruleset.char_map[pattern] or '∅'}")
    return "\n".join(lines)
