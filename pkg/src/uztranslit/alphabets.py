"""Alphabet inventories, character classes, case classes, apostrophe canonicalisation.

Uzbek is written in three scripts: Cyrillic, the 1995 Latin alphabet (with
the digraphs sh/ch/ng and the turned-comma letters oʻ/gʻ), and the reformed
"new" Latin alphabet of 2021 that replaces those digraphs with single
letters (ş, ç, ñ, ō, ḡ).  Everything downstream operates on the canonical
code points defined here.
"""

from __future__ import annotations

import enum
import unicodedata

#: MODIFIER LETTER TURNED COMMA — the hook of the Latin letters oʻ and gʻ.
OKINA = "ʻ"

#: MODIFIER LETTER APOSTROPHE — the tutuq belgisi (glottal stop letter).
GLOTTAL_STOP = "ʼ"


class Alphabet(enum.Enum):
    """One of the three Uzbek scripts."""

    CYRILLIC = "cyrillic"
    LATIN = "latin"
    NEW_LATIN = "new_latin"

    @property
    def token(self) -> str:
        """Lowercase snake-case name used on the CLI and the wire."""
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "Alphabet":
        try:
            return cls(token)
        except ValueError:
            valid = ", ".join(a.value for a in cls)
            raise ValueError(f"unknown alphabet {token!r}; valid names: {valid}") from None


class CharClass(enum.Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    MODIFIER_APOSTROPHE = "modifier_apostrophe"
    GLOTTAL_STOP = "glottal_stop"
    NON_LETTER = "non_letter"


class CaseClass(enum.Enum):
    LOWER = "lower"
    TITLE = "title"
    ALL_CAPS = "all_caps"
    MIXED = "mixed"
    CASELESS = "caseless"


_CYRILLIC_VOWELS = frozenset("аеёиоуэюяў")
_CYRILLIC_CONSONANTS = frozenset("бвгджзйклмнпрстфхцчшқғҳ")

# Bare "c" is listed as a Latin consonant: it occurs as the first half of the
# ch digraph and must count as a word character.
_LATIN_VOWELS = frozenset("aeiou")
_LATIN_CONSONANTS = frozenset("bcdfghjklmnpqrstvxyz")

_NEW_LATIN_VOWELS = frozenset("aeiouō")
_NEW_LATIN_CONSONANTS = frozenset("bdfghjklmnpqrstvxyzçşñḡ")

_VOWELS = {
    Alphabet.CYRILLIC: _CYRILLIC_VOWELS,
    Alphabet.LATIN: _LATIN_VOWELS,
    Alphabet.NEW_LATIN: _NEW_LATIN_VOWELS,
}
_CONSONANTS = {
    Alphabet.CYRILLIC: _CYRILLIC_CONSONANTS,
    Alphabet.LATIN: _LATIN_CONSONANTS,
    Alphabet.NEW_LATIN: _NEW_LATIN_CONSONANTS,
}
# The Cyrillic soft sign modifies the preceding consonant; the okina modifies
# o/g.  Neither exists in the new Latin alphabet.
_MODIFIERS = {
    Alphabet.CYRILLIC: frozenset("ь"),
    Alphabet.LATIN: frozenset(OKINA),
    Alphabet.NEW_LATIN: frozenset(),
}
_GLOTTALS = {
    Alphabet.CYRILLIC: frozenset("ъ"),
    Alphabet.LATIN: frozenset(GLOTTAL_STOP),
    Alphabet.NEW_LATIN: frozenset(GLOTTAL_STOP),
}


def classify_char(ch: str, alphabet: Alphabet) -> CharClass:
    """Classify one code point against one alphabet's inventory.

    Total over all of Unicode: anything outside the alphabet is NON_LETTER.
    """
    low = ch.lower()
    if low in _VOWELS[alphabet]:
        return CharClass.VOWEL
    if low in _CONSONANTS[alphabet]:
        return CharClass.CONSONANT
    if low in _MODIFIERS[alphabet]:
        return CharClass.MODIFIER_APOSTROPHE
    if low in _GLOTTALS[alphabet]:
        return CharClass.GLOTTAL_STOP
    return CharClass.NON_LETTER


def letters(alphabet: Alphabet) -> frozenset[str]:
    """Lowercase letter inventory of one alphabet, modifiers included."""
    return frozenset(
        _VOWELS[alphabet] | _CONSONANTS[alphabet] | _MODIFIERS[alphabet] | _GLOTTALS[alphabet]
    )


def _both_cases(chars: frozenset[str]) -> frozenset[str]:
    return frozenset(chars) | frozenset(c.upper() for c in chars)


#: Word characters that always belong to a word: every proper letter of the
#: three alphabets (okina and glottal stop are handled positionally by the
#: tokenizer and are not in this set).
WORD_LETTERS: frozenset[str] = _both_cases(
    frozenset().union(*(_VOWELS[a] | _CONSONANTS[a] for a in Alphabet))
    | frozenset("ъь")
)

#: The two apostrophe letters; word members only when letter-adjacent.
APOSTROPHE_LETTERS: frozenset[str] = frozenset({OKINA, GLOTTAL_STOP})


def classify_case(word: str) -> CaseClass:
    """Case shape of a word.

    A single uppercase letter counts as TITLE, not ALL_CAPS: acronym
    behaviour needs at least two letters of evidence.
    """
    if not word:
        raise ValueError("cannot classify the case of an empty word")
    cased = [c for c in word if c.isupper() or c.islower()]
    if not cased:
        return CaseClass.CASELESS
    if all(c.islower() for c in cased):
        return CaseClass.LOWER
    if all(c.isupper() for c in cased):
        return CaseClass.ALL_CAPS if len(cased) >= 2 else CaseClass.TITLE
    if cased[0].isupper() and all(c.islower() for c in cased[1:]):
        return CaseClass.TITLE
    return CaseClass.MIXED


#: Characters users type where oʻ/gʻ/ʼ are meant.
_APOSTROPHE_LIKE = frozenset({"'", "`", "‘", "’", OKINA, GLOTTAL_STOP})
_OKINA_CARRIERS = frozenset("oOgG")


def normalize_apostrophes(text: str) -> str:
    """Bring apostrophe soup to the canonical letters.

    The input is first composed (NFC).  Any apostrophe-like character
    (', `, ', ', ʻ, ʼ) directly after Latin o/g becomes the okina U+02BB;
    any remaining one flanked by letters on both sides becomes the glottal
    stop U+02BC; everything else is left alone (plain punctuation).
    Idempotent.
    """
    text = unicodedata.normalize("NFC", text)
    out = list(text)
    for i, ch in enumerate(text):
        if ch not in _APOSTROPHE_LIKE:
            continue
        prev = text[i - 1] if i > 0 else ""
        if prev in _OKINA_CARRIERS:
            out[i] = OKINA
        elif prev in WORD_LETTERS and i + 1 < len(text) and text[i + 1] in WORD_LETTERS:
            out[i] = GLOTTAL_STOP
    return "".join(out)
