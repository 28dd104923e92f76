"""Character classes, case classes, apostrophe canonicalisation."""

from __future__ import annotations

import unicodedata

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uztranslit import (
    GLOTTAL_STOP,
    OKINA,
    Alphabet,
    CaseClass,
    CharClass,
    classify_case,
    classify_char,
    normalize_apostrophes,
)
from uztranslit.alphabets import letters


class TestClassifyChar:
    @pytest.mark.parametrize(
        ("ch", "alphabet", "expected"),
        [
            ("а", Alphabet.CYRILLIC, CharClass.VOWEL),
            ("ў", Alphabet.CYRILLIC, CharClass.VOWEL),
            ("қ", Alphabet.CYRILLIC, CharClass.CONSONANT),
            ("ъ", Alphabet.CYRILLIC, CharClass.GLOTTAL_STOP),
            ("ь", Alphabet.CYRILLIC, CharClass.MODIFIER_APOSTROPHE),
            (GLOTTAL_STOP, Alphabet.LATIN, CharClass.GLOTTAL_STOP),
            (OKINA, Alphabet.LATIN, CharClass.MODIFIER_APOSTROPHE),
            ("c", Alphabet.LATIN, CharClass.CONSONANT),
            ("7", Alphabet.LATIN, CharClass.NON_LETTER),
            ("w", Alphabet.LATIN, CharClass.NON_LETTER),
            ("ō", Alphabet.NEW_LATIN, CharClass.VOWEL),
            ("ş", Alphabet.NEW_LATIN, CharClass.CONSONANT),
            ("c", Alphabet.NEW_LATIN, CharClass.NON_LETTER),
            (OKINA, Alphabet.NEW_LATIN, CharClass.NON_LETTER),
            ("а", Alphabet.LATIN, CharClass.NON_LETTER),  # Cyrillic а
            ("Ш", Alphabet.CYRILLIC, CharClass.CONSONANT),
        ],
    )
    def test_examples(self, ch: str, alphabet: Alphabet, expected: CharClass) -> None:
        assert classify_char(ch, alphabet) is expected

    @given(st.characters())
    def test_total_and_pure(self, ch: str) -> None:
        for alphabet in Alphabet:
            first = classify_char(ch, alphabet)
            assert isinstance(first, CharClass)
            assert classify_char(ch, alphabet) is first

    def test_vowels_and_consonants_disjoint(self) -> None:
        for alphabet in Alphabet:
            vowels = {c for c in letters(alphabet) if classify_char(c, alphabet) is CharClass.VOWEL}
            consonants = {
                c for c in letters(alphabet) if classify_char(c, alphabet) is CharClass.CONSONANT
            }
            assert vowels and consonants
            assert not vowels & consonants


class TestCanonicalCodePoints:
    def test_modifier_letters(self) -> None:
        assert ord(OKINA) == 0x02BB
        assert ord(GLOTTAL_STOP) == 0x02BC

    @pytest.mark.parametrize(
        ("lower", "upper"),
        [
            ("ō", "Ō"),  # ō Ō
            ("ḡ", "Ḡ"),  # ḡ Ḡ
            ("ş", "Ş"),  # ş Ş
            ("ç", "Ç"),  # ç Ç
            ("ñ", "Ñ"),  # ñ Ñ
        ],
    )
    def test_new_latin_letters(self, lower: str, upper: str) -> None:
        assert classify_char(lower, Alphabet.NEW_LATIN) is not CharClass.NON_LETTER
        assert lower.upper() == upper

    @pytest.mark.parametrize(
        ("lower", "upper"),
        [
            ("қ", "Қ"),  # қ Қ
            ("ғ", "Ғ"),  # ғ Ғ
            ("ҳ", "Ҳ"),  # ҳ Ҳ
            ("ў", "Ў"),  # ў Ў
        ],
    )
    def test_uzbek_cyrillic_letters(self, lower: str, upper: str) -> None:
        assert classify_char(lower, Alphabet.CYRILLIC) is not CharClass.NON_LETTER
        assert lower.upper() == upper

    def test_rule_data_emits_canonical_points(self) -> None:
        from uztranslit import ruleset_for

        new_map = ruleset_for(Alphabet.CYRILLIC, Alphabet.NEW_LATIN).char_map
        assert new_map["ў"] == "ō"
        assert new_map["ғ"] == "ḡ"
        assert new_map["ш"] == "ş"
        assert new_map["ч"] == "ç"
        assert new_map["нг"] == "ñ"


class TestClassifyCase:
    @pytest.mark.parametrize(
        ("word", "expected"),
        [
            ("АҚШ", CaseClass.ALL_CAPS),
            ("Шўрва", CaseClass.TITLE),
            ("shoʻrva", CaseClass.LOWER),
            ("Ш", CaseClass.TITLE),  # single capital biases to title
            ("ShOʻrva", CaseClass.MIXED),
            ("maʼno", CaseClass.LOWER),
            ("MAʼNO", CaseClass.ALL_CAPS),
            ("ъ", CaseClass.LOWER),  # the hard sign is a cased pair in Unicode
            (GLOTTAL_STOP, CaseClass.CASELESS),
            ("Oʻzbek", CaseClass.TITLE),
        ],
    )
    def test_examples(self, word: str, expected: CaseClass) -> None:
        assert classify_case(word) is expected

    def test_empty_word_rejected(self) -> None:
        with pytest.raises(ValueError):
            classify_case("")


APOSTROPHE_VARIANTS = ["'", "`", "‘", "’", OKINA, GLOTTAL_STOP]


class TestNormalizeApostrophes:
    @pytest.mark.parametrize("variant", APOSTROPHE_VARIANTS)
    def test_okina_after_o_and_g(self, variant: str) -> None:
        assert normalize_apostrophes(f"o{variant}zbek") == "oʻzbek"
        assert normalize_apostrophes(f"g{variant}alaba") == "gʻalaba"
        assert normalize_apostrophes(f"YO{variant}L") == "YOʻL"
        assert normalize_apostrophes(f"G{variant}ALABA") == "GʻALABA"

    @pytest.mark.parametrize("variant", APOSTROPHE_VARIANTS)
    def test_glottal_between_letters(self, variant: str) -> None:
        assert normalize_apostrophes(f"ma{variant}no") == "maʼno"
        assert normalize_apostrophes(f"s{variant}h") == "sʼh"

    def test_punctuation_untouched(self) -> None:
        assert normalize_apostrophes("'quoted'") == "'quoted'"
        assert normalize_apostrophes("it', he said") == "it', he said"
        assert normalize_apostrophes("`x` + `y`") == "`x` + `y`"

    def test_composes_input(self) -> None:
        decomposed = unicodedata.normalize("NFD", "ōçş")
        assert normalize_apostrophes(decomposed) == "ōçş"

    def test_canonical_letters_stable(self) -> None:
        assert normalize_apostrophes("oʻzbek gʻoz maʼno") == "oʻzbek gʻoz maʼno"

    @given(st.text(max_size=60))
    def test_idempotent(self, text: str) -> None:
        once = normalize_apostrophes(text)
        assert normalize_apostrophes(once) == once
