"""Lossless word/non-word tokenization.

Splitting is by maximal runs of word characters; concatenating the token
texts in order always reproduces the input exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .alphabets import APOSTROPHE_LETTERS, WORD_LETTERS


class TokenKind(enum.Enum):
    WORD = "word"
    NON_WORD = "non_word"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    start: int
    end: int


def _is_letter(ch: str) -> bool:
    return ch in WORD_LETTERS


def tokenize(text: str) -> list[Token]:
    """Split text into Word and NonWord tokens.

    A word is a maximal run of letters of the three alphabets; an okina or
    glottal stop joins the word only when the character before it is a
    letter, so words never start with one but may end with one.
    """
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        if _is_letter(text[i]):
            j = i + 1
            while j < n and (
                _is_letter(text[j])
                or (text[j] in APOSTROPHE_LETTERS and _is_letter(text[j - 1]))
            ):
                j += 1
            tokens.append(Token(TokenKind.WORD, text[i:j], i, j))
        else:
            j = i + 1
            while j < n and not _is_letter(text[j]):
                j += 1
            tokens.append(Token(TokenKind.NON_WORD, text[i:j], i, j))
        i = j
    return tokens


def reunite(tokens: Iterable[Token]) -> str:
    """Concatenate token texts back into one string."""
    return "".join(t.text for t in tokens)
