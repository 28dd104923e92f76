"""Exception lexicon: words the letter rules get wrong, in all three scripts.

These are mostly Russian loans (ц, the soft sign, reduced я/ю).  Matching is
longest-prefix so inflected forms hit the lemma and keep their suffix for
regular rule conversion.  The on-disk format is a UTF-8 TSV with the header
``latin<TAB>cyrillic<TAB>new_latin``, lowercase composed forms, ``#``
comments.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import IO, Iterable

from .alphabets import Alphabet, CaseClass, normalize_apostrophes

_HEADER = ("latin", "cyrillic", "new_latin")


class LexiconFormatError(ValueError):
    """Malformed or inconsistent lexicon data; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ExceptionEntry:
    latin: str
    cyrillic: str
    new_latin: str

    def form(self, alphabet: Alphabet) -> str:
        if alphabet is Alphabet.LATIN:
            return self.latin
        if alphabet is Alphabet.CYRILLIC:
            return self.cyrillic
        return self.new_latin


class ExceptionLexicon:
    """Immutable set of entries with per-alphabet longest-prefix lookup."""

    def __init__(self, entries: Iterable[ExceptionEntry]):
        self._entries = tuple(entries)
        self._index: dict[Alphabet, dict[str, ExceptionEntry]] = {a: {} for a in Alphabet}
        for entry in self._entries:
            for alphabet in Alphabet:
                form = entry.form(alphabet)
                existing = self._index[alphabet].get(form)
                if existing is not None and existing != entry:
                    raise ValueError(
                        f"duplicate {alphabet.value} form {form!r} in exception lexicon"
                    )
                self._index[alphabet][form] = entry
        self._max_len = {
            a: max((len(f) for f in index), default=0)
            for a, index in self._index.items()
        }

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[ExceptionEntry, ...]:
        return self._entries

    def lookup(self, word_lower: str, source: Alphabet) -> ExceptionEntry | None:
        """Whole-word lookup."""
        return self._index[source].get(word_lower)

    def match_prefix(self, word_lower: str, source: Alphabet) -> tuple[ExceptionEntry, str] | None:
        """Longest entry whose source form is a prefix of the word.

        Returns the entry and the remaining suffix ("" on a whole-word
        match); None when no form is a prefix.
        """
        index = self._index[source]
        for k in range(min(len(word_lower), self._max_len[source]), 0, -1):
            entry = index.get(word_lower[:k])
            if entry is not None:
                return entry, word_lower[k:]
        return None

    def dump(self) -> str:
        """Serialize back to the TSV format (header + one line per entry)."""
        lines = ["\t".join(_HEADER)]
        lines += [f"{e.latin}\t{e.cyrillic}\t{e.new_latin}" for e in self._entries]
        return "\n".join(lines) + "\n"


def _parse_rows(data: str) -> list[tuple[int, list[str]]]:
    rows: list[tuple[int, list[str]]] = []
    lines = data.split("\n")
    if not lines or [c.strip() for c in lines[0].split("\t")] != list(_HEADER):
        raise LexiconFormatError(
            "expected header 'latin<TAB>cyrillic<TAB>new_latin'", 1
        )
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != 3:
            raise LexiconFormatError(f"expected 3 tab-separated columns, got {len(cells)}", number)
        cleaned = [normalize_apostrophes(c.strip()).lower() for c in cells]
        if any(not c for c in cleaned):
            raise LexiconFormatError("empty cell", number)
        rows.append((number, cleaned))
    return rows


def load_lexicon(source: IO[bytes]) -> ExceptionLexicon:
    """Parse an exception lexicon from a binary UTF-8 stream."""
    rows = _parse_rows(source.read().decode("utf-8"))
    entries: list[ExceptionEntry] = []
    seen: dict[tuple[str, str], int] = {}
    for number, (latin, cyrillic, new_latin) in rows:
        for alphabet, form in zip(_HEADER, (latin, cyrillic, new_latin)):
            first = seen.setdefault((alphabet, form), number)
            if first != number:
                raise LexiconFormatError(
                    f"duplicate {alphabet} form {form!r} (first seen on line {first})", number
                )
        entries.append(ExceptionEntry(latin, cyrillic, new_latin))
    return ExceptionLexicon(entries)


def load_lexicon_path(path: str) -> ExceptionLexicon:
    with open(path, "rb") as handle:
        return load_lexicon(handle)


@lru_cache(maxsize=1)
def load_default_lexicon() -> ExceptionLexicon:
    """The lexicon bundled with the package."""
    with resources.files(__package__).joinpath("data/exceptions.tsv").open("rb") as handle:
        return load_lexicon(handle)


def apply_exception(
    word: str,
    entry: ExceptionEntry,
    suffix: str,
    target: Alphabet,
    case: CaseClass,
) -> str:
    """Assemble the target form plus an already-converted suffix, re-cased.

    ``suffix`` must already be in the target alphabet (the pipeline converts
    it with the direction's rules before calling this).
    """
    base = entry.form(target) + suffix
    if case is CaseClass.TITLE:
        return base[:1].upper() + base[1:]
    if case is CaseClass.ALL_CAPS:
        return base.upper()
    return base
