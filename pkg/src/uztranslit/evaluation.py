"""Word-level evaluation against a parallel three-alphabet lexicon.

Every word yields exactly one prediction, so micro-averaged F1 over the
correct/incorrect decisions equals plain word accuracy; scores are reported
per ordered direction in a 3x3 matrix (rows = source, columns = target).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import IO

from .alphabets import Alphabet
from .lexicon import LexiconFormatError, _parse_rows
from .pipeline import Transliterator, TranslitOptions

_ORDER = (Alphabet.LATIN, Alphabet.CYRILLIC, Alphabet.NEW_LATIN)


@dataclass(frozen=True)
class LexiconRow:
    latin: str
    cyrillic: str
    new_latin: str

    def form(self, alphabet: Alphabet) -> str:
        if alphabet is Alphabet.LATIN:
            return self.latin
        if alphabet is Alphabet.CYRILLIC:
            return self.cyrillic
        return self.new_latin


@dataclass(frozen=True)
class ParallelLexicon:
    rows: tuple[LexiconRow, ...]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class DirectionScore:
    total: int
    correct: int
    micro_f1: float


@dataclass(frozen=True)
class EvalReport:
    scores: dict[tuple[Alphabet, Alphabet], DirectionScore]


def load_parallel_lexicon(source: IO[bytes]) -> ParallelLexicon:
    """Parse a parallel lexicon from a binary UTF-8 TSV stream."""
    parsed = _parse_rows(source.read().decode("utf-8"))
    rows: list[LexiconRow] = []
    seen: dict[tuple[str, str, str], int] = {}
    for number, cells in parsed:
        triple = tuple(cells)
        first = seen.setdefault(triple, number)
        if first != number:
            raise LexiconFormatError(
                f"duplicate row {cells[0]!r} (first seen on line {first})", number
            )
        rows.append(LexiconRow(*cells))
    return ParallelLexicon(tuple(rows))


def load_parallel_lexicon_path(path: str) -> ParallelLexicon:
    with open(path, "rb") as handle:
        return load_parallel_lexicon(handle)


def micro_f1(correct: int, total: int) -> float:
    """Micro-averaged F1 for single-label scoring: equals correct/total."""
    if total < 1:
        raise ValueError("total must be >= 1")
    if not 0 <= correct <= total:
        raise ValueError("correct must be between 0 and total")
    return correct / total


def evaluate(lexicon: ParallelLexicon, transliterator: Transliterator) -> EvalReport:
    """Score every ordered direction by exact word match against the gold column."""
    if len(lexicon) == 0:
        raise ValueError("cannot evaluate an empty lexicon")
    scores: dict[tuple[Alphabet, Alphabet], DirectionScore] = {}
    for source, target in permutations(_ORDER, 2):
        options = TranslitOptions(source, target)
        correct = sum(
            transliterator.transliterate(row.form(source), options) == row.form(target)
            for row in lexicon.rows
        )
        total = len(lexicon)
        scores[(source, target)] = DirectionScore(total, correct, micro_f1(correct, total))
    return EvalReport(scores)


def report_render(report: EvalReport) -> str:
    """The 3x3 score matrix, two decimals, '-' on the diagonal."""
    for source, target in permutations(_ORDER, 2):
        if (source, target) not in report.scores:
            raise ValueError(f"report is missing direction {source.value}->{target.value}")
    width = max(len(a.value) for a in _ORDER)
    header = "alphabets".ljust(width) + "".join(f"  {a.value:>9}" for a in _ORDER)
    lines = [header]
    for source in _ORDER:
        cells = []
        for target in _ORDER:
            if source is target:
                cells.append(f"  {'-':>9}")
            else:
                cells.append(f"  {report.scores[(source, target)].micro_f1:>9.2f}")
        lines.append(source.value.ljust(width) + "".join(cells))
    return "\n".join(lines)


def render_scores(report: EvalReport) -> str:
    """Machine-readable flat listing, one `source->target=score` per line."""
    lines = [
        f"{source.value}->{target.value}={report.scores[(source, target)].micro_f1:.6f}"
        for source, target in permutations(_ORDER, 2)
    ]
    return "\n".join(lines)
