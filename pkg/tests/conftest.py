"""Shared fixtures: engines, bundled data paths, the core loanword table."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import pytest

from uztranslit import Transliterator

#: The 15 core loanword rows bundled at the top of exceptions.tsv
#: (latin, cyrillic, new_latin).
CORE_LOANWORDS = [
    ("aksent", "акцент", "aksent"),
    ("budilnik", "будильник", "budilnik"),
    ("batalyon", "батальон", "batalyon"),
    ("feldsher", "фельдшер", "feldşer"),
    ("fransuz", "француз", "fransuz"),
    ("intervyu", "интервью", "intervyu"),
    ("koeffitsient", "коэффициент", "koeffitsient"),
    ("korrupsiya", "коррупция", "korrupsiya"),
    ("kuryer", "курьер", "kuryer"),
    ("medalyon", "медальон", "medalyon"),
    ("oktabr", "октябрь", "oktabr"),
    ("pavilyon", "павильон", "pavilyon"),
    ("porshen", "поршень", "porşen"),
    ("shpatel", "шпатель", "şpatel"),
    ("cherepitsa", "черепица", "çerepitsa"),
]


def core_loanword_tsv() -> str:
    lines = ["latin\tcyrillic\tnew_latin"]
    lines += ["\t".join(row) for row in CORE_LOANWORDS]
    return "\n".join(lines) + "\n"


@pytest.fixture(scope="session")
def engine() -> Transliterator:
    return Transliterator()


@pytest.fixture(scope="session")
def golden_path() -> Path:
    return Path(str(resources.files("uztranslit").joinpath("data/golden.tsv")))


@pytest.fixture(scope="session")
def exceptions_path() -> Path:
    return Path(str(resources.files("uztranslit").joinpath("data/exceptions.tsv")))


@pytest.fixture()
def core_lexicon_file(tmp_path: Path) -> Path:
    path = tmp_path / "table_core.tsv"
    path.write_text(core_loanword_tsv(), encoding="utf-8")
    return path
