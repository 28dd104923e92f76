"""Batch command line: transliterate files/streams, run the evaluation, dump rules.

Exit status: 0 success, 1 usage error, 2 I/O or data error.  All I/O is
strictly UTF-8; the whole input buffer is read before conversion, so line
structure survives byte for byte.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .alphabets import Alphabet
from .evaluation import (
    evaluate,
    load_parallel_lexicon_path,
    render_scores,
    report_render,
)
from .lexicon import LexiconFormatError, load_lexicon_path
from .pipeline import Transliterator, TranslitOptions
from .rules import rule_table_dump

LEXICON_ENV_VAR = "UZTRANSLIT_LEXICON"
_COMMANDS = ("translit", "eval", "rules")
_ALPHABET_TOKENS = tuple(a.value for a in Alphabet)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A003 - argparse hook
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="uztranslit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    translit = sub.add_parser("translit", help="transliterate a file or stdin")
    translit.add_argument("--from", dest="source", required=True, choices=_ALPHABET_TOKENS,
                          help="source alphabet")
    translit.add_argument("--to", dest="target", required=True, choices=_ALPHABET_TOKENS,
                          help="target alphabet")
    translit.add_argument("--in", dest="input", metavar="PATH",
                          help="input file (default: stdin)")
    translit.add_argument("--out", dest="output", metavar="PATH",
                          help="output file (default: stdout)")
    translit.add_argument("--no-normalize", action="store_true",
                          help="do not canonicalise apostrophe variants first")
    translit.add_argument("--lexicon", metavar="PATH",
                          help=f"exception lexicon override (or ${LEXICON_ENV_VAR})")

    evaluate_cmd = sub.add_parser("eval", help="score against a parallel lexicon")
    evaluate_cmd.add_argument("--data", required=True, metavar="PATH",
                              help="parallel lexicon TSV (latin/cyrillic/new_latin)")
    evaluate_cmd.add_argument("--out", dest="output", metavar="PATH",
                              help="write the score table here (default: stdout)")
    evaluate_cmd.add_argument("--scores", metavar="PATH",
                              help="also write flat direction=score lines here")
    evaluate_cmd.add_argument("--fig", metavar="PATH",
                              help="also render the score matrix as a figure here")
    evaluate_cmd.add_argument("--lexicon", metavar="PATH",
                              help=f"exception lexicon override (or ${LEXICON_ENV_VAR})")

    rules_cmd = sub.add_parser("rules", help="print one direction's rule table")
    rules_cmd.add_argument("--from", dest="source", required=True, choices=_ALPHABET_TOKENS)
    rules_cmd.add_argument("--to", dest="target", required=True, choices=_ALPHABET_TOKENS)
    return parser


def _with_default_command(argv: Sequence[str]) -> list[str]:
    args = list(argv)
    if args and args[0] in _COMMANDS:
        return args
    if args and args[0] in ("-h", "--help"):
        return args
    return ["translit", *args]


def _read_input(path: str | None) -> str:
    if path is None:
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return data.decode("utf-8")


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as handle:
            handle.write(text.encode("utf-8"))


def _make_transliterator(lexicon_path: str | None) -> Transliterator:
    path = lexicon_path or os.environ.get(LEXICON_ENV_VAR)
    if path:
        return Transliterator(load_lexicon_path(path))
    return Transliterator()


def _run_translit(args: argparse.Namespace) -> int:
    engine = _make_transliterator(args.lexicon)
    options = TranslitOptions(
        Alphabet.from_token(args.source),
        Alphabet.from_token(args.target),
        normalize_apostrophes=not args.no_normalize,
    )
    _write_output(args.output, engine.transliterate(_read_input(args.input), options))
    return 0


def _run_eval(args: argparse.Namespace) -> int:
    engine = _make_transliterator(args.lexicon)
    report = evaluate(load_parallel_lexicon_path(args.data), engine)
    _write_output(args.output, report_render(report) + "\n")
    if args.scores:
        _write_output(args.scores, render_scores(report) + "\n")
    if args.fig:
        from .figures import render_score_figure

        render_score_figure(report, args.fig)
    return 0


def _run_rules(args: argparse.Namespace) -> int:
    source = Alphabet.from_token(args.source)
    target = Alphabet.from_token(args.target)
    if source is target:
        raise _UsageError("--from and --to must name different alphabets")
    _write_output(None, rule_table_dump(source, target) + "\n")
    return 0


def run_cli(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(_with_default_command(argv))
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        print(f"valid alphabet names: {', '.join(_ALPHABET_TOKENS)}", file=sys.stderr)
        return 1
    except SystemExit as err:  # --help
        return int(err.code or 0)
    try:
        if args.command == "translit":
            return _run_translit(args)
        if args.command == "eval":
            return _run_eval(args)
        return _run_rules(args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except LexiconFormatError as err:
        print(f"data error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"data error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
