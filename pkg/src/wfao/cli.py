"""Command-line front end.

Exit codes: 0 success (or "equal"), 1 usage/parse/evaluation error,
2 "not equal" verdict or an unsatisfiable conversion condition.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from . import fileformat
from .automata import WordPair
from .convert import DEFAULT_P_MAX, convert
from .equiv import DEFAULT_MAX_LEN, check_equiv
from .errors import ConditionUnsatisfied, WFAError
from .worked_examples import EXPECTED
from .semantics import Semantics, behavior
from .semiring import format_value

EXIT_OK, EXIT_ERROR, EXIT_VERDICT = 0, 1, 2

TAGS = [t.value for t in Semantics]
KINDS = ["sequential", "mealy", "moore"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def split_word(text: str) -> tuple:
    """'0,1,0' -> ('0', '1', '0'); the empty string is the empty word."""
    return tuple(text.split(",")) if text else ()


def _load(path):
    try:
        return fileformat.load(path)
    except OSError as e:
        raise WFAError(f"{path}: {e.strerror or e}") from None
    except WFAError as e:
        raise WFAError(f"{path}: {e}") from None


def cmd_validate(args) -> int:
    a = _load(args.file)
    print(f"ok: {a.kind} automaton over {a.semiring.name} with {a.size} states")
    return EXIT_OK


def cmd_eval(args) -> int:
    a = _load(args.file)
    try:
        w = WordPair(split_word(args.input), split_word(args.output))
    except ValueError as e:
        raise WFAError(str(e)) from None
    print(format_value(a.semiring, behavior(a, args.semantics, w)))
    return EXIT_OK


def cmd_convert(args) -> int:
    a = _load(args.file)
    try:
        b, report = convert(a, args.to, args.semantics, p_max=args.p_max)
    except ConditionUnsatisfied as e:
        print(f"condition unsatisfied: {e}", file=sys.stderr)
        return EXIT_VERDICT
    text = fileformat.dumps(b)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    print(report, file=sys.stderr)
    return EXIT_OK


def cmd_equiv(args) -> int:
    a1, a2 = _load(args.file1), _load(args.file2)
    verdict = check_equiv(a1, args.tag1, a2, args.tag2, args.max_len)
    if verdict.equal:
        print(f"equal ({verdict.checked} word pairs up to length {verdict.max_len})")
        return EXIT_OK
    d = verdict.first_divergence
    fmt = lambda v: format_value(a1.semiring, v)  # noqa: E731
    print(f"not equal ({verdict.failures} of {verdict.checked} word pairs up to length {verdict.max_len} differ)")
    print(f"{d.pair}: {fmt(d.left)} != {fmt(d.right)}")
    return EXIT_VERDICT


def example_path(name: str):
    return resources.files("wfao") / "data" / f"{name}.wfa.json"


def cmd_demo(args) -> int:
    with resources.as_file(example_path(args.name)) as path:
        a = _load(path)
    print(f"{args.name}: {a.kind} automaton over {a.semiring.name}, states {', '.join(a.states)}")
    print(f"{'semantics':<10} {'u':<6} {'v':<6} {'value':>6} {'expected':>9}")
    ok = True
    for u, v, tag, expected in EXPECTED[args.name]:
        value = behavior(a, tag, (u, v))
        ok &= a.semiring.eq(value, expected)
        print(f"{tag:<10} {''.join(u):<6} {''.join(v):<6} {format_value(a.semiring, value):>6} {expected:>9}")
    return EXIT_OK if ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wfao", description="Weighted finite automata with output over semirings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="parse and validate an automaton file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("eval", help="evaluate a behavior on one word pair")
    s.add_argument("file")
    s.add_argument("--semantics", required=True, choices=TAGS)
    s.add_argument("--input", required=True, help="comma-separated input symbols ('' is the empty word)")
    s.add_argument("--output", required=True, help="comma-separated output symbols")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("convert", help="convert between automaton models")
    s.add_argument("file")
    s.add_argument("--to", required=True, choices=KINDS)
    s.add_argument("--semantics", required=True, choices=TAGS,
                   help="semantics on the Mealy/Moore side that must be preserved")
    s.add_argument("--p-max", type=int, default=DEFAULT_P_MAX)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("equiv", help="compare two behaviors on all word pairs up to a length")
    s.add_argument("file1")
    s.add_argument("tag1", choices=TAGS)
    s.add_argument("file2")
    s.add_argument("tag2", choices=TAGS)
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("demo", help="evaluate one of the bundled worked examples")
    s.add_argument("name", choices=sorted(EXPECTED))
    s.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WFAError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
