"""Command-line front end and the line-oriented input file format.

Format: the first significant line is a header, either
``superbase <count> <m>`` or ``gram <count>``; each following significant
line is one row of whitespace-separated rationals (``5/4``, ``-1``,
``0.25``).  ``#`` starts a comment, blank lines are skipped, and ``-`` as
a file name means standard input.

All user-facing indices are 1-based; the library underneath is 0-based.
Exit codes: 0 success, 1 validation/computation failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import LatCutError, ParseError, ShapeError
from .generators import DEFAULT_DENSITY, FAMILIES, InstanceSpec, generate
from .lattice import (
    GramMatrix,
    Matrix,
    Superbase,
    selling_parameters,
    validate_gram,
    validate_superbase,
)
from .mincut import default_trial_count
from .pipeline import (
    ALGORITHMS,
    candidate_vectors,
    short_vector,
    verify_reduction,
)


@dataclass(frozen=True)
class InputDocument:
    """A parsed input file: header shape plus the raw rational entries."""

    kind: str  # "superbase" or "gram"
    dimensions: tuple[int, ...]  # (count, m) for superbase, (count,) for gram
    entries: Matrix


def parse_input(text: str) -> InputDocument:
    """Parse the file format into an InputDocument.

    Raises ParseError (with 1-based line and column) for malformed
    headers or tokens, ShapeError when rows disagree with the header.
    """
    kind: str | None = None
    dimensions: tuple[int, ...] = ()
    expected_cols = 0
    expected_rows = 0
    rows: list[tuple[Fraction, ...]] = []
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = [(match.group(), match.start() + 1)
                  for match in re.finditer(r"\S+", line)]

        if kind is None:
            word, column = tokens[0]
            if word == "superbase":
                if len(tokens) != 3:
                    raise ParseError(
                        lineno, column,
                        "header must be 'superbase <count> <m>'",
                    )
                count = _header_int(tokens[1], lineno)
                m = _header_int(tokens[2], lineno)
                kind, dimensions = "superbase", (count, m)
                expected_rows, expected_cols = count, m
            elif word == "gram":
                if len(tokens) != 2:
                    raise ParseError(
                        lineno, column, "header must be 'gram <count>'"
                    )
                count = _header_int(tokens[1], lineno)
                kind, dimensions = "gram", (count,)
                expected_rows, expected_cols = count, count
            else:
                raise ParseError(
                    lineno, column,
                    f"unknown kind {word!r}; expected 'superbase' or 'gram'",
                )
            continue

        if len(rows) == expected_rows:
            raise ShapeError(
                lineno, f"expected {expected_rows} rows, found more"
            )
        if len(tokens) != expected_cols:
            raise ShapeError(
                lineno,
                f"row {len(rows) + 1} has {len(tokens)} entries, "
                f"expected {expected_cols}",
            )
        row = []
        for token, column in tokens:
            try:
                row.append(Fraction(token))
            except (ValueError, ZeroDivisionError):
                raise ParseError(
                    lineno, column, f"cannot parse {token!r} as a rational"
                ) from None
        rows.append(tuple(row))

    if kind is None:
        raise ParseError(max(last_line, 1), 1, "missing header line")
    if len(rows) != expected_rows:
        raise ShapeError(
            last_line, f"expected {expected_rows} rows, found {len(rows)}"
        )
    return InputDocument(kind, dimensions, tuple(rows))


def _header_int(token_with_column: tuple[str, int], lineno: int) -> int:
    token, column = token_with_column
    try:
        value = int(token)
    except ValueError:
        raise ParseError(
            lineno, column, f"expected a positive integer, got {token!r}"
        ) from None
    if value < 1:
        raise ParseError(
            lineno, column, f"expected a positive integer, got {token!r}"
        )
    return value


def format_superbase(sb: Superbase, comment: str | None = None) -> str:
    lines = [] if comment is None else [f"# {comment}"]
    lines.append(f"superbase {sb.n + 1} {sb.m}")
    lines.extend(" ".join(str(x) for x in vec) for vec in sb.vectors)
    return "\n".join(lines) + "\n"


def format_gram(g: GramMatrix, comment: str | None = None) -> str:
    lines = [] if comment is None else [f"# {comment}"]
    lines.append(f"gram {g.size}")
    lines.extend(" ".join(str(x) for x in row) for row in g.entries)
    return "\n".join(lines) + "\n"


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a rational number"
        ) from None


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="latcut",
        description="Shortest lattice vectors via graph minimum cuts, "
        "in exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    svp = sub.add_parser("svp", help="compute a shortest nonzero vector")
    svp.add_argument("file", help="superbase or gram file, or - for stdin")
    svp.add_argument("--algorithm", choices=ALGORITHMS, default="stoer-wagner")
    svp.add_argument("--seed", type=_u64, default=None)
    svp.add_argument("--trials", type=_positive_int, default=None)
    svp.add_argument("--json", action="store_true")

    validate = sub.add_parser("validate", help="check a file's invariants")
    validate.add_argument("file")

    candidates = sub.add_parser(
        "candidates", help="enumerate every candidate subset sum"
    )
    candidates.add_argument("file")

    gen = sub.add_parser("gen", help="emit a built-in or random instance")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("n", type=int, nargs="?", default=None)
    gen.add_argument("--seed", type=_u64, default=None)
    gen.add_argument("--density", type=_rational, default=None)
    gen.add_argument("-o", "--output", default=None)

    verify = sub.add_parser(
        "verify", help="evaluate one assignment as quadratic form and as cut"
    )
    verify.add_argument("file")
    verify.add_argument(
        "--assignment", required=True, help="comma-separated bits, e.g. 1,1,0,0"
    )
    return parser


def run_cli(argv, *, stdin=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit code instead of exiting."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2

    handler = {
        "svp": _cmd_svp,
        "validate": _cmd_validate,
        "candidates": _cmd_candidates,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args, stdin, stdout)
    except (ParseError, ShapeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except LatCutError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


def _read_text(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(document: InputDocument):
    """Validate a parsed document into (Superbase | None, GramMatrix)."""
    if document.kind == "superbase":
        sb = validate_superbase(document.entries)
        return sb, selling_parameters(sb)
    return None, validate_gram(document.entries)


def _indices_1based(subset) -> list[int]:
    return [i + 1 for i in subset]


def _cmd_svp(args, stdin, stdout) -> int:
    sb, gram = _load(parse_input(_read_text(args.file, stdin)))
    seed = args.seed if args.seed is not None else 0
    trials = args.trials
    if args.algorithm == "karger" and trials is None:
        trials = default_trial_count(gram.size)
    result = short_vector(
        gram, args.algorithm, seed=seed, trials=trials, superbase=sb
    )
    if args.json:
        payload: dict = {
            "subset": _indices_1based(result.subset),
            "squared_length": str(result.squared_length),
        }
        if result.coordinates is not None:
            payload["coordinates"] = [str(x) for x in result.coordinates]
        payload["algorithm"] = args.algorithm
        if args.algorithm == "karger":
            payload["seed"] = seed
            payload["trials"] = trials
        print(json.dumps(payload), file=stdout)
    else:
        print("subset:", " ".join(map(str, _indices_1based(result.subset))),
              file=stdout)
        print(f"squared length: {result.squared_length}", file=stdout)
        if result.coordinates is not None:
            print("vector:", " ".join(str(x) for x in result.coordinates),
                  file=stdout)
        print(f"algorithm: {args.algorithm}", file=stdout)
        if args.algorithm == "karger":
            print(f"seed: {seed}", file=stdout)
            print(f"trials: {trials}", file=stdout)
    return 0


def _cmd_validate(args, stdin, stdout) -> int:
    document = parse_input(_read_text(args.file, stdin))
    sb, gram = _load(document)
    if sb is not None:
        print(f"valid superbase: n={sb.n}, vectors={sb.n + 1}, ambient={sb.m}",
              file=stdout)
    else:
        print(f"valid gram: n={gram.n}, side={gram.size}", file=stdout)
    return 0


def _cmd_candidates(args, stdin, stdout) -> int:
    sb, _ = _load(parse_input(_read_text(args.file, stdin)))
    if sb is None:
        raise LatCutError(
            "candidate enumeration needs coordinates; supply a superbase file"
        )
    for cand in candidate_vectors(sb):
        indices = ",".join(map(str, _indices_1based(cand.subset)))
        coords = " ".join(str(x) for x in cand.coordinates)
        print(f"{indices} | {cand.squared_length} | {coords}", file=stdout)
    return 0


def _cmd_gen(args, stdin, stdout) -> int:
    n = args.n
    if n is None:
        if args.family == "example3d":
            n = 3
        else:
            raise ValueError("gen requires <n> for this family")
    density = args.density
    spec = InstanceSpec(args.family, n, seed=args.seed, density=density)
    instance = generate(spec)

    note = f"{args.family} n={n}"
    if args.family == "random_gram":
        note += f" seed={args.seed} density={density if density is not None else DEFAULT_DENSITY}"
    if isinstance(instance, Superbase):
        text = format_superbase(instance, note)
    else:
        text = format_gram(instance, note)
    if args.output is None:
        stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return 0


def _cmd_verify(args, stdin, stdout) -> int:
    _, gram = _load(parse_input(_read_text(args.file, stdin)))
    bits = []
    for token in args.assignment.split(","):
        token = token.strip()
        if token not in ("0", "1"):
            raise ValueError(
                f"assignment entries must be 0 or 1, got {token!r}"
            )
        bits.append(int(token))
    q_value, cut_value = verify_reduction(gram, bits)
    print(f"Q: {q_value}", file=stdout)
    print(f"cut: {cut_value}", file=stdout)
    print(f"equal: {'yes' if q_value == cut_value else 'no'}", file=stdout)
    return 0
