"""Command-line front end: eval, classify, trace, falsify, remark.

Outputs are machine readable. Single values print bare; records stream as
CSV (comma separated, header row, LF endings) or JSON lines. Floats are
serialised with repr so they round-trip exactly at binary64.

Exit codes: 0 success, 2 parse failure, 3 domain/evaluation error,
4 trace cap exceeded, 5 witness not found.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import Iterable, TextIO

from .compound import BoundParams, evaluate_mean
from .errors import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
    HardyMeansError,
    UnsupportedParametersError,
    WitnessNotFoundError,
    WitnessValidationError,
)
from .hardy import (
    SequenceSpec,
    build_witness,
    classify,
    explicit_sequence,
    gini_ratio_lower_bound,
    harmonic_sequence,
    iter_ratio_trace,
    verify_witness,
)
from .means import GaussCompound, GiniMean, MeanDescriptor, PowerMean
from .slow_growth import growth_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4
EXIT_NOT_FOUND = 5

TRACE_CAP_ENV = "HARDYMEANS_TRACE_CAP"
DEFAULT_TRACE_CAP = 10**7


class SpecParseError(ValueError):
    """Malformed mean or sequence specification."""


def parse_mean_spec(text: str) -> MeanDescriptor:
    """Parse 'power:<x|inf|-inf>', 'gini:<p>,<q>' or 'gauss:<e1>,<e2>,...'."""
    kind, sep, rest = text.partition(":")
    if not sep or not rest:
        raise SpecParseError(
            f"malformed mean spec {text!r}; expected power:<x>, gini:<p>,<q> "
            "or gauss:<e1>,<e2>,..."
        )
    try:
        numbers = [float(part) for part in rest.split(",")]
    except ValueError:
        raise SpecParseError(f"malformed number in mean spec {text!r}") from None
    if kind == "power":
        if len(numbers) != 1:
            raise SpecParseError("power spec takes exactly one exponent")
        return PowerMean(numbers[0])
    if kind == "gini":
        if len(numbers) != 2:
            raise SpecParseError("gini spec takes exactly two parameters")
        return GiniMean(numbers[0], numbers[1])
    if kind == "gauss":
        return GaussCompound(tuple(numbers))
    raise SpecParseError(f"unknown mean family {kind!r}")


def parse_sequence_spec(text: str) -> SequenceSpec:
    """Parse 'harmonic' or 'file:<path>' (one positive decimal per line)."""
    if text == "harmonic":
        return harmonic_sequence()
    kind, sep, path = text.partition(":")
    if kind == "file" and sep:
        return read_sequence_file(path)
    raise SpecParseError(f"unknown sequence spec {text!r}; expected harmonic or file:<path>")


def read_sequence_file(path: str) -> SequenceSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise SpecParseError(f"cannot read sequence file {path!r}: {exc}") from None
    terms: list[float] = []
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            value = float(stripped)
        except ValueError:
            raise SpecParseError(f"{path}:{lineno}: unparseable value {stripped!r}") from None
        if not 0.0 < value < math.inf:
            raise DomainError(f"{path}:{lineno}: terms must be positive, got {stripped!r}")
        terms.append(value)
    if not terms:
        raise SpecParseError(f"{path}: sequence file contains no terms")
    return explicit_sequence(terms)


def format_eval(x: float) -> str:
    """15 significant digits; integral values print bare."""
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return f"{x:#.15g}"


def _cell(value) -> object:
    """Payload encoding: floats as repr strings, ints and bools as-is."""
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, float):
        return repr(value)
    return value


class RecordEmitter:
    """Streams records of one schema as CSV rows or JSON lines."""

    def __init__(self, fmt: str, stream: TextIO, schema: str, fields: list[str]):
        self.fmt = fmt
        self.stream = stream
        self.schema = schema
        self.fields = fields
        self._csv = csv.writer(stream, lineterminator="\n") if fmt == "csv" else None
        self._wrote_header = False

    def _csv_cell(self, value) -> str:
        if isinstance(value, bool):
            return "true" if value else "false"
        return str(value)

    def emit(self, payload: dict) -> None:
        values = [_cell(payload[k]) for k in self.fields]
        if self._csv is not None:
            if not self._wrote_header:
                self._csv.writerow(["schema"] + self.fields)
                self._wrote_header = True
            self._csv.writerow([self.schema] + [self._csv_cell(v) for v in values])
        else:
            record = {"schema": self.schema}
            record.update(zip(self.fields, values))
            self.stream.write(json.dumps(record, separators=(",", ":")) + "\n")

    def emit_trailer(self, status: str, message: str) -> None:
        if self._csv is not None:
            self._csv.writerow(["trace-trailer/v1", status, message])
        else:
            record = {"schema": "trace-trailer/v1", "status": status, "message": message}
            self.stream.write(json.dumps(record, separators=(",", ":")) + "\n")


def _trace_cap() -> int:
    raw = os.environ.get(TRACE_CAP_ENV)
    if raw is None:
        return DEFAULT_TRACE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SpecParseError(f"{TRACE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise SpecParseError(f"{TRACE_CAP_ENV} must be >= 1, got {cap}")
    return cap


def _gini_bound_order(descriptor: MeanDescriptor, sequence: SequenceSpec) -> int | None:
    """k such that the (log n)^(1/(k+1)) bound applies, else None."""
    if not isinstance(descriptor, GiniMean) or sequence.kind != "harmonic":
        return None
    for one, other in ((descriptor.p, descriptor.q), (descriptor.q, descriptor.p)):
        if one == 1.0 and other == int(other) and other <= -1.0:
            return int(-other)
    return None


def cmd_eval(args: argparse.Namespace) -> int:
    descriptor = parse_mean_spec(args.mean)
    value = evaluate_mean(descriptor, args.values)
    print(format_eval(value))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    descriptor = parse_mean_spec(args.mean)
    verdict = classify(descriptor)
    emitter = RecordEmitter(
        args.format, sys.stdout, "verdict/v1", ["mean", "is_hardy", "reason", "rule"]
    )
    emitter.emit(
        {
            "mean": args.mean,
            "is_hardy": verdict.is_hardy,
            "reason": verdict.reason,
            "rule": verdict.rule,
        }
    )
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    cap = _trace_cap()
    if args.limit > cap:
        print(
            f"error: trace limit {args.limit} exceeds cap {cap} "
            f"(override with {TRACE_CAP_ENV})",
            file=sys.stderr,
        )
        return EXIT_CAP
    descriptor = parse_mean_spec(args.mean)
    sequence = parse_sequence_spec(args.sequence)
    bound_order = _gini_bound_order(descriptor, sequence)
    fields = ["n", "term", "mean", "ratio"]
    if bound_order is not None:
        fields.append("lower_bound")
    emitter = RecordEmitter(args.format, sys.stdout, "trace-row/v1", fields)
    try:
        for record in iter_ratio_trace(
            descriptor,
            sequence,
            args.limit,
            stride_ratio=args.stride_ratio,
            exhaustive=args.exhaustive,
        ):
            payload = {
                "n": record.n,
                "term": record.term,
                "mean": record.mean_value,
                "ratio": record.ratio,
            }
            if bound_order is not None:
                payload["lower_bound"] = gini_ratio_lower_bound(bound_order, record.n)
            emitter.emit(payload)
    except HardyMeansError as exc:
        emitter.emit_trailer("error", str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


_WITNESS_FIELDS = [
    "mean",
    "sequence",
    "constant",
    "n0",
    "n1",
    "splice_value",
    "head_sum",
    "mid_sum",
    "prefix_sum",
    "tail_log",
    "tail_bound",
    "min_ratio",
    "lhs",
    "rhs",
    "refuted",
]


def cmd_falsify(args: argparse.Namespace) -> int:
    descriptor = parse_mean_spec(args.mean)
    sequence = parse_sequence_spec(args.sequence)
    witness = build_witness(descriptor, sequence, args.constant, args.cap)
    check = verify_witness(witness)
    emitter = RecordEmitter(args.format, sys.stdout, "witness-report/v1", _WITNESS_FIELDS)
    emitter.emit(
        {
            "mean": args.mean,
            "sequence": sequence.label(),
            "constant": witness.constant,
            "n0": witness.n0,
            "n1": witness.n1,
            "splice_value": witness.splice_value,
            "head_sum": witness.head_sum,
            "mid_sum": witness.mid_sum,
            "prefix_sum": witness.prefix_sum,
            "tail_log": witness.tail_log,
            "tail_bound": witness.tail_bound,
            "min_ratio": witness.min_ratio,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "refuted": check.refuted,
        }
    )
    return EXIT_OK


_REMARK_FIELDS = [
    "p",
    "lam",
    "theta",
    "target",
    "digits",
    "exponent",
    "coefficient",
    "threshold_log10",
    "exponent_rounded",
    "coefficient_rounded",
    "threshold_log10_rounded",
]


def cmd_remark(args: argparse.Namespace) -> int:
    params = BoundParams(p=args.p, lam=args.lam, theta=args.theta)
    report = growth_report(params, target=args.target, digits=args.digits)
    emitter = RecordEmitter(args.format, sys.stdout, "remark-report/v1", _REMARK_FIELDS)
    emitter.emit(
        {
            "p": report.p,
            "lam": report.lam,
            "theta": report.theta,
            "target": report.target,
            "digits": report.digits,
            "exponent": report.exponent_str,
            "coefficient": report.coefficient_str,
            "threshold_log10": report.threshold_log10_str,
            "exponent_rounded": report.exponent_rounded,
            "coefficient_rounded": report.coefficient_rounded,
            "threshold_log10_rounded": report.threshold_log10_rounded,
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardymeans",
        description=(
            "Evaluate power, Gini and Gaussian-compound means, classify their "
            "Hardy property, trace prefix-mean ratios, build refutation "
            "witnesses and report slow-growth constants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a mean on positive values")
    p_eval.add_argument("--mean", required=True, help="power:<x>, gini:<p>,<q> or gauss:<e1>,...")
    p_eval.add_argument("values", nargs="+", type=float, help="positive sample entries")
    p_eval.set_defaults(func=cmd_eval)

    p_classify = sub.add_parser("classify", help="closed-form Hardy classification")
    p_classify.add_argument("--mean", required=True)
    p_classify.add_argument("--format", choices=("csv", "jsonl"), default="jsonl")
    p_classify.set_defaults(func=cmd_classify)

    p_trace = sub.add_parser("trace", help="stream the prefix-mean ratio diagnostic")
    p_trace.add_argument("--mean", required=True)
    p_trace.add_argument("--sequence", default="harmonic", help="harmonic or file:<path>")
    p_trace.add_argument("-N", "--limit", required=True, type=int, help="largest index")
    p_trace.add_argument(
        "--stride-ratio", type=float, default=1.1, help="geometric sampling ratio"
    )
    p_trace.add_argument(
        "--exhaustive", action="store_true", help="sample every index instead"
    )
    p_trace.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_trace.set_defaults(func=cmd_trace)

    p_falsify = sub.add_parser(
        "falsify", help="build and verify a witness refuting a Hardy constant"
    )
    p_falsify.add_argument("--mean", required=True)
    p_falsify.add_argument("--sequence", default="harmonic")
    p_falsify.add_argument("-C", "--constant", required=True, type=float)
    p_falsify.add_argument("--cap", type=int, default=DEFAULT_TRACE_CAP)
    p_falsify.add_argument("--format", choices=("csv", "jsonl"), default="jsonl")
    p_falsify.set_defaults(func=cmd_falsify)

    p_remark = sub.add_parser(
        "remark", help="slow-growth constants of the compound ratio lower bound"
    )
    p_remark.add_argument("p", nargs="?", type=int, default=3)
    p_remark.add_argument("lam", nargs="?", type=float, default=5.0)
    p_remark.add_argument("theta", nargs="?", type=float, default=1.5)
    p_remark.add_argument("--target", type=float, default=1.0)
    p_remark.add_argument("--digits", type=int, default=50)
    p_remark.add_argument("--format", choices=("csv", "jsonl"), default="jsonl")
    p_remark.set_defaults(func=cmd_remark)

    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv if argv is None else list(argv))
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except WitnessNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (
        DomainError,
        UnsupportedParametersError,
        ConfigurationError,
        ConvergenceError,
        WitnessValidationError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except HardyMeansError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
