"""Command-line front end.

    hyperint eval --family si --beta 1 --alpha 1 --lambda 1 --x 1
    hyperint definite --family si --beta 1 --alpha 1 --lambda 2 -inf +inf
    hyperint table --family si --beta 1 --alpha 1 --lambda 1 --x-min -30 --x-max 30 --steps 601
    hyperint check primes

Exit status: 0 success, 1 failed check suite, 2 usage or domain error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import checks
from .asymptotics import Family
from .errors import HyperintError
from .families import Endpoint, IntegralSpec, antiderivative, definite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

RECORD_FIELDS = ("x", "value", "regime", "terms", "tail")


@dataclass(frozen=True)
class OutputRecord:
    x: float
    value: float
    regime: str
    terms: int
    tail: object  # float, or None in the asymptotic regime

    @classmethod
    def from_value(cls, x, av):
        s = av.series_detail
        return cls(x, av.value, av.regime_used.kind.value,
                   s.terms_used if s is not None else 0,
                   s.tail_estimate if s is not None else None)

    def as_dict(self):
        return {k: getattr(self, k) for k in RECORD_FIELDS}


def _fmt(v):
    return "" if v is None else repr(v)


def _text(v):
    if v is None:
        return "n/a"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) if isinstance(v, float) or v is None else v for v in r])
    return buf.getvalue()


def _spec(args):
    return IntegralSpec(Family(args.family), args.beta, args.alpha, args.lam)


def cmd_eval(args):
    spec = _spec(args)
    av = antiderivative(spec, args.x, tol=args.tol, threshold=args.threshold)
    return OutputRecord.from_value(args.x, av)


def render_record(rec, fmt):
    if fmt == "json":
        return json.dumps(rec.as_dict()) + "\n"
    if fmt == "csv":
        return _csv([[getattr(rec, k) for k in RECORD_FIELDS]], RECORD_FIELDS)
    return " ".join(f"{k}={_text(getattr(rec, k))}" for k in RECORD_FIELDS) + "\n"


def _endpoint_token(e):
    if e.is_finite:
        return repr(e.value)
    return e.kind.value


def cmd_definite(args):
    spec = _spec(args)
    a, b = Endpoint.of(args.a), Endpoint.of(args.b)
    return a, b, definite(spec, a, b, tol=args.tol, threshold=args.threshold)


def render_definite(a, b, value, fmt):
    ta, tb = _endpoint_token(a), _endpoint_token(b)
    if fmt == "json":
        return json.dumps({"a": ta, "b": tb, "value": value}) + "\n"
    if fmt == "csv":
        return _csv([[ta, tb, value]], ("a", "b", "value"))
    return f"{_text(value)}\n"


def cmd_table(args):
    if not args.x_min < args.x_max:
        raise HyperintError(f"x-min must be below x-max (got {args.x_min!r}, {args.x_max!r})")
    if args.steps < 2:
        raise HyperintError(f"steps must be at least 2, got {args.steps}")
    spec = _spec(args)
    n = args.steps - 1
    rows = []
    for i in range(args.steps):
        # weighted form keeps symmetric grids symmetric and hits both ends exactly
        x = (args.x_min * (n - i) + args.x_max * i) / n
        av = antiderivative(spec, x, tol=args.tol, threshold=args.threshold)
        rows.append(OutputRecord.from_value(x, av))
    return rows


def render_table(rows, fmt):
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows]) + "\n"
    return _csv([[getattr(r, k) for k in RECORD_FIELDS] for r in rows], RECORD_FIELDS)


def cmd_check(args):
    return checks.run_suite(args.suite, cases=args.cases, seed=args.seed)


def _add_spec_options(p):
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12, help="series tolerance (default 1e-12)")
    p.add_argument("--threshold", type=float, default=None,
                   help="override the series/asymptotic switch point in |z|")


def build_parser():
    parser = argparse.ArgumentParser(prog="hyperint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an antiderivative at one point")
    _add_spec_options(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("definite", help="definite integral by the fundamental theorem")
    _add_spec_options(p)
    p.add_argument("a", help="lower endpoint; -inf and +inf accepted")
    p.add_argument("b", help="upper endpoint; -inf and +inf accepted")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("table", help="tabulate an antiderivative on a uniform grid")
    _add_spec_options(p)
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=tuple(checks.SUITES))
    p.add_argument("--cases", type=int, default=None, help="number of random cases")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    return parser


def _protect_negatives(argv):
    # argparse reads "-inf" or "-1e3" as an option flag; a leading space
    # makes it positional and float() ignores it
    out = []
    for tok in argv:
        if tok.startswith("-") and tok[1:2] not in ("", "-"):
            try:
                float(tok)
            except ValueError:
                pass
            else:
                tok = " " + tok
        out.append(tok)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_protect_negatives(argv))
    out = sys.stdout
    try:
        if args.command == "eval":
            out.write(render_record(cmd_eval(args), args.format))
        elif args.command == "definite":
            out.write(render_definite(*cmd_definite(args), args.format))
        elif args.command == "table":
            text = render_table(cmd_table(args), args.format)
            if args.out is None:
                out.write(text)
            else:
                try:
                    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                        fh.write(text)
                except OSError as exc:
                    print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
                    return EXIT_USAGE
        else:
            report = cmd_check(args)
            out.write("\n".join(report.lines()) + "\n")
            return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    except (HyperintError, ValueError) as exc:
        print(f"error: {' '.join(str(exc).split())}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
