"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .errors import InputError
from .gauge import (
    HomotopyReport, bg_loop_oracle, gauge_group_homotopy, mapping_space_homotopy,
    projective_gauge_homotopy, samelson_algebra, thom_homotopy, ua_homotopy, H_TYPE, ZERO_BRACKET,
)
from .graded import UNBOUNDED, GradedDims, poincare_series
from .groups import CATALOG_GROUPS, parse_group
from .limits import DEFAULT_WINDOW, ColimitReport, colimit_dims, load_system
from .simplicial import _read_json, betti, complex_from_json, load_complex

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

GAUGE_COMMANDS = {
    "mapping-space": mapping_space_homotopy,
    "gauge": gauge_group_homotopy,
    "projective-gauge": projective_gauge_homotopy,
}


def default_corpus() -> Path:
    return Path(str(resources.files("ratgauge") / "data" / "corpus"))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _dims_table(dims: GradedDims, label: str, lo: int, lower_bounds=()) -> list[str]:
    if not dims:
        return [f"{label}  (zero in every degree)"]
    hi = max(dims)
    width = len(str(hi))
    lines = []
    for k in range(lo, hi + 1):
        d = dims[k]
        shown = "∞" if d is UNBOUNDED else str(d)
        mark = "≥" if k in lower_bounds else ""
        lines.append(f"{label}{k:<{width}}  {mark}{shown}")
    return lines


# -- input resolution -----------------------------------------------------------

def _x_input(args):
    """Cohomology of X from --complex, or a colimit report from --system."""
    if bool(args.complex) == bool(args.system):
        raise InputError("give exactly one of --complex or --system")
    if args.complex:
        return betti(load_complex(args.complex))
    return colimit_dims(load_system(args.system), args.window)


# -- commands -------------------------------------------------------------------

def run_cohomology(args) -> int:
    b = betti(load_complex(args.complex))
    if args.output == "json":
        sys.stdout.write(_dump(b.to_json()))
    elif args.output == "series":
        print(poincare_series(b))
    else:
        print("\n".join(_dims_table(b, "H^", 0)))
    return EXIT_OK


def render_report_table(report: HomotopyReport, quiet: bool) -> str:
    lines = ["identity component, pi_k (x) Q:"]
    lines += ["  " + ln for ln in _dims_table(report.identity_component, "pi_", 1,
                                               report.lower_bound_degrees)]
    mark = "≥" if report.degree_zero_lower_bound else ""
    lines.append(f"degree 0 ({report.degree_zero_label}): {mark}{report.degree_zero}")
    lines.append("contributions (generator degree d, cohomology degree n, multiplicity):")
    for d, n, mult in report.contributions:
        lines.append(f"  d={d} n={n} x{mult} -> degree {d - n}")
    lines.append(f"samelson bracket: {report.samelson_bracket}")
    lines.append(f"rational H-type: {report.h_type}")
    if not quiet:
        lines += ["notes:"] + [f"  {note}" for note in report.notes]
    return "\n".join(lines) + "\n"


def _emit_report(report: HomotopyReport, args) -> None:
    if args.output == "json":
        data = report.to_json()
        if args.quiet:
            data["notes"] = []
        sys.stdout.write(_dump(data))
    elif args.output == "series":
        print(report.series())
        if report.lower_bound_degrees and not args.quiet:
            print("# lower bounds in degrees: " + ", ".join(map(str, report.lower_bound_degrees)))
    else:
        sys.stdout.write(render_report_table(report, args.quiet))


def run_gauge_family(args) -> int:
    x = _x_input(args)
    if args.command == "ua":
        if args.n is None:
            raise InputError("ua needs --n")
        report = ua_homotopy(x, args.n, args.max_degree)
    else:
        if args.group is None:
            raise InputError(f"{args.command} needs --group")
        report = GAUGE_COMMANDS[args.command](x, parse_group(args.group), args.max_degree)
    _emit_report(report, args)
    return EXIT_OK


def run_thom(args) -> int:
    if args.p is None:
        raise InputError("thom needs --p")
    x = _x_input(args)
    b = x.cohomology() if isinstance(x, ColimitReport) else x
    out = thom_homotopy(b, args.p)
    if args.output == "json":
        sys.stdout.write(_dump(out.to_json()))
    elif args.output == "series":
        print(poincare_series(out))
    else:
        print("\n".join(_dims_table(out, "pi_", 0)))
    return EXIT_OK


def run_colimit(args) -> int:
    if not args.system:
        raise InputError("colimit needs --system")
    report = colimit_dims(load_system(args.system), args.window)
    if args.output == "json":
        sys.stdout.write(_dump(report.to_json()))
    elif args.output == "series":
        print(poincare_series(report.cohomology()))
    else:
        for d, c in sorted(report.degrees.items()):
            mark = "" if c.stable else "≥"
            ranks = ", ".join(map(str, c.rank_sequence))
            print(f"H^{d}  {mark}{c.dimension}  {c.status.value}  ranks=({ranks})")
        if not args.quiet:
            print(f"window {report.window}: a finite tower cannot certify a colimit; "
                  "STABLE means flat over the trailing window")
    return EXIT_OK


# -- verification sweep ---------------------------------------------------------

def _sphere_dimension(b: GradedDims) -> int | None:
    if len(b) == 2 and b[0] == 1 and all(v == 1 for v in b.values()) and max(b) >= 1:
        return max(b)
    return None


def verify_corpus(corpus: Path, max_degree: int) -> tuple[list[str], list[str]]:
    """Run the cross-checks; return (summary lines, failure descriptions)."""
    files = sorted(corpus.glob("*.json"))
    if not files:
        raise InputError(f"corpus directory {corpus} has no complex files")
    summary, failures = [], []
    for path in files:
        data = _read_json(path)
        b = betti(complex_from_json(data, str(path)))
        checks = 0
        fixture = data.get("betti")
        if fixture is not None:
            expected = GradedDims.from_json(fixture)
            for k in sorted(set(expected) | set(b)):
                if expected[k] != b[k]:
                    failures.append(f"{path.name}: betti fixture mismatch in degree {k}: "
                                    f"fixture {expected[k]}, computed {b[k]}")
            checks += 1
        for spec in CATALOG_GROUPS:
            g = parse_group(spec)
            report = mapping_space_homotopy(b, g, max_degree)
            oracle = bg_loop_oracle(b, g)
            gens = GradedDims.from_degrees(g.generator_degrees)
            k_sphere = _sphere_dimension(b)
            for k in range(1, max_degree + 1):
                got = report.identity_component[k]
                if got != oracle[k]:
                    failures.append(_counterexample("oracle equivalence", path, spec, k, got, oracle[k], report))
                if k_sphere is not None and got != gens[k] + gens[k + k_sphere]:
                    failures.append(_counterexample("sphere law", path, spec, k, got,
                                                    gens[k] + gens[k + k_sphere], report))
                if b == GradedDims({0: 1}) and got != gens[k]:
                    failures.append(_counterexample("point law", path, spec, k, got, gens[k], report))
                checks += 1
            alg = samelson_algebra(report)
            if report.samelson_bracket != ZERO_BRACKET or alg.bracket != ZERO_BRACKET \
                    or report.h_type != H_TYPE:
                failures.append(f"{path.name} / {spec}: Samelson output contract violated")
            checks += 1
        summary.append(f"{path.name}: betti {poincare_series(b)}; {checks} checks")
    return summary, failures


def _counterexample(law, path, spec, k, got, want, report) -> str:
    parts = ", ".join(f"(d={d}, n={n}, x{m})" for d, n, m in report.contributions if d - n == k)
    return (f"{law} FAILED for {path.name} with G={spec} in degree {k}: "
            f"Theorem B gives {got}, expected {want}; contributions: {parts or 'none'}")


def run_verify(args) -> int:
    if args.max_degree is None:
        args.max_degree = 40
    if args.max_degree < 1:
        raise InputError("--max-degree must be at least 1 for verify")
    corpus = Path(args.corpus) if args.corpus else default_corpus()
    if not corpus.is_dir():
        raise InputError(f"corpus directory not found: {corpus}")
    summary, failures = verify_corpus(corpus, args.max_degree)
    if not args.quiet:
        for line in summary:
            print(line)
    if failures:
        print(failures[0])
        print(f"FAIL: {len(failures)} mismatches")
        return EXIT_FAIL
    print(f"PASS: oracle equivalence, sphere law, point law and Samelson contract "
          f"on {len(summary)} complexes x {len(CATALOG_GROUPS)} groups, degrees 1..{args.max_degree}")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("table", "json", "series"), default="table")
    common.add_argument("--quiet", action="store_true", help="suppress provenance notes")

    xin = argparse.ArgumentParser(add_help=False)
    xin.add_argument("--complex", metavar="PATH")
    xin.add_argument("--system", metavar="PATH")
    xin.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    xin.add_argument("--max-degree", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="ratgauge",
        description="Rational homotopy of mapping spaces, gauge groups and unitary groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", parents=[common], help="rational Betti numbers of a complex")
    p.add_argument("--complex", metavar="PATH", required=True)
    p.set_defaults(func=run_cohomology)

    for name in ("mapping-space", "gauge", "projective-gauge"):
        p = sub.add_parser(name, parents=[common, xin])
        p.add_argument("--group", metavar="SPEC")
        p.set_defaults(func=run_gauge_family)
    p = sub.add_parser("ua", parents=[common, xin], help="unitary group of a continuous-trace algebra")
    p.add_argument("--n", type=int)
    p.set_defaults(func=run_gauge_family)

    p = sub.add_parser("thom", parents=[common, xin], help="pi_* F(X, K(Q, p))")
    p.add_argument("--p", type=int)
    p.set_defaults(func=run_thom)

    p = sub.add_parser("colimit", parents=[common], help="cohomology of an inverse limit")
    p.add_argument("--system", metavar="PATH")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.set_defaults(func=run_colimit)

    p = sub.add_parser("verify", parents=[common], help="cross-check both routes over a corpus")
    p.add_argument("--corpus", metavar="DIR")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"ratgauge {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
