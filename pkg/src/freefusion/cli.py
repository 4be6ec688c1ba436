"""Command line front end.

Subcommands
  fuse          decompose the product of two word labels
  check-fingen  run the generation test for one degree slice
  scan          run the generation test for k = 1..kmax
  graph         export the degree-(k+1) product graph (JSON, DOT, or PNG)
  orbit         close a word label under built-in symmetries
  surjectivity  confirm the forgetful map covers the invariants up to a degree
  verify        rerun the library's property suites
  report        write scan results as CSV + JSON with rendered figures

Usage examples
  freefusion fuse a b
  freefusion check-fingen --k 3
  freefusion scan --kmax 6 --format json
  freefusion graph --k 3 --dot
  freefusion orbit --seed aba --gens gamma,dual
  freefusion surjectivity --degree 6
  freefusion verify --kmax 4 --samples 100
  freefusion report --kmax 5 --out-dir reports

Exit codes: 0 success (and mathematically consistent), 2 usage or parse
error, 3 arithmetic contradiction (a bug, not a user mistake), 4 resource
budget exceeded. Output for a fixed (command, flags, seed) is byte-identical
across runs.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .fusion import DimensionTable, fuse
from .generation import (
    DEFAULT_DIM_BUDGET,
    NotBipartiteError,
    ResourceLimitError,
    build_graph,
    degree_generated,
    finite_generation_scan,
    verify_hypercube_iso,
)
from .equivariant import check_surjectivity_onto_invariants
from .orbits import BUILTIN_PERMUTATIONS, DEFAULT_CAP, orbit
from .verify import VerifyConfig, run_checks
from .words import ParseError, parse_word

__all__ = ["build_parser", "main", "console"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONTRADICTION = 3
EXIT_RESOURCE = 4


class UsageError(ValueError):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _matrix_size(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"matrix size must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freefusion",
        description="Exact fusion combinatorics of two-letter word labels.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fuse", parents=[common], help="decompose a product of two labels")
    p.add_argument("x", help="first word (a/b letters, e for empty)")
    p.add_argument("y", help="second word")
    p.add_argument("--check-dim", action="store_true", help="also check the dimension identity")
    p.add_argument("--n", type=_matrix_size, default=2, help="matrix size for --check-dim")
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("check-fingen", parents=[common], help="generation test for one slice")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--dim-budget", type=_positive_int, default=DEFAULT_DIM_BUDGET)
    p.set_defaults(func=cmd_check_fingen)

    p = sub.add_parser("scan", parents=[common], help="generation test for k = 1..kmax")
    p.add_argument("--kmax", type=_positive_int, required=True)
    p.add_argument("--dim-budget", type=_positive_int, default=DEFAULT_DIM_BUDGET)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("graph", parents=[common], help="export one product graph")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--dot", action="store_true", help="print DOT text instead")
    p.add_argument("--check-iso", action="store_true", help="include the hypercube check")
    p.add_argument("--figure", metavar="PATH", help="also render a PNG to PATH")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("orbit", parents=[common], help="close a label under symmetries")
    p.add_argument("--seed", required=True, metavar="WORD", help="starting word")
    p.add_argument(
        "--gens",
        default="gamma",
        help=f"comma-separated generator names from: {', '.join(sorted(BUILTIN_PERMUTATIONS))}",
    )
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser(
        "surjectivity", parents=[common], help="check coverage of the invariants"
    )
    p.add_argument("--degree", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_surjectivity)

    p = sub.add_parser("verify", parents=[common], help="rerun the property suites")
    p.add_argument("--word-len", type=_positive_int, default=VerifyConfig.word_len)
    p.add_argument("--pair-len", type=_positive_int, default=VerifyConfig.pair_len)
    p.add_argument("--dim-len", type=_positive_int, default=VerifyConfig.dim_len)
    p.add_argument("--samples", type=_positive_int, default=VerifyConfig.samples)
    p.add_argument("--kmax", type=_positive_int, default=VerifyConfig.kmax)
    p.add_argument("--surj-degree", type=_nonneg_int, default=VerifyConfig.surj_degree)
    p.add_argument("--compat-len", type=_nonneg_int, default=VerifyConfig.compat_len)
    p.add_argument("--seed", type=int, default=VerifyConfig.seed)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="scan + CSV + figures in a directory")
    p.add_argument("--kmax", type=_positive_int, required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--graph-k", type=_positive_int, default=None, help="slice to draw (default min(kmax, 3))")
    p.add_argument("--dim-budget", type=_positive_int, default=DEFAULT_DIM_BUDGET)
    p.set_defaults(func=cmd_report)

    return parser


def _emit(args: argparse.Namespace, doc: object, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


# ---- commands ----

def cmd_fuse(args: argparse.Namespace) -> int:
    x = parse_word(args.x)
    y = parse_word(args.y)
    product = fuse(x, y)
    body = product.to_json_dict()
    text = [f"{x} * {y} = {product}"]
    if not args.check_dim:
        _emit(args, body, text)
        return EXIT_OK
    table = DimensionTable(args.n)
    left = table.dim(x) * table.dim(y)
    right = table.dim_element(product)
    ok = left == right
    doc = {
        "product": body,
        "dimension_check": {"n": args.n, "left": left, "right": right, "ok": ok},
    }
    text.append(f"dim check at n={args.n}: {left} == {right} -> {'ok' if ok else 'FAIL'}")
    _emit(args, doc, text)
    return EXIT_OK if ok else EXIT_CONTRADICTION


def _report_line(r) -> str:
    return (
        f"k={r.k}: dim {r.component_dim}, two-factor span rank {r.span_rank}, "
        + (
            "generated (unexpected)"
            if r.generated
            else f"not generated, witness {r.witness} (invariant {r.witness_invariant})"
        )
    )


def cmd_check_fingen(args: argparse.Namespace) -> int:
    report = degree_generated(args.k, args.dim_budget)
    _emit(args, report.to_json_dict(), [_report_line(report)])
    return EXIT_CONTRADICTION if report.generated else EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    reports = finite_generation_scan(args.kmax, args.dim_budget)
    doc = {
        "kmax": args.kmax,
        "dim_budget": args.dim_budget,
        "reports": [r.to_json_dict() for r in reports],
    }
    _emit(args, doc, [_report_line(r) for r in reports])
    return EXIT_CONTRADICTION if any(r.generated for r in reports) else EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    g = build_graph(args.k)
    if args.figure:
        from .plotting import render_graph_figure

        render_graph_figure(g, args.figure)
    if args.dot:
        print(g.to_dot())
        return EXIT_OK
    doc = g.to_json_dict()
    text = [
        f"k={g.k}: {len(g.vertices)} vertices, {len(g.edges)} edges",
        "vertices: " + " ".join(str(v) for v in g.vertices),
    ]
    if args.check_iso:
        iso = verify_hypercube_iso(g)
        doc["hypercube_isomorphic"] = iso
        text.append(f"hypercube isomorphic: {iso}")
        if not iso:
            _emit(args, doc, text)
            return EXIT_CONTRADICTION
    if args.figure:
        doc["figure"] = args.figure
        text.append(f"figure written to {args.figure}")
    _emit(args, doc, text)
    return EXIT_OK


def cmd_orbit(args: argparse.Namespace) -> int:
    seed = parse_word(args.seed)
    gens = []
    for name in args.gens.split(","):
        name = name.strip()
        if name not in BUILTIN_PERMUTATIONS:
            raise UsageError(
                f"unknown generator {name!r}; choose from {', '.join(sorted(BUILTIN_PERMUTATIONS))}"
            )
        gens.append(BUILTIN_PERMUTATIONS[name])
    report = orbit(seed, gens, args.cap)
    doc = report.to_json_dict()
    doc["gens"] = [p.name for p in gens]
    text = [
        f"orbit of {seed} under {{{', '.join(p.name for p in gens)}}}: "
        f"{{{', '.join(str(w) for w in sorted(report.orbit))}}}"
        f" (size {report.size}{', truncated' if report.truncated else ''})"
    ]
    _emit(args, doc, text)
    return EXIT_OK


def cmd_surjectivity(args: argparse.Namespace) -> int:
    ok = check_surjectivity_onto_invariants(args.degree)
    doc = {"degree": args.degree, "surjective": ok}
    _emit(args, doc, [f"surjective onto the invariants up to degree {args.degree}: {ok}"])
    return EXIT_OK if ok else EXIT_CONTRADICTION


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = VerifyConfig(
        word_len=args.word_len,
        pair_len=args.pair_len,
        dim_len=args.dim_len,
        samples=args.samples,
        kmax=args.kmax,
        surj_degree=args.surj_degree,
        compat_len=args.compat_len,
        seed=args.seed,
    )
    results = run_checks(cfg)
    all_ok = all(r.passed for r in results)
    doc = {
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "all_passed": all_ok,
    }
    text = [
        f"{'ok  ' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
    ] + [f"{sum(r.passed for r in results)}/{len(results)} suites passed"]
    _emit(args, doc, text)
    return EXIT_OK if all_ok else EXIT_CONTRADICTION


def cmd_report(args: argparse.Namespace) -> int:
    from .plotting import render_graph_figure, render_scan_figure

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    reports = finite_generation_scan(args.kmax, args.dim_budget)

    csv_path = out / "scan.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["k", "component_dim", "span_rank", "generated", "witness", "witness_invariant"]
        )
        for r in reports:
            writer.writerow(
                [r.k, r.component_dim, r.span_rank, r.generated, r.witness, r.witness_invariant]
            )

    json_path = out / "scan.json"
    json_path.write_text(
        json.dumps(
            {"kmax": args.kmax, "reports": [r.to_json_dict() for r in reports]},
            indent=2,
        )
        + "\n"
    )

    chart_path = out / "span_rank.png"
    render_scan_figure(reports, str(chart_path))

    graph_k = args.graph_k if args.graph_k is not None else min(args.kmax, 3)
    graph_path = out / f"graph_k{graph_k}.png"
    render_graph_figure(build_graph(graph_k), str(graph_path))

    outputs = [str(p) for p in (csv_path, json_path, chart_path, graph_path)]
    doc = {"kmax": args.kmax, "outputs": outputs}
    text = [f"wrote {p}" for p in outputs] + [_report_line(r) for r in reports]
    _emit(args, doc, text)
    return EXIT_CONTRADICTION if any(r.generated for r in reports) else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except NotBipartiteError as exc:
        print(f"arithmetic contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
