"""Command-line interface.

Subcommands:

* ``analyze``  -- per-type metric table (CSV or JSON) over source or CRM input
* ``compare``  -- distance report of every algorithm against a baseline
* ``cases``    -- verify the bundled ground-truth suite from both encodings
* ``graph``    -- DOT rendering of one type's member graph
* ``schema``   -- print the CRM JSON schema

Exit codes: 0 success, 1 configuration error, 2 unreadable input,
3 ground-truth mismatch.  Diagnostics go to stderr as
``path:line: severity: message``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import cases
from .corpus import CorpusError, CorpusRun, RunOptions, load_root, run_corpus
from .crm import CrmError, schema_json
from .dot import member_graph_dot
from .metrics import ALGORITHMS, outcome_as_number
from .model import Diagnostic, TypeRegistry
from .stats import DistanceReport, compare_to_baseline

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    paths: tuple[str, ...]
    input_format: str
    output_format: str
    out: str | None
    options: RunOptions


def _build_parser() -> _Parser:
    parser = _Parser(prog="lcom", description="Class cohesion metrics (LCOM1-5 and YALCOM)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(p: _Parser, with_format: bool = True) -> None:
        p.add_argument("paths", nargs="+", help="repository roots (source dirs or CRM documents)")
        p.add_argument("--input-format", choices=["source", "crm"], default="source")
        if with_format:
            p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", help="write the report to this file instead of stdout")
        p.add_argument("--include-constructors", action="store_true")
        p.add_argument("--merge-nested", action="store_true")
        p.add_argument("--strict-algorithm1", action="store_true")
        p.add_argument("--workers", type=int, default=1)

    add_run_flags(sub.add_parser("analyze", help="per-type metric table"))
    compare = sub.add_parser("compare", help="distance report against a baseline")
    add_run_flags(compare, with_format=False)
    compare.add_argument("--format", choices=["csv", "json"], default="json")
    compare.add_argument("--baseline", default="yalcom")

    sub.add_parser("cases", help="verify the bundled ground-truth suite")

    graph = sub.add_parser("graph", help="DOT member graph of one type")
    graph.add_argument("type_name")
    add_run_flags(graph, with_format=False)

    sub.add_parser("schema", help="print the CRM JSON schema")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    options = RunOptions(
        input_format=args.input_format,
        include_constructors=args.include_constructors,
        merge_nested=args.merge_nested,
        strict_algorithm1=args.strict_algorithm1,
        workers=args.workers,
    )
    return RunConfig(
        paths=tuple(args.paths),
        input_format=args.input_format,
        output_format=getattr(args, "format", "csv"),
        out=args.out,
        options=options,
    )


def _labeled_roots(paths: Sequence[str]) -> list[tuple[str, str]]:
    """Label each root by its directory (or file stem) name, deduplicated."""
    labels: list[tuple[str, str]] = []
    seen: dict[str, int] = {}
    for raw in paths:
        p = Path(raw)
        base = p.stem if p.suffix else p.name
        base = base or str(p)
        seen[base] = seen.get(base, 0) + 1
        label = base if seen[base] == 1 else f"{base}#{seen[base]}"
        labels.append((label, raw))
    return labels


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


def _print_diagnostics(diagnostics: Sequence[Diagnostic]) -> None:
    for d in diagnostics:
        print(d.render(), file=sys.stderr)
    warn = sum(1 for d in diagnostics if d.severity == "warn")
    info = len(diagnostics) - warn
    if diagnostics:
        print(f"diagnostics: {warn} warning(s), {info} info", file=sys.stderr)


def _format_real(value: float) -> str:
    return f"{value:.4f}"


# ---------------------------------------------------------------------------
# analyze


ANALYZE_COLUMNS = (
    "repo",
    "qualified_name",
    "kind",
    "n_methods",
    "n_attributes",
    "lcom1",
    "lcom2",
    "lcom3",
    "lcom4",
    "lcom5",
    "yalcom",
)


def analyze_csv(run: CorpusRun) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ANALYZE_COLUMNS)
    for r in run.records:
        m = r.metrics
        writer.writerow(
            [
                r.repo,
                r.qualified_name,
                m.kind,
                m.n_methods,
                m.n_attributes,
                m.lcom1,
                m.lcom2,
                m.lcom3,
                m.lcom4,
                _format_real(m.lcom5),
                _format_real(outcome_as_number(m.yalcom)),
            ]
        )
    return buffer.getvalue()


def analyze_json(run: CorpusRun) -> str:
    doc = {
        "options": {
            "input_format": run.options.input_format,
            "include_constructors": run.options.include_constructors,
            "merge_nested": run.options.merge_nested,
            "strict_algorithm1": run.options.strict_algorithm1,
            "workers": run.options.workers,
        },
        "records": [
            {
                "repo": r.repo,
                "qualified_name": r.qualified_name,
                "kind": r.metrics.kind,
                "n_methods": r.metrics.n_methods,
                "n_attributes": r.metrics.n_attributes,
                "lcom1": r.metrics.lcom1,
                "lcom2": r.metrics.lcom2,
                "lcom3": r.metrics.lcom3,
                "lcom4": r.metrics.lcom4,
                "lcom5": round(r.metrics.lcom5, 4),
                "yalcom": round(outcome_as_number(r.metrics.yalcom), 4),
            }
            for r in run.records
        ],
        "diagnostics": run.diagnostics_summary(),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_analyze(config: RunConfig) -> int:
    run = run_corpus(_labeled_roots(config.paths), config.options)
    _print_diagnostics(run.diagnostics)
    text = analyze_csv(run) if config.output_format == "csv" else analyze_json(run)
    _emit(text, config.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# compare


def compare_csv(report: DistanceReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["algorithm", "absolute", "normalized", "compared", "excluded"])
    for entry in report.algorithms:
        writer.writerow(
            [
                entry.algorithm,
                _format_real(entry.absolute),
                _format_real(entry.normalized),
                entry.compared,
                entry.excluded,
            ]
        )
    return buffer.getvalue()


def compare_json(report: DistanceReport) -> str:
    doc = {
        "baseline": report.baseline,
        "compared": report.compared,
        "excluded_not_computable": report.excluded_not_computable,
        "algorithms": [
            {
                "algorithm": e.algorithm,
                "absolute": round(e.absolute, 4),
                "normalized": round(e.normalized, 4),
                "compared": e.compared,
                "excluded": e.excluded,
            }
            for e in report.algorithms
        ],
        "per_repo": [
            {
                "repo": rd.repo,
                "algorithms": [
                    {
                        "algorithm": e.algorithm,
                        "absolute": round(e.absolute, 4),
                        "normalized": round(e.normalized, 4),
                        "compared": e.compared,
                        "excluded": e.excluded,
                    }
                    for e in rd.algorithms
                ],
            }
            for rd in report.per_repo
        ],
        "summaries": [
            {
                "algorithm": s.algorithm,
                "maximum": round(s.stats.maximum, 4),
                "minimum": round(s.stats.minimum, 4),
                "median": round(s.stats.median, 4),
                "average": round(s.stats.average, 4),
            }
            for s in report.summaries
        ],
        "false_zero_audit": [
            {
                "repo": e.repo,
                "qualified_name": e.qualified_name,
                "lcom1": e.lcom1,
                "lcom2": e.lcom2,
                "lcom3": e.lcom3,
                "lcom4": e.lcom4,
                "lcom5": round(e.lcom5, 4),
            }
            for e in report.false_zero_audit
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_compare(config: RunConfig, baseline: str) -> int:
    if baseline not in ALGORITHMS:
        print(f"error: unknown baseline {baseline!r}", file=sys.stderr)
        return EXIT_CONFIG
    run = run_corpus(_labeled_roots(config.paths), config.options)
    _print_diagnostics(run.diagnostics)
    report = compare_to_baseline(run, baseline)
    if report.compared == 0:
        print("warning: every record is NotComputable under the baseline; nothing to compare", file=sys.stderr)
    text = compare_csv(report) if config.output_format == "csv" else compare_json(report)
    _emit(text, config.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# cases


def cmd_cases() -> int:
    sources = (
        ("crm", cases.ground_truth_registry_from_crm()),
        ("source", cases.ground_truth_registry_from_source()),
    )
    all_mismatches: list[tuple[str, cases.CellMismatch]] = []
    vectors = {}
    for origin, registry in sources:
        vectors[origin] = cases.suite_vectors(registry)
        all_mismatches.extend((origin, m) for m in cases.verify_registry(registry))

    header = f"{'scenario':<20} {'lcom1':>5} {'lcom2':>5} {'lcom3':>5} {'lcom4':>5} {'lcom5':>6} {'yalcom':>7}  verdict"
    print(header)
    print("-" * len(header))
    for entry in cases.GROUND_TRUTH:
        vector = vectors["crm"].get(entry.type_name)
        if vector is None:
            print(f"{entry.type_name:<20} missing from fixtures")
            continue
        print(
            f"{entry.type_name:<20} {vector.lcom1:>5} {vector.lcom2:>5} {vector.lcom3:>5} {vector.lcom4:>5} "
            f"{vector.lcom5:>6.2f} {outcome_as_number(vector.yalcom):>7.2f}  {entry.verdict}"
        )
    if all_mismatches:
        print()
        for origin, mismatch in all_mismatches:
            print(f"MISMATCH ({origin}): {mismatch.render()}")
        return EXIT_MISMATCH
    print()
    print(f"all {len(cases.GROUND_TRUTH) * len(ALGORITHMS)} cells match from both encodings")
    return EXIT_OK


# ---------------------------------------------------------------------------
# graph


def cmd_graph(type_name: str, config: RunConfig) -> int:
    registries = []
    for _label, path in _labeled_roots(config.paths):
        registries.append(load_root(path, config.options))
    models = [t for registry in registries for t in registry]
    merged = TypeRegistry.from_types(models, lenient=True)
    _print_diagnostics(merged.diagnostics)
    t = merged.get(type_name)
    if t is None:
        print(f"error: type {type_name!r} not found in the input", file=sys.stderr)
        return EXIT_CONFIG
    text = member_graph_dot(t, merged, include_constructors=config.options.include_constructors)
    _emit(text, config.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        if args.command == "schema":
            sys.stdout.write(schema_json())
            return EXIT_OK
        if args.command == "cases":
            return cmd_cases()
        config = _config_from_args(args)
        if args.command == "analyze":
            return cmd_analyze(config)
        if args.command == "compare":
            return cmd_compare(config, args.baseline)
        if args.command == "graph":
            return cmd_graph(args.type_name, config)
    except (CorpusError, CrmError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
