"""Corpus runs: walk repository roots, extract every type, compute metrics.

One root = one repository = one registry; superclass links resolve within a
root, never across roots.  Records come back sorted by (repo, qualified name)
so identical inputs always produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .crm import parse_crm
from .java_frontend import extract_directory
from .metrics import MetricVector, compute_all, is_computable
from .model import Diagnostic, SourceLocation, TypeRegistry, merge_nested_types

INPUT_FORMATS = ("source", "crm")


class CorpusError(Exception):
    """A corpus root is unusable (missing path, undecodable document)."""


@dataclass(frozen=True)
class RunOptions:
    input_format: str = "source"
    include_constructors: bool = False
    merge_nested: bool = False
    strict_algorithm1: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.input_format not in INPUT_FORMATS:
            raise ValueError(f"unknown input format {self.input_format!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class TypeRecord:
    repo: str
    qualified_name: str
    source_location: SourceLocation | None
    metrics: MetricVector


@dataclass(frozen=True)
class CorpusRun:
    records: tuple[TypeRecord, ...]
    options: RunOptions
    diagnostics: tuple[Diagnostic, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "records", tuple(self.records))
        object.__setattr__(self, "diagnostics", tuple(self.diagnostics))

    def diagnostics_summary(self) -> dict[str, int]:
        counts = {"warn": 0, "info": 0}
        for d in self.diagnostics:
            counts[d.severity] = counts.get(d.severity, 0) + 1
        return counts


def load_root(path: str | Path, options: RunOptions) -> TypeRegistry:
    """Build the registry for one repository root."""
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"no such input path: {path}")
    if options.input_format == "crm":
        if path.is_file():
            documents = [path]
        else:
            documents = sorted(p for p in path.rglob("*.json") if p.is_file())
        models = []
        diagnostics: list[Diagnostic] = []
        for doc in documents:
            sub = parse_crm(doc.read_bytes())
            models.extend(sub)
            diagnostics.extend(sub.diagnostics)
        registry = TypeRegistry.from_types(models, lenient=True, diagnostics=diagnostics)
    else:
        if not path.is_dir():
            raise CorpusError(f"source input must be a directory: {path}")
        registry = extract_directory(path, workers=options.workers)
    if options.merge_nested:
        registry = merge_nested_types(registry)
    return registry


def analyze_registry(repo: str, registry: TypeRegistry, options: RunOptions) -> list[TypeRecord]:
    """Metric records for every type of one registry, sorted by name."""
    records = []
    for t in registry:  # sorted iteration
        vector = compute_all(
            t,
            registry,
            include_constructors=options.include_constructors,
            strict_algorithm1=options.strict_algorithm1,
        )
        records.append(TypeRecord(repo, t.qualified_name, t.source_location, vector))
    return records


def run_corpus(roots: list[tuple[str, str | Path]], options: RunOptions | None = None) -> CorpusRun:
    """Analyze every root; per-file problems become diagnostics, not failures.

    ``roots`` pairs a repository label with its path.  The result is invariant
    under root permutation.
    """
    options = options or RunOptions()
    records: list[TypeRecord] = []
    diagnostics: list[Diagnostic] = []
    for label, path in sorted(roots, key=lambda item: item[0]):
        registry = load_root(path, options)
        records.extend(analyze_registry(label, registry, options))
        diagnostics.extend(registry.diagnostics)
    records.sort(key=lambda r: (r.repo, r.qualified_name))
    diagnostics.sort(key=Diagnostic.sort_key)
    return CorpusRun(records=tuple(records), options=options, diagnostics=tuple(diagnostics))


def partition_computable(run: CorpusRun) -> tuple[list[TypeRecord], list[TypeRecord]]:
    """Split records by the YALCOM outcome, preserving order.

    The first list holds records the graph metric could measure; the second
    holds the sentinel cases (interfaces, method-less or attribute-less
    types) that the classic variants silently score as perfectly cohesive.
    """
    computable = [r for r in run.records if is_computable(r.metrics.yalcom)]
    not_computable = [r for r in run.records if not is_computable(r.metrics.yalcom)]
    return computable, not_computable
