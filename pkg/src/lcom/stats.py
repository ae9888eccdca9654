"""Normalization, Euclidean-distance comparison, and summary statistics.

The comparison pipeline mirrors how metric families are judged against a
baseline at corpus scale: records the baseline cannot measure are set aside
first, distances are computed over the raw values, and again over per-repo
min-max normalized values so unbounded variants and bounded ones share a
scale.  A "false-zero audit" lists the set-aside records that LCOM2 or LCOM5
nevertheless scored as perfectly cohesive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import mean, median
from typing import Hashable, Sequence

from .corpus import CorpusRun, TypeRecord, partition_computable
from .metrics import ALGORITHMS, is_computable, metric_value


@dataclass(frozen=True)
class SummaryStats:
    maximum: float
    minimum: float
    median: float
    average: float


def euclidean_distance(u: Sequence[float], v: Sequence[float]) -> float:
    """sqrt of the summed squared componentwise differences."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(u, v)))


def min_max_normalize(
    values: Sequence[float], groups: Sequence[Hashable] | None = None
) -> list[float]:
    """Affine rescale of each group to [0, 1]; a constant group maps to 0.

    ``groups`` assigns each value to a normalization group (one repository,
    in the comparison pipeline); omitted means one global group.  Callers must
    exclude NotComputable outcomes beforehand.
    """
    if groups is None:
        groups = [None] * len(values)
    if len(groups) != len(values):
        raise ValueError(f"length mismatch: {len(values)} values vs {len(groups)} group keys")
    bounds: dict[Hashable, tuple[float, float]] = {}
    for value, group in zip(values, groups):
        low, high = bounds.get(group, (math.inf, -math.inf))
        bounds[group] = (min(low, value), max(high, value))
    out = []
    for value, group in zip(values, groups):
        low, high = bounds[group]
        if high == low:
            out.append(0.0)  # a constant series carries no dispersion signal
        else:
            out.append((value - low) / (high - low))
    return out


def summarize(values: Sequence[float]) -> SummaryStats:
    """Exact order statistics; median averages the midpoints for even length."""
    if not values:
        raise ValueError("cannot summarize an empty series")
    return SummaryStats(
        maximum=max(values),
        minimum=min(values),
        median=float(median(values)),
        average=float(mean(values)),
    )


@dataclass(frozen=True)
class AlgorithmDistance:
    algorithm: str
    absolute: float
    normalized: float
    compared: int
    excluded: int


@dataclass(frozen=True)
class RepoDistances:
    repo: str
    algorithms: tuple[AlgorithmDistance, ...]


@dataclass(frozen=True)
class FalseZeroEntry:
    """A record the baseline could not measure but a classic variant scored 0."""

    repo: str
    qualified_name: str
    lcom1: int
    lcom2: int
    lcom3: int
    lcom4: int
    lcom5: float


@dataclass(frozen=True)
class AlgorithmSummary:
    algorithm: str
    stats: SummaryStats


@dataclass(frozen=True)
class DistanceReport:
    baseline: str
    compared: int
    excluded_not_computable: int
    algorithms: tuple[AlgorithmDistance, ...]
    per_repo: tuple[RepoDistances, ...]
    summaries: tuple[AlgorithmSummary, ...]
    false_zero_audit: tuple[FalseZeroEntry, ...]


def _false_zero_audit(not_computable: list[TypeRecord]) -> tuple[FalseZeroEntry, ...]:
    entries = []
    for record in not_computable:
        m = record.metrics
        if m.lcom2 == 0 or m.lcom5 == 0:
            entries.append(
                FalseZeroEntry(
                    repo=record.repo,
                    qualified_name=record.qualified_name,
                    lcom1=m.lcom1,
                    lcom2=m.lcom2,
                    lcom3=m.lcom3,
                    lcom4=m.lcom4,
                    lcom5=m.lcom5,
                )
            )
    return tuple(entries)


def _distances(
    records: list[TypeRecord], baseline: str, algorithms: Sequence[str]
) -> list[AlgorithmDistance]:
    """Pairwise distances against the baseline over one record set.

    A record joins an algorithm's comparison only when both that algorithm and
    the baseline are computable on it (the baseline always is here).
    """
    out = []
    base_all = [metric_value(r.metrics, baseline) for r in records]
    repos_all = [r.repo for r in records]
    for algorithm in algorithms:
        values = [metric_value(r.metrics, algorithm) for r in records]
        keep = [i for i, v in enumerate(values) if is_computable(v)]
        u = [float(values[i]) for i in keep]
        v = [float(base_all[i]) for i in keep]
        groups = [repos_all[i] for i in keep]
        absolute = euclidean_distance(u, v)
        normalized = euclidean_distance(
            min_max_normalize(u, groups), min_max_normalize(v, groups)
        )
        out.append(
            AlgorithmDistance(
                algorithm=algorithm,
                absolute=absolute,
                normalized=normalized,
                compared=len(keep),
                excluded=len(records) - len(keep),
            )
        )
    return out


def compare_to_baseline(run: CorpusRun, baseline: str) -> DistanceReport:
    """Distance of every algorithm to ``baseline`` over one corpus run.

    Records where the baseline is NotComputable are excluded from both the
    absolute and the normalized comparison (only the graph metric has that
    outcome; classic baselines exclude nothing).  The false-zero audit always
    lists the sentinel records that LCOM2 or LCOM5 scored as perfect zeros.
    """
    if baseline not in ALGORITHMS:
        raise ValueError(f"unknown baseline {baseline!r}")
    computable, not_computable = partition_computable(run)
    if baseline == "yalcom":
        included, excluded = computable, not_computable
    else:
        included, excluded = list(run.records), []

    algorithms = _distances(included, baseline, ALGORITHMS)

    per_repo = []
    for repo in sorted({r.repo for r in included}):
        repo_records = [r for r in included if r.repo == repo]
        per_repo.append(RepoDistances(repo=repo, algorithms=tuple(_distances(repo_records, baseline, ALGORITHMS))))

    summaries = []
    for algorithm in ALGORITHMS:
        values = [
            float(metric_value(r.metrics, algorithm))
            for r in included
            if is_computable(metric_value(r.metrics, algorithm))
        ]
        if values:
            summaries.append(AlgorithmSummary(algorithm=algorithm, stats=summarize(values)))

    return DistanceReport(
        baseline=baseline,
        compared=len(included),
        excluded_not_computable=len(excluded),
        algorithms=tuple(algorithms),
        per_repo=tuple(per_repo),
        summaries=tuple(summaries),
        false_zero_audit=_false_zero_audit(not_computable),
    )
