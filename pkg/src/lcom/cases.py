"""The bundled ground-truth suite: eight hand-built scenarios with the metric
values each algorithm is expected to produce, plus the cohesion verdict that
experienced developers assigned to each scenario.

The suite ships in two equivalent encodings -- a CRM document and Java-subset
source files -- so both front-ends can be checked against the same table.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .crm import parse_crm
from .java_frontend import extract_types, resolve_superclass_names
from .metrics import (
    ALGORITHMS,
    NOT_COMPUTABLE,
    MetricVector,
    compute_all,
    is_computable,
    metric_value,
    outcome_as_number,
)
from .model import TypeRegistry

LABEL_COHESIVE = "Cohesive"
LABEL_PARTIAL = "Partially cohesive"
LABEL_INCOHESIVE = "Incohesive"
LABEL_UNDETERMINED = "Could not be determined"

#: Comparison tolerance for the real-valued columns (the published table is
#: rounded to two decimals).
REAL_TOLERANCE = 0.005


@dataclass(frozen=True)
class GroundTruthEntry:
    ordinal: int
    type_name: str
    lcom1: int
    lcom2: int
    lcom3: int
    lcom4: int
    lcom5: float
    yalcom: object  # float or NOT_COMPUTABLE
    verdict: str


GROUND_TRUTH: tuple[GroundTruthEntry, ...] = (
    GroundTruthEntry(1, "FullyCohesive", 1, 0, 1, 1, 0.67, 0.00, LABEL_COHESIVE),
    GroundTruthEntry(2, "StaticCounterMix", 2, 1, 2, 2, 0.67, 0.00, LABEL_COHESIVE),
    GroundTruthEntry(3, "TwoClusters", 2, 1, 2, 2, 0.67, 0.67, LABEL_PARTIAL),
    GroundTruthEntry(4, "InheritedFieldUser", 2, 1, 2, 2, 0.50, 0.00, LABEL_COHESIVE),
    GroundTruthEntry(5, "ThreeIslands", 3, 3, 3, 3, 1.00, 1.00, LABEL_INCOHESIVE),
    GroundTruthEntry(6, "DelegatingRecorder", 2, 1, 2, 1, 0.83, 0.00, LABEL_COHESIVE),
    GroundTruthEntry(7, "PlainContract", 3, 0, 3, 3, 0.00, NOT_COMPUTABLE, LABEL_UNDETERMINED),
    GroundTruthEntry(8, "StaticHelpers", 3, 0, 3, 2, 0.00, NOT_COMPUTABLE, LABEL_UNDETERMINED),
)


def _fixture_root():
    return resources.files("lcom") / "fixtures"


def ground_truth_registry_from_crm() -> TypeRegistry:
    """The suite parsed from its CRM fixture document."""
    text = (_fixture_root() / "crm" / "ground_truth.json").read_text(encoding="utf-8")
    return parse_crm(text)


def ground_truth_registry_from_source() -> TypeRegistry:
    """The suite extracted from its Java-subset source fixtures."""
    models = []
    diagnostics = []
    java_dir = _fixture_root() / "java"
    for entry in sorted(java_dir.iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".java"):
            continue
        extracted, diags = extract_types(entry.read_text(encoding="utf-8"), entry.name)
        models.extend(extracted)
        diagnostics.extend(diags)
    models.sort(key=lambda t: t.qualified_name)
    models = resolve_superclass_names(models)
    return TypeRegistry.from_types(models, lenient=True, diagnostics=diagnostics)


@dataclass(frozen=True)
class CellMismatch:
    type_name: str
    algorithm: str
    computed: object
    expected: object

    def render(self) -> str:
        return (
            f"{self.type_name}.{self.algorithm}: computed "
            f"{outcome_as_number(self.computed):.2f}, expected {outcome_as_number(self.expected):.2f}"
        )


def expected_vector(entry: GroundTruthEntry) -> dict:
    return {
        "lcom1": entry.lcom1,
        "lcom2": entry.lcom2,
        "lcom3": entry.lcom3,
        "lcom4": entry.lcom4,
        "lcom5": entry.lcom5,
        "yalcom": entry.yalcom,
    }


def _cell_matches(computed: object, expected: object) -> bool:
    if (computed is NOT_COMPUTABLE) != (expected is NOT_COMPUTABLE):
        return False
    if computed is NOT_COMPUTABLE:
        return True
    if isinstance(expected, int) and isinstance(computed, int):
        return computed == expected
    return abs(float(computed) - float(expected)) <= REAL_TOLERANCE


def verify_registry(registry: TypeRegistry) -> list[CellMismatch]:
    """Compare every suite cell against its expected value; empty means clean."""
    mismatches = []
    for entry in GROUND_TRUTH:
        t = registry.get(entry.type_name)
        if t is None:
            mismatches.extend(
                CellMismatch(entry.type_name, algorithm, "missing", expected_vector(entry)[algorithm])
                for algorithm in ALGORITHMS
            )
            continue
        vector = compute_all(t, registry)
        for algorithm in ALGORITHMS:
            computed = metric_value(vector, algorithm)
            expected = expected_vector(entry)[algorithm]
            if not _cell_matches(computed, expected):
                mismatches.append(CellMismatch(entry.type_name, algorithm, computed, expected))
    return mismatches


def suite_vectors(registry: TypeRegistry) -> dict[str, MetricVector]:
    return {
        entry.type_name: compute_all(registry.get(entry.type_name), registry)
        for entry in GROUND_TRUTH
        if registry.get(entry.type_name) is not None
    }
