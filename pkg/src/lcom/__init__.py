"""Class cohesion metrics over object-oriented code.

Computes the five classic LCOM variants plus YALCOM, a bounded graph-based
cohesion metric with an explicit NotComputable outcome, over models built
from Java-subset source files or the CRM JSON interchange format.
"""

from .corpus import (
    CorpusError,
    CorpusRun,
    RunOptions,
    TypeRecord,
    analyze_registry,
    partition_computable,
    run_corpus,
)
from .crm import CrmError, CrmParseError, CrmValidationError, emit_crm, parse_crm, schema_json
from .java_frontend import ExtractionError, extract_directory, extract_types
from .metrics import (
    ALGORITHMS,
    NOT_COMPUTABLE,
    MemberGraph,
    MetricVector,
    build_member_graph,
    compute_all,
    considered_methods,
    is_computable,
    lcom1,
    lcom2,
    lcom3,
    lcom4,
    lcom5,
    method_component_count,
    metric_value,
    outcome_as_number,
    shared_pairs,
    yalcom,
)
from .model import (
    AttributeModel,
    AttributeRef,
    Diagnostic,
    MethodModel,
    MethodRef,
    ModelError,
    SourceLocation,
    TypeModel,
    TypeRegistry,
    ValidationReport,
    Violation,
    inherited_attributes,
    merge_nested_types,
    validate_type,
)
from .stats import (
    AlgorithmDistance,
    DistanceReport,
    FalseZeroEntry,
    SummaryStats,
    compare_to_baseline,
    euclidean_distance,
    min_max_normalize,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AlgorithmDistance",
    "AttributeModel",
    "AttributeRef",
    "CorpusError",
    "CorpusRun",
    "CrmError",
    "CrmParseError",
    "CrmValidationError",
    "Diagnostic",
    "DistanceReport",
    "ExtractionError",
    "FalseZeroEntry",
    "MemberGraph",
    "MethodModel",
    "MethodRef",
    "MetricVector",
    "ModelError",
    "NOT_COMPUTABLE",
    "RunOptions",
    "SourceLocation",
    "SummaryStats",
    "TypeModel",
    "TypeRecord",
    "TypeRegistry",
    "ValidationReport",
    "Violation",
    "analyze_registry",
    "build_member_graph",
    "compare_to_baseline",
    "compute_all",
    "considered_methods",
    "emit_crm",
    "euclidean_distance",
    "extract_directory",
    "extract_types",
    "inherited_attributes",
    "is_computable",
    "lcom1",
    "lcom2",
    "lcom3",
    "lcom4",
    "lcom5",
    "merge_nested_types",
    "method_component_count",
    "metric_value",
    "min_max_normalize",
    "outcome_as_number",
    "parse_crm",
    "partition_computable",
    "run_corpus",
    "schema_json",
    "shared_pairs",
    "summarize",
    "validate_type",
    "yalcom",
]
