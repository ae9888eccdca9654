"""Class cohesion metrics: the five classic LCOM variants plus YALCOM.

Shared conventions, fixed here once so every variant agrees with the bundled
ground-truth suite:

* Constructors are excluded from the considered method set M(t) by default;
  ``include_constructors=True`` adds them back.  Static methods are ordinary
  methods.
* LCOM1-4 look only at instance (non-static) attributes declared by the type
  itself; static and inherited attributes do not pair methods.
* LCOM5 ranges over every attribute declared by the type, statics included.
* YALCOM builds an undirected member graph over methods, declared attributes
  (statics included) and accessible inherited attributes, then counts the
  connected components that contain at least one method.  The outcome is the
  NotComputable sentinel -- never conflated with a perfect score of 0 -- for
  interfaces, method-less types, and (by default) types whose graph has no
  attribute vertices at all.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .model import MethodModel, TypeModel, TypeRegistry, inherited_attributes

log = logging.getLogger(__name__)


class _NotComputable:
    """Sentinel outcome: the metric cannot be measured (reports as -1)."""

    __slots__ = ()
    _instance: "_NotComputable | None" = None

    def __new__(cls) -> "_NotComputable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NotComputable"


NOT_COMPUTABLE = _NotComputable()

#: A metric outcome: a real value, or the NotComputable sentinel.
MetricOutcome = "float | _NotComputable"


def is_computable(outcome: object) -> bool:
    return outcome is not NOT_COMPUTABLE


def outcome_as_number(outcome: object) -> float:
    """Serialize an outcome: NotComputable becomes -1.0."""
    return -1.0 if outcome is NOT_COMPUTABLE else float(outcome)


@dataclass(frozen=True)
class MetricVector:
    """The six metric outcomes for one type."""

    lcom1: int
    lcom2: int
    lcom3: int
    lcom4: int
    lcom5: float
    yalcom: "float | _NotComputable"
    n_methods: int
    n_attributes: int
    kind: str


ALGORITHMS = ("lcom1", "lcom2", "lcom3", "lcom4", "lcom5", "yalcom")


def metric_value(vector: MetricVector, algorithm: str) -> "float | _NotComputable":
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return getattr(vector, algorithm)


# ---------------------------------------------------------------------------
# Method/attribute views


def considered_methods(t: TypeModel, *, include_constructors: bool = False) -> tuple[MethodModel, ...]:
    """M(t): the methods metrics range over."""
    if include_constructors:
        return t.methods
    return tuple(m for m in t.methods if not m.is_constructor)


def _instance_attr_names(t: TypeModel) -> frozenset[str]:
    return frozenset(a.name for a in t.attributes if not a.is_static)


def _declared_access_names(m: MethodModel) -> frozenset[str]:
    # Bare references are in-type by canonicalization; qualified ones point at
    # ancestors or unrelated types and never name a declared attribute.
    return frozenset(ref.member for ref in m.accesses if ref.owner is None)


def _v_set(t: TypeModel, m: MethodModel, instance_attrs: frozenset[str]) -> frozenset[str]:
    """Instance attributes declared in t that m accesses (the LCOM1-4 view)."""
    return _declared_access_names(m) & instance_attrs


# ---------------------------------------------------------------------------
# LCOM1 / LCOM2


def shared_pairs(t: TypeModel, *, include_constructors: bool = False) -> tuple[int, int]:
    """(P, Q): method pairs sharing no / at least one instance attribute."""
    methods = considered_methods(t, include_constructors=include_constructors)
    instance_attrs = _instance_attr_names(t)
    vsets = [_v_set(t, m, instance_attrs) for m in methods]
    p = q = 0
    for vi, vj in combinations(vsets, 2):
        if vi & vj:
            q += 1
        else:
            p += 1
    return p, q


def lcom1(t: TypeModel, *, include_constructors: bool = False) -> int:
    """Number of method pairs that share no instance attribute."""
    p, _ = shared_pairs(t, include_constructors=include_constructors)
    return p


def lcom2(t: TypeModel, *, include_constructors: bool = False) -> int:
    """max(P - Q, 0); 0 outright when the type declares no instance attribute."""
    if not _instance_attr_names(t):
        return 0
    p, q = shared_pairs(t, include_constructors=include_constructors)
    return max(p - q, 0)


# ---------------------------------------------------------------------------
# LCOM3 / LCOM4 (components of the method-sharing graph)


def _count_components(nodes: list, adjacency: dict) -> int:
    """Connected components by iterative depth-first traversal."""
    seen: set = set()
    components = 0
    for node in nodes:
        if node in seen:
            continue
        components += 1
        stack = [node]
        seen.add(node)
        while stack:
            current = stack.pop()
            for neighbor in adjacency.get(current, ()):
                if neighbor not in seen:
                    seen.add(neighbor)
                    stack.append(neighbor)
    return components


def _method_sharing_components(t: TypeModel, *, include_constructors: bool, with_invocations: bool) -> int:
    methods = considered_methods(t, include_constructors=include_constructors)
    instance_attrs = _instance_attr_names(t)
    keys = [(m.name, m.arity) for m in methods]
    vsets = {key: _v_set(t, m, instance_attrs) for key, m in zip(keys, methods)}
    adjacency: dict[tuple[str, int], set[tuple[str, int]]] = {key: set() for key in keys}
    for ki, kj in combinations(keys, 2):
        if vsets[ki] & vsets[kj]:
            adjacency[ki].add(kj)
            adjacency[kj].add(ki)
    if with_invocations:
        considered = set(keys)
        for m, key in zip(methods, keys):
            for ref in m.invokes:
                if ref.owner is not None:
                    continue  # cross-type call: no cohesion edge
                target = (ref.member, ref.arity)
                if target in considered and target != key:
                    adjacency[key].add(target)
                    adjacency[target].add(key)
    return _count_components(keys, adjacency)


def lcom3(t: TypeModel, *, include_constructors: bool = False) -> int:
    """Components of the graph pairing methods that share instance attributes."""
    return _method_sharing_components(t, include_constructors=include_constructors, with_invocations=False)


def lcom4(t: TypeModel, *, include_constructors: bool = False) -> int:
    """LCOM3's graph plus undirected edges for in-type method invocations."""
    return _method_sharing_components(t, include_constructors=include_constructors, with_invocations=True)


# ---------------------------------------------------------------------------
# LCOM5


def lcom5(t: TypeModel, *, include_constructors: bool = False) -> float:
    """(m - mean attribute usage) / (m - 1) over all declared attributes."""
    methods = considered_methods(t, include_constructors=include_constructors)
    m = len(methods)
    attrs = t.attributes  # statics included
    a = len(attrs)
    if a == 0 or m <= 1:
        return 0.0
    usage_sum = 0
    for attr in attrs:
        usage_sum += sum(1 for meth in methods if attr.name in _declared_access_names(meth))
    return (m - usage_sum / a) / (m - 1)


# ---------------------------------------------------------------------------
# Member graph and YALCOM


@dataclass(frozen=True)
class MethodVertex:
    name: str
    arity: int

    def sort_key(self) -> tuple:
        return (0, self.name, self.arity, "")


@dataclass(frozen=True)
class AttributeVertex:
    owner: str
    name: str

    def sort_key(self) -> tuple:
        return (1, self.name, 0, self.owner)


@dataclass(frozen=True)
class MemberGraph:
    """Undirected graph over a type's methods and (inherited) attributes."""

    vertices: frozenset
    edges: frozenset  # frozenset of 2-element frozensets

    def adjacency(self) -> dict:
        adj: dict = {v: set() for v in self.vertices}
        for edge in self.edges:
            u, v = tuple(edge)
            adj[u].add(v)
            adj[v].add(u)
        return adj


def build_member_graph(
    t: TypeModel, registry: TypeRegistry, *, include_constructors: bool = False
) -> MemberGraph:
    """Vertices: M(t) + declared attributes (statics included) + inherited
    attributes.  Edges: method-attribute accesses and in-type invocations.
    References that do not land on a vertex are dropped (logged)."""
    methods = considered_methods(t, include_constructors=include_constructors)
    method_vertices = {(m.name, m.arity): MethodVertex(m.name, m.arity) for m in methods}
    attr_vertices: dict[tuple[str, str], AttributeVertex] = {}
    for a in t.attributes:
        attr_vertices[(t.qualified_name, a.name)] = AttributeVertex(t.qualified_name, a.name)
    for owner, a in inherited_attributes(t, registry):
        attr_vertices[(owner, a.name)] = AttributeVertex(owner, a.name)

    edges: set[frozenset] = set()
    for m in methods:
        source = method_vertices[(m.name, m.arity)]
        for ref in m.accesses:
            owner = ref.owner if ref.owner is not None else t.qualified_name
            target = attr_vertices.get((owner, ref.member))
            if target is None:
                log.info(
                    "%s.%s: access %r is not a graph vertex; edge dropped",
                    t.qualified_name,
                    m.signature,
                    f"{owner}#{ref.member}",
                )
                continue
            edges.add(frozenset((source, target)))
        for ref in m.invokes:
            if ref.owner is not None:
                continue  # calls into other types carry no in-type cohesion
            target_m = method_vertices.get((ref.member, ref.arity))
            if target_m is None or target_m == source:
                if target_m is None:
                    log.info(
                        "%s.%s: invocation %r is not a graph vertex; edge dropped",
                        t.qualified_name,
                        m.signature,
                        f"{ref.member}/{ref.arity}",
                    )
                continue
            edges.add(frozenset((source, target_m)))
    vertices = frozenset(method_vertices.values()) | frozenset(attr_vertices.values())
    return MemberGraph(vertices=vertices, edges=frozenset(edges))


def method_component_count(graph: MemberGraph) -> int:
    """Connected components containing at least one method vertex."""
    adjacency = graph.adjacency()
    seen: set = set()
    count = 0
    for start in graph.vertices:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        has_method = False
        while stack:
            current = stack.pop()
            if isinstance(current, MethodVertex):
                has_method = True
            for neighbor in adjacency[current]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    stack.append(neighbor)
        if has_method:
            count += 1
    return count


def yalcom(
    t: TypeModel,
    registry: TypeRegistry,
    *,
    include_constructors: bool = False,
    strict_algorithm1: bool = False,
) -> "float | _NotComputable":
    """Method-bearing components of the member graph divided by method count.

    Returns NotComputable for interfaces and method-less types; unless
    ``strict_algorithm1`` is set, also for types whose graph contains no
    attribute vertex (declared or inherited), since such types give the graph
    nothing to cohere around.  A single component means perfect cohesion (0).
    """
    methods = considered_methods(t, include_constructors=include_constructors)
    if t.kind == "interface" or not methods:
        return NOT_COMPUTABLE
    graph = build_member_graph(t, registry, include_constructors=include_constructors)
    if not strict_algorithm1 and not any(isinstance(v, AttributeVertex) for v in graph.vertices):
        return NOT_COMPUTABLE
    d = method_component_count(graph)
    if d > 1:
        return d / len(methods)
    return 0.0


def compute_all(
    t: TypeModel,
    registry: TypeRegistry,
    *,
    include_constructors: bool = False,
    strict_algorithm1: bool = False,
) -> MetricVector:
    """All six metrics for one type."""
    return MetricVector(
        lcom1=lcom1(t, include_constructors=include_constructors),
        lcom2=lcom2(t, include_constructors=include_constructors),
        lcom3=lcom3(t, include_constructors=include_constructors),
        lcom4=lcom4(t, include_constructors=include_constructors),
        lcom5=lcom5(t, include_constructors=include_constructors),
        yalcom=yalcom(
            t,
            registry,
            include_constructors=include_constructors,
            strict_algorithm1=strict_algorithm1,
        ),
        n_methods=len(considered_methods(t, include_constructors=include_constructors)),
        n_attributes=len(t.attributes),
        kind=t.kind,
    )
