"""Language-neutral class-relation model shared by every front-end and metric.

The model describes one analyzed type (class or interface) as a flat record of
attributes, methods, and the member references each method makes.  A
:class:`TypeRegistry` groups the types of one analysis run, resolves
superclass links, and canonicalizes member references so that downstream
consumers never see an unresolvable reference.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Mapping

VISIBILITIES = ("private", "package", "protected", "public")
KINDS = ("class", "interface")

# Reserved by the reference syntax ("Owner#member", "member/arity").
_FORBIDDEN_NAME_CHARS = set("#/ \t\r\n")


@dataclass(frozen=True)
class Diagnostic:
    """A non-fatal finding raised while building or resolving models."""

    severity: str  # "warn" | "info"
    message: str
    path: str | None = None
    line: int | None = None

    def render(self) -> str:
        """Format as ``path:line: severity: message`` for stderr output."""
        prefix = f"{self.path or '<input>'}:{self.line if self.line is not None else 0}"
        return f"{prefix}: {self.severity}: {self.message}"

    def sort_key(self) -> tuple:
        return (self.path or "", self.line or 0, self.severity, self.message)


@dataclass(frozen=True)
class SourceLocation:
    path: str
    line: int


@dataclass(frozen=True)
class AttributeModel:
    """A field declared by a type."""

    name: str
    is_static: bool = False
    visibility: str = "package"


@dataclass(frozen=True)
class AttributeRef:
    """Reference to an attribute; ``owner`` is None for in-type references."""

    member: str
    owner: str | None = None


@dataclass(frozen=True)
class MethodRef:
    """Reference to a method by name and arity; ``owner`` None means in-type."""

    member: str
    arity: int
    owner: str | None = None


@dataclass(frozen=True)
class MethodModel:
    """A method or constructor plus the member references its body makes."""

    name: str
    arity: int = 0
    is_static: bool = False
    is_constructor: bool = False
    accesses: frozenset[AttributeRef] = frozenset()
    invokes: frozenset[MethodRef] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "accesses", frozenset(self.accesses))
        object.__setattr__(self, "invokes", frozenset(self.invokes))

    @property
    def signature(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True)
class TypeModel:
    """One analyzed class or interface."""

    qualified_name: str
    kind: str = "class"
    superclass: str | None = None
    attributes: tuple[AttributeModel, ...] = ()
    methods: tuple[MethodModel, ...] = ()
    source_location: SourceLocation | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "methods", tuple(self.methods))

    @property
    def simple_name(self) -> str:
        return self.qualified_name.rsplit(".", 1)[-1]

    def attribute(self, name: str) -> AttributeModel | None:
        for a in self.attributes:
            if a.name == name:
                return a
        return None

    def method(self, name: str, arity: int) -> MethodModel | None:
        for m in self.methods:
            if m.name == name and m.arity == arity:
                return m
        return None


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    type_name: str
    violations: tuple[Violation, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "violations", tuple(self.violations))

    @property
    def is_clean(self) -> bool:
        return not self.violations


def _bad_name(name: str) -> bool:
    return not name or any(c in _FORBIDDEN_NAME_CHARS for c in name)


def validate_type(t: TypeModel, registry: "TypeRegistry | None" = None) -> ValidationReport:
    """Check the structural invariants of one type.

    Violations are data, not failures: callers decide whether to raise, drop
    the type, or ignore.  Registry-dependent checks (superclass kind) run only
    when a registry is supplied.
    """
    found: list[Violation] = []
    if _bad_name(t.qualified_name):
        found.append(Violation("name", f"invalid type name {t.qualified_name!r}"))
    if t.kind not in KINDS:
        found.append(Violation("kind", f"unknown kind {t.kind!r}"))

    seen_attrs: set[str] = set()
    for a in t.attributes:
        if _bad_name(a.name):
            found.append(Violation("name", f"invalid attribute name {a.name!r}"))
        elif a.name in seen_attrs:
            found.append(Violation("duplicate", f"duplicate attribute name {a.name!r}"))
        seen_attrs.add(a.name)
        if a.visibility not in VISIBILITIES:
            found.append(Violation("visibility", f"attribute {a.name!r} has unknown visibility {a.visibility!r}"))
        if t.kind == "interface" and not a.is_static:
            found.append(Violation("kind", f"interface declares non-static attribute {a.name!r}"))

    seen_methods: set[tuple[str, int]] = set()
    for m in t.methods:
        if _bad_name(m.name):
            found.append(Violation("name", f"invalid method name {m.name!r}"))
        elif (m.name, m.arity) in seen_methods:
            found.append(Violation("duplicate", f"duplicate method {m.signature}"))
        seen_methods.add((m.name, m.arity))
        if m.arity < 0:
            found.append(Violation("arity", f"method {m.name!r} has negative arity"))

    if registry is not None and t.superclass is not None:
        parent = registry.get(t.superclass)
        if parent is not None and parent.kind != "class":
            found.append(
                Violation("superclass", f"superclass {t.superclass!r} is not a class (kind {parent.kind!r})")
            )
    return ValidationReport(t.qualified_name, tuple(found))


def format_attribute_ref(ref: AttributeRef) -> str:
    return ref.member if ref.owner is None else f"{ref.owner}#{ref.member}"


def format_method_ref(ref: MethodRef) -> str:
    base = f"{ref.member}/{ref.arity}"
    return base if ref.owner is None else f"{ref.owner}#{base}"


class TypeRegistry:
    """The immutable set of types in one analysis run.

    Construction canonicalizes every member reference: in-type references stay
    bare, references satisfied by an inherited attribute are qualified with the
    declaring ancestor, and anything unresolvable is dropped with a diagnostic.
    A missing superclass is "external": lookups return None and inheritance
    walks stop there.
    """

    def __init__(self) -> None:
        self._types: dict[str, TypeModel] = {}
        self.diagnostics: list[Diagnostic] = []

    @classmethod
    def from_types(
        cls,
        types: Iterable[TypeModel],
        *,
        lenient: bool = False,
        diagnostics: Iterable[Diagnostic] = (),
    ) -> "TypeRegistry":
        """Build a resolved registry.

        In strict mode (default) duplicate names or validation violations
        raise :class:`ModelError`.  In lenient mode offending types are
        dropped (or their superclass link cleared) with a diagnostic so a
        partial corpus still analyzes.
        """
        reg = cls()
        reg.diagnostics.extend(diagnostics)
        raw: dict[str, TypeModel] = {}
        for t in types:
            if t.qualified_name in raw:
                if not lenient:
                    raise ModelError(f"duplicate type {t.qualified_name!r}")
                reg._diag("warn", f"duplicate type {t.qualified_name!r} dropped", t)
                continue
            raw[t.qualified_name] = t

        kept: dict[str, TypeModel] = {}
        for name in raw:
            t = raw[name]
            report = _validate_raw(t, raw)
            structural = [v for v in report.violations if v.kind != "superclass"]
            if structural:
                if not lenient:
                    raise ModelError(
                        f"invalid type {t.qualified_name!r}: " + "; ".join(v.message for v in structural)
                    )
                reg._diag("warn", f"type {t.qualified_name!r} dropped: {structural[0].message}", t)
                continue
            if any(v.kind == "superclass" for v in report.violations):
                if not lenient:
                    raise ModelError(f"invalid type {t.qualified_name!r}: " + report.violations[0].message)
                reg._diag("warn", f"{t.qualified_name}: superclass link cleared ({t.superclass!r} is not a class)", t)
                t = replace(t, superclass=None)
            kept[name] = t

        for name in sorted(kept):
            reg._types[name] = reg._canonicalize(kept[name], kept)
        reg.diagnostics.sort(key=Diagnostic.sort_key)
        return reg

    # -- lookup ----------------------------------------------------------

    def get(self, qualified_name: str) -> TypeModel | None:
        return self._types.get(qualified_name)

    def __contains__(self, qualified_name: str) -> bool:
        return qualified_name in self._types

    def __len__(self) -> int:
        return len(self._types)

    def __iter__(self) -> Iterator[TypeModel]:
        for name in sorted(self._types):
            yield self._types[name]

    @property
    def types(self) -> Mapping[str, TypeModel]:
        return dict(self._types)

    # -- inheritance ------------------------------------------------------

    def superclass_chain(self, t: TypeModel) -> list[TypeModel]:
        """Resolvable ancestors of ``t``, nearest first; cycle-safe."""
        chain: list[TypeModel] = []
        seen = {t.qualified_name}
        current = t
        while current.superclass is not None:
            parent = self.get(current.superclass)
            if parent is None:
                break  # external ancestor: the walk ends silently
            if parent.qualified_name in seen:
                self._diag("warn", f"inheritance cycle at {parent.qualified_name!r}", t)
                break
            chain.append(parent)
            seen.add(parent.qualified_name)
            current = parent
        return chain

    # -- internals --------------------------------------------------------

    def _diag(self, severity: str, message: str, t: TypeModel | None = None) -> None:
        loc = t.source_location if t is not None else None
        self.diagnostics.append(
            Diagnostic(severity, message, path=loc.path if loc else None, line=loc.line if loc else None)
        )

    def _canonicalize(self, t: TypeModel, raw: Mapping[str, TypeModel]) -> TypeModel:
        inherited = {a.name: owner for owner, a in _inherited(t, raw)}
        declared_attrs = {a.name for a in t.attributes}
        declared_methods = {(m.name, m.arity) for m in t.methods}

        methods = []
        for m in t.methods:
            accesses = set()
            for ref in m.accesses:
                owner = ref.owner
                if owner == t.qualified_name:
                    owner = None
                if owner is None:
                    if ref.member in declared_attrs:
                        accesses.add(AttributeRef(ref.member))
                    elif ref.member in inherited:
                        accesses.add(AttributeRef(ref.member, owner=inherited[ref.member]))
                    else:
                        self._diag(
                            "warn",
                            f"{t.qualified_name}.{m.signature}: unresolvable attribute reference "
                            f"{format_attribute_ref(ref)!r} dropped",
                            t,
                        )
                else:
                    target = raw.get(owner)
                    if target is not None and target.attribute(ref.member) is not None:
                        accesses.add(ref)
                    else:
                        self._diag(
                            "warn",
                            f"{t.qualified_name}.{m.signature}: unresolvable attribute reference "
                            f"{format_attribute_ref(ref)!r} dropped",
                            t,
                        )

            invokes = set()
            for mref in m.invokes:
                owner = mref.owner
                if owner == t.qualified_name:
                    owner = None
                if owner is None:
                    if (mref.member, mref.arity) in declared_methods:
                        invokes.add(MethodRef(mref.member, mref.arity))
                    else:
                        self._diag(
                            "warn",
                            f"{t.qualified_name}.{m.signature}: unresolvable method reference "
                            f"{format_method_ref(mref)!r} dropped",
                            t,
                        )
                else:
                    target = raw.get(owner)
                    if target is not None and target.method(mref.member, mref.arity) is not None:
                        invokes.add(mref)
                    else:
                        self._diag(
                            "warn",
                            f"{t.qualified_name}.{m.signature}: unresolvable method reference "
                            f"{format_method_ref(mref)!r} dropped",
                            t,
                        )
            methods.append(replace(m, accesses=frozenset(accesses), invokes=frozenset(invokes)))
        return replace(t, methods=tuple(methods))


class ModelError(ValueError):
    """A model is structurally unusable (strict registry construction)."""


def _validate_raw(t: TypeModel, raw: Mapping[str, TypeModel]) -> ValidationReport:
    report = validate_type(t)
    extra = list(report.violations)
    if t.superclass is not None:
        parent = raw.get(t.superclass)
        if parent is not None and parent.kind != "class":
            extra.append(
                Violation("superclass", f"superclass {t.superclass!r} is not a class (kind {parent.kind!r})")
            )
    return ValidationReport(t.qualified_name, tuple(extra))


def _inherited(
    t: TypeModel, raw: Mapping[str, TypeModel]
) -> list[tuple[str, AttributeModel]]:
    """Inheritance walk over a raw (pre-registry) type map."""
    out: list[tuple[str, AttributeModel]] = []
    shadowed = {a.name for a in t.attributes}
    seen = {t.qualified_name}
    current = t
    while current.superclass is not None:
        parent = raw.get(current.superclass)
        if parent is None or parent.qualified_name in seen:
            break
        for a in parent.attributes:
            if a.visibility == "private" or a.name in shadowed:
                continue
            out.append((parent.qualified_name, a))
            shadowed.add(a.name)
        seen.add(parent.qualified_name)
        current = parent
    return out


def inherited_attributes(t: TypeModel, registry: TypeRegistry) -> list[tuple[str, AttributeModel]]:
    """All non-private attributes ``t`` inherits, nearest ancestor first.

    An attribute is excluded once a same-named attribute has been declared
    nearer to ``t`` (including by ``t`` itself); private attributes neither
    appear nor shadow.  Unresolvable ancestors end the walk.
    """
    return _inherited(t, registry.types)


def merge_nested_types(registry: TypeRegistry) -> TypeRegistry:
    """Fold nested types into their outermost enclosing type.

    A type N is nested when some other registry type's qualified name is a
    dotted prefix of N's.  Members of N join the outermost type under dotted
    names ("Inner.member"); in-type references follow the rename.  Inheritance
    links of nested types are not carried over (their metric contribution is
    subsumed by the aggregate), which mirrors how generated nested-type
    heavyweights are measured as one unit.
    """
    names = set(registry.types)

    def outermost(name: str) -> str | None:
        parts = name.split(".")
        for i in range(1, len(parts)):
            prefix = ".".join(parts[:i])
            if prefix in names:
                return prefix
        return None

    groups: dict[str, list[TypeModel]] = {}
    roots: dict[str, TypeModel] = {}
    for t in registry:
        root = outermost(t.qualified_name)
        if root is None:
            roots[t.qualified_name] = t
        else:
            groups.setdefault(root, []).append(t)

    merged: list[TypeModel] = []
    dropped_links: list[Diagnostic] = []
    for name in sorted(roots):
        root = roots[name]
        nested = sorted(groups.get(name, ()), key=lambda t: t.qualified_name)
        if not nested:
            merged.append(root)
            continue
        attributes = list(root.attributes)
        methods = list(root.methods)
        for inner in nested:
            rel = inner.qualified_name[len(name) + 1 :]
            if inner.superclass is not None:
                dropped_links.append(
                    Diagnostic(
                        "info",
                        f"{inner.qualified_name}: superclass link {inner.superclass!r} not carried into merged "
                        f"{name}",
                        path=inner.source_location.path if inner.source_location else None,
                        line=inner.source_location.line if inner.source_location else None,
                    )
                )
            for a in inner.attributes:
                attributes.append(replace(a, name=f"{rel}.{a.name}"))
            for m in inner.methods:
                methods.append(
                    replace(
                        m,
                        name=f"{rel}.{m.name}",
                        accesses=frozenset(_requalify_attr(r, name, rel) for r in m.accesses),
                        invokes=frozenset(_requalify_method(r, name, rel) for r in m.invokes),
                    )
                )
        merged.append(replace(root, attributes=tuple(attributes), methods=tuple(methods)))
    return TypeRegistry.from_types(
        merged, lenient=True, diagnostics=list(registry.diagnostics) + dropped_links
    )


def _requalify_attr(ref: AttributeRef, root: str, rel: str) -> AttributeRef:
    if ref.owner is None:
        return AttributeRef(f"{rel}.{ref.member}")
    if ref.owner == root or ref.owner.startswith(root + "."):
        inner_rel = ref.owner[len(root) + 1 :]
        member = f"{inner_rel}.{ref.member}" if inner_rel else ref.member
        return AttributeRef(member)
    return ref


def _requalify_method(ref: MethodRef, root: str, rel: str) -> MethodRef:
    if ref.owner is None:
        return MethodRef(f"{rel}.{ref.member}", ref.arity)
    if ref.owner == root or ref.owner.startswith(root + "."):
        inner_rel = ref.owner[len(root) + 1 :]
        member = f"{inner_rel}.{ref.member}" if inner_rel else ref.member
        return MethodRef(member, ref.arity)
    return ref
