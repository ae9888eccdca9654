"""Class Relation Model (CRM): the canonical JSON interchange for registries.

A CRM document captures everything the metrics need about a set of types, so
models can be written by hand, produced by third-party extractors, or
round-tripped.  Emission is canonical (types sorted by qualified name, members
in declaration order, references sorted), which makes output bytes a stable
function of the registry.

Member reference syntax inside "accesses" and "invokes":

* ``"member"`` -- resolves within the declaring type.
* ``"Owner#member"`` -- resolves through the registry.
* Method references carry arity as ``"member/2"``; the suffix may be omitted
  in hand-written documents when the target name is unambiguous.
"""

from __future__ import annotations

import json
from typing import Any

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
    format_attribute_ref,
    format_method_ref,
    validate_type,
)

SCHEMA_VERSION = "1"

SCHEMA_V1: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Class Relation Model (CRM) v1",
    "type": "object",
    "required": ["schema_version", "types"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": "1"},
        "types": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "kind", "attributes", "methods"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "kind": {"enum": ["class", "interface"]},
                    "superclass": {"type": ["string", "null"]},
                    "source": {
                        "type": ["object", "null"],
                        "required": ["path", "line"],
                        "additionalProperties": False,
                        "properties": {
                            "path": {"type": "string"},
                            "line": {"type": "integer", "minimum": 0},
                        },
                    },
                    "attributes": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name"],
                            "additionalProperties": False,
                            "properties": {
                                "name": {"type": "string", "minLength": 1},
                                "static": {"type": "boolean", "default": False},
                                "visibility": {
                                    "enum": ["private", "package", "protected", "public"],
                                    "default": "package",
                                },
                            },
                        },
                    },
                    "methods": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name"],
                            "additionalProperties": False,
                            "properties": {
                                "name": {"type": "string", "minLength": 1},
                                "arity": {"type": "integer", "minimum": 0, "default": 0},
                                "static": {"type": "boolean", "default": False},
                                "constructor": {"type": "boolean", "default": False},
                                "accesses": {
                                    "type": "array",
                                    "items": {
                                        "type": "string",
                                        "description": "member or Owner#member",
                                    },
                                },
                                "invokes": {
                                    "type": "array",
                                    "items": {
                                        "type": "string",
                                        "description": "member/arity or Owner#member/arity",
                                    },
                                },
                            },
                        },
                    },
                },
            },
        },
    },
}


class CrmError(ValueError):
    """Base class for CRM document problems."""


class CrmParseError(CrmError):
    """The document is malformed; the message names the line or field."""


class CrmValidationError(CrmError):
    """The document parsed but violates a model invariant."""


def schema_json() -> str:
    return json.dumps(SCHEMA_V1, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Parsing


def parse_crm(text: bytes | str, *, strict: bool = True) -> TypeRegistry:
    """Parse one CRM document into a resolved registry.

    Strict mode (the default) rejects unknown fields; lenient mode records a
    warning diagnostic instead.  Invariant violations always raise
    :class:`CrmValidationError` naming the offending type.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CrmParseError(f"document is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CrmParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None

    diagnostics: list[Diagnostic] = []
    walker = _Walker(strict=strict, diagnostics=diagnostics)
    types = walker.document(doc)
    try:
        return TypeRegistry.from_types(types, diagnostics=diagnostics)
    except ModelError as exc:
        raise CrmValidationError(str(exc)) from None


class _Walker:
    """Strict structural walk with JSON-path error locations."""

    def __init__(self, *, strict: bool, diagnostics: list[Diagnostic]):
        self.strict = strict
        self.diagnostics = diagnostics

    def fail(self, path: str, message: str) -> None:
        raise CrmParseError(f"{path}: {message}")

    def check_keys(self, obj: dict, allowed: set[str], path: str) -> None:
        unknown = sorted(set(obj) - allowed)
        if not unknown:
            return
        message = f"unknown field(s): {', '.join(unknown)}"
        if self.strict:
            self.fail(path, message)
        self.diagnostics.append(Diagnostic("warn", f"{path}: {message}"))

    def expect(self, obj: dict, key: str, path: str) -> Any:
        if key not in obj:
            self.fail(path, f"missing required field {key!r}")
        return obj[key]

    def string(self, value: Any, path: str, *, nonempty: bool = True) -> str:
        if not isinstance(value, str) or (nonempty and not value):
            self.fail(path, "expected a non-empty string")
        return value

    def document(self, doc: Any) -> list[TypeModel]:
        if not isinstance(doc, dict):
            self.fail("$", "document root must be an object")
        self.check_keys(doc, {"schema_version", "types"}, "$")
        version = self.expect(doc, "schema_version", "$")
        if version != SCHEMA_VERSION:
            self.fail("$.schema_version", f"unsupported schema version {version!r}")
        raw_types = self.expect(doc, "types", "$")
        if not isinstance(raw_types, list):
            self.fail("$.types", "expected an array")
        return [self.type_model(item, f"$.types[{i}]") for i, item in enumerate(raw_types)]

    def type_model(self, obj: Any, path: str) -> TypeModel:
        if not isinstance(obj, dict):
            self.fail(path, "expected an object")
        self.check_keys(obj, {"name", "kind", "superclass", "source", "attributes", "methods"}, path)
        name = self.string(self.expect(obj, "name", path), f"{path}.name")
        kind = self.string(self.expect(obj, "kind", path), f"{path}.kind")
        if kind not in ("class", "interface"):
            self.fail(f"{path}.kind", f"expected 'class' or 'interface', got {kind!r}")
        superclass = obj.get("superclass")
        if superclass is not None:
            superclass = self.string(superclass, f"{path}.superclass")
        source = obj.get("source")
        location = None
        if source is not None:
            if not isinstance(source, dict) or set(source) - {"path", "line"}:
                self.fail(f"{path}.source", "expected an object with 'path' and 'line'")
            location = SourceLocation(
                path=self.string(self.expect(source, "path", f"{path}.source"), f"{path}.source.path"),
                line=self.integer(self.expect(source, "line", f"{path}.source"), f"{path}.source.line"),
            )
        raw_attrs = self.expect(obj, "attributes", path)
        if not isinstance(raw_attrs, list):
            self.fail(f"{path}.attributes", "expected an array")
        attributes = [self.attribute(a, f"{path}.attributes[{i}]") for i, a in enumerate(raw_attrs)]
        raw_methods = self.expect(obj, "methods", path)
        if not isinstance(raw_methods, list):
            self.fail(f"{path}.methods", "expected an array")
        methods = [
            self.method(m, f"{path}.methods[{i}]", raw_methods) for i, m in enumerate(raw_methods)
        ]
        return TypeModel(
            qualified_name=name,
            kind=kind,
            superclass=superclass,
            attributes=tuple(attributes),
            methods=tuple(methods),
            source_location=location,
        )

    def integer(self, value: Any, path: str) -> int:
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            self.fail(path, "expected a non-negative integer")
        return value

    def attribute(self, obj: Any, path: str) -> AttributeModel:
        if not isinstance(obj, dict):
            self.fail(path, "expected an object")
        self.check_keys(obj, {"name", "static", "visibility"}, path)
        name = self.string(self.expect(obj, "name", path), f"{path}.name")
        visibility = obj.get("visibility", "package")
        if visibility not in ("private", "package", "protected", "public"):
            self.fail(f"{path}.visibility", f"unknown visibility {visibility!r}")
        return AttributeModel(name=name, is_static=bool(obj.get("static", False)), visibility=visibility)

    def method(self, obj: Any, path: str, siblings: list) -> MethodModel:
        if not isinstance(obj, dict):
            self.fail(path, "expected an object")
        self.check_keys(obj, {"name", "arity", "static", "constructor", "accesses", "invokes"}, path)
        name = self.string(self.expect(obj, "name", path), f"{path}.name")
        arity = self.integer(obj.get("arity", 0), f"{path}.arity")
        accesses = [
            self.attribute_ref(r, f"{path}.accesses[{i}]")
            for i, r in enumerate(self._ref_list(obj.get("accesses", []), f"{path}.accesses"))
        ]
        invokes = [
            self.method_ref(r, f"{path}.invokes[{i}]", siblings)
            for i, r in enumerate(self._ref_list(obj.get("invokes", []), f"{path}.invokes"))
        ]
        return MethodModel(
            name=name,
            arity=arity,
            is_static=bool(obj.get("static", False)),
            is_constructor=bool(obj.get("constructor", False)),
            accesses=frozenset(accesses),
            invokes=frozenset(invokes),
        )

    def _ref_list(self, value: Any, path: str) -> list:
        if not isinstance(value, list):
            self.fail(path, "expected an array")
        return value

    def attribute_ref(self, value: Any, path: str) -> AttributeRef:
        text = self.string(value, path)
        owner, _, member = text.rpartition("#")
        if not member:
            self.fail(path, f"malformed attribute reference {text!r}")
        return AttributeRef(member=member, owner=owner or None)

    def method_ref(self, value: Any, path: str, siblings: list) -> MethodRef:
        text = self.string(value, path)
        owner, _, rest = text.rpartition("#")
        name, slash, arity_text = rest.partition("/")
        if not name:
            self.fail(path, f"malformed method reference {text!r}")
        if slash:
            if not arity_text.isdigit():
                self.fail(path, f"malformed arity in method reference {text!r}")
            arity = int(arity_text)
        else:
            if owner:
                self.fail(path, f"qualified method reference {text!r} requires an explicit /arity")
            arities = sorted(
                m.get("arity", 0)
                for m in siblings
                if isinstance(m, dict) and m.get("name") == name
            )
            if len(arities) != 1:
                self.fail(
                    path,
                    f"method reference {text!r} is ambiguous or unresolvable without an /arity suffix",
                )
            arity = arities[0]
        return MethodRef(member=name, arity=arity, owner=owner or None)


# ---------------------------------------------------------------------------
# Emission


def emit_crm(registry: TypeRegistry) -> bytes:
    """Serialize a registry to canonical CRM bytes.

    ``parse_crm(emit_crm(reg))`` reproduces ``reg`` exactly, and identical
    registries always produce identical bytes.
    """
    doc = {
        "schema_version": SCHEMA_VERSION,
        "types": [_type_dict(t) for t in registry],  # registry iterates sorted
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def _type_dict(t: TypeModel) -> dict[str, Any]:
    report = validate_type(t)
    if not report.is_clean:
        raise ModelError(
            f"cannot emit invalid type {t.qualified_name!r}: {report.violations[0].message}"
        )
    out: dict[str, Any] = {"name": t.qualified_name, "kind": t.kind}
    if t.superclass is not None:
        out["superclass"] = t.superclass
    if t.source_location is not None:
        out["source"] = {"path": t.source_location.path, "line": t.source_location.line}
    out["attributes"] = [
        {"name": a.name, "static": a.is_static, "visibility": a.visibility} for a in t.attributes
    ]
    out["methods"] = [
        {
            "name": m.name,
            "arity": m.arity,
            "static": m.is_static,
            "constructor": m.is_constructor,
            "accesses": sorted(format_attribute_ref(r) for r in m.accesses),
            "invokes": sorted(format_method_ref(r) for r in m.invokes),
        }
        for m in t.methods
    ]
    return out
