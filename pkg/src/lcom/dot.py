"""DOT rendering of a type's member graph.

Methods render as plain boxes, attributes as rounded boxes; arrows point from
a method to each attribute it accesses and to each method it invokes.  Node
and edge order is fully determined by the model, so identical inputs render
identical documents.
"""

from __future__ import annotations

from .metrics import considered_methods
from .model import TypeModel, TypeRegistry, inherited_attributes


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def member_graph_dot(
    t: TypeModel, registry: TypeRegistry, *, include_constructors: bool = False
) -> str:
    methods = sorted(
        considered_methods(t, include_constructors=include_constructors),
        key=lambda m: (m.name, m.arity),
    )
    method_ids = {(m.name, m.arity): f"m:{m.name}/{m.arity}" for m in methods}

    attributes: list[tuple[str, str, str]] = []  # (node id, label, owner)
    attr_ids: dict[tuple[str, str], str] = {}
    for a in t.attributes:
        node = f"a:{t.qualified_name}#{a.name}"
        attr_ids[(t.qualified_name, a.name)] = node
        attributes.append((node, a.name, t.qualified_name))
    for owner, a in inherited_attributes(t, registry):
        node = f"a:{owner}#{a.name}"
        attr_ids[(owner, a.name)] = node
        owner_simple = owner.rsplit(".", 1)[-1]
        attributes.append((node, f"{owner_simple}.{a.name}", owner))
    attributes.sort(key=lambda item: (item[2] != t.qualified_name, item[1], item[2]))

    edges: list[tuple[str, str]] = []
    for m in methods:
        source = method_ids[(m.name, m.arity)]
        for ref in sorted(m.accesses, key=lambda r: (r.owner or "", r.member)):
            owner = ref.owner if ref.owner is not None else t.qualified_name
            target = attr_ids.get((owner, ref.member))
            if target is not None:
                edges.append((source, target))
        for ref in sorted(m.invokes, key=lambda r: (r.owner or "", r.member, r.arity)):
            if ref.owner is not None:
                continue
            target = method_ids.get((ref.member, ref.arity))
            if target is not None and target != source:
                edges.append((source, target))

    lines = [f"digraph {_quote(t.qualified_name)} {{"]
    lines.append("  rankdir=LR;")
    for m in methods:
        node = method_ids[(m.name, m.arity)]
        lines.append(f"  {_quote(node)} [shape=box, label={_quote(m.name)}];")
    for node, label, _owner in attributes:
        lines.append(f"  {_quote(node)} [shape=box, style=rounded, label={_quote(label)}];")
    for source, target in edges:
        lines.append(f"  {_quote(source)} -> {_quote(target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
