"""Source front-end for a defined Java-like object-oriented subset.

The extractor is purely syntactic: it tokenizes a compilation unit, walks the
class/interface declarations (including nested ones), and scans method bodies
for identifier reads and call sites.  There is no type inference, classpath,
or bytecode resolution; the rules below are the whole contract.

* A field access is recorded for ``this.f`` and for a bare identifier ``f``
  that is not shadowed by a parameter or a local variable declared anywhere
  in the body (local tracking is flow-insensitive on purpose: a local wins
  over a field throughout its method).
* Identifiers in receiver or qualifier position (``x.y().z``, ``Foo.BAR``,
  ``Foo::bar``) contribute no edges.
* An invocation is recorded for ``this.m(...)`` and bare ``m(...)`` when name
  and argument count match a method declared by the same type.
* Bodies of anonymous classes and lambdas attribute their reads to the
  enclosing method; initializer blocks are ignored.
* ``enum``, ``record``, and annotation-type declarations are outside the
  subset and are skipped with a diagnostic; sibling types still extract.

Unresolved bare reads are kept on the model as unqualified references; the
registry resolves them against inherited attributes or drops them with a
diagnostic.
"""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .model import (
    AttributeModel,
    AttributeRef,
    Diagnostic,
    MethodModel,
    MethodRef,
    SourceLocation,
    TypeModel,
    TypeRegistry,
)

JAVA_EXTENSION = ".java"

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while var record sealed
    permits yield true false null""".split()
)

PRIMITIVE_TYPES = frozenset("boolean byte char double float int long short void var".split())

MODIFIER_WORDS = frozenset(
    "public protected private static final abstract synchronized native strictfp transient volatile default sealed".split()
)

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<line_comment>//[^\n]*)
    | (?P<block_comment>/\*.*?\*/)
    | (?P<text_block>\"\"\".*?\"\"\")
    | (?P<string>"(?:\\.|[^"\\\n])*")
    | (?P<char>'(?:\\.|[^'\\\n])*')
    | (?P<number>\.?\d[\w.]*)
    | (?P<ident>[A-Za-z_$][A-Za-z0-9_$]*)
    | (?P<arrow>->)
    | (?P<coloncolon>::)
    | (?P<punct>[{}()\[\];,.<>=+\-*/%!&|^~?:@])
    """,
    re.VERBOSE | re.DOTALL,
)

_FATAL_CHARS = {'"', "'"}


class ExtractionError(Exception):
    """A file could not be tokenized or structurally parsed at all."""

    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class Token:
    kind: str  # ident | number | string | char | punct
    text: str
    line: int


def tokenize(source: str, path: str) -> list[Token]:
    tokens: list[Token] = []
    line = 1
    pos = 0
    n = len(source)
    while pos < n:
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            ch = source[pos]
            if ch in _FATAL_CHARS:
                raise ExtractionError(path, line, f"unterminated string or character literal")
            # Unknown character: tolerate and move on.
            pos += 1
            continue
        kind = match.lastgroup or "punct"
        text = match.group()
        if kind == "ident":
            tokens.append(Token("ident", text, line))
        elif kind in ("string", "char", "text_block"):
            tokens.append(Token("string" if kind != "char" else "char", text, line))
        elif kind == "number":
            tokens.append(Token("number", text, line))
        elif kind in ("arrow", "coloncolon", "punct"):
            tokens.append(Token("punct", text, line))
        line += text.count("\n")
        pos = match.end()
    return tokens


# ---------------------------------------------------------------------------
# Structural parsing


@dataclass
class _RawMethod:
    name: str
    arity: int
    is_static: bool
    is_constructor: bool
    params: list[str]
    body: tuple[int, int] | None  # token span of the body interior
    line: int


@dataclass
class _RawType:
    qualified_name: str
    kind: str
    superclass: str | None
    attributes: list[AttributeModel]
    methods: list[_RawMethod]
    line: int


class _Parser:
    def __init__(self, tokens: list[Token], path: str):
        self.tokens = tokens
        self.path = path
        self.i = 0
        self.package: str | None = None
        self.types: list[_RawType] = []
        self.diagnostics: list[Diagnostic] = []

    # -- helpers -----------------------------------------------------------

    def peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.tokens[j] if 0 <= j < len(self.tokens) else None

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.text == text

    def diag(self, severity: str, message: str, line: int) -> None:
        self.diagnostics.append(Diagnostic(severity, message, path=self.path, line=line))

    def skip_balanced(self, open_text: str, close_text: str) -> None:
        """Assumes current token is ``open_text``; skips past its match."""
        depth = 0
        while self.i < len(self.tokens):
            text = self.tokens[self.i].text
            if text == open_text:
                depth += 1
            elif text == close_text:
                depth -= 1
                if depth == 0:
                    self.i += 1
                    return
            self.i += 1

    def skip_to_semicolon(self) -> None:
        depth = 0
        while self.i < len(self.tokens):
            text = self.tokens[self.i].text
            if text in "({[":
                depth += 1
            elif text in ")}]":
                depth -= 1
            elif text == ";" and depth <= 0:
                self.i += 1
                return
            self.i += 1

    def dotted_name(self) -> str | None:
        tok = self.peek()
        if tok is None or tok.kind != "ident":
            return None
        parts = [tok.text]
        self.i += 1
        while self.at(".") and (nxt := self.peek(1)) is not None and nxt.kind == "ident":
            parts.append(nxt.text)
            self.i += 2
        return ".".join(parts)

    def try_skip_generics(self) -> None:
        if self.at("<"):
            self.skip_balanced("<", ">")

    def skip_annotation(self) -> None:
        # current token is "@"; "@interface" is handled by the caller.
        self.i += 1
        self.dotted_name()
        if self.at("("):
            self.skip_balanced("(", ")")

    # -- top level -----------------------------------------------------------

    def parse_unit(self) -> None:
        while self.i < len(self.tokens):
            tok = self.tokens[self.i]
            if tok.text == "package":
                self.i += 1
                self.package = self.dotted_name()
                self.skip_to_semicolon()
            elif tok.text == "import":
                self.skip_to_semicolon()
            elif tok.text == "@":
                nxt = self.peek(1)
                if nxt is not None and nxt.text == "interface":
                    self.skip_out_of_subset("annotation type", tok.line)
                else:
                    self.skip_annotation()
            elif tok.text in MODIFIER_WORDS:
                self.i += 1
            elif tok.text in ("class", "interface"):
                self.parse_type(enclosing=None)
            elif tok.text in ("enum", "record"):
                self.skip_out_of_subset(tok.text, tok.line)
            else:
                self.i += 1

    def skip_out_of_subset(self, what: str, line: int) -> None:
        self.diag("warn", f"skipped {what} declaration (outside the supported subset)", line)
        while self.i < len(self.tokens) and not self.at("{"):
            if self.at(";"):  # e.g. a body-less stray declaration
                self.i += 1
                return
            self.i += 1
        if self.at("{"):
            self.skip_balanced("{", "}")

    # -- type declarations ----------------------------------------------------

    def parse_type(self, enclosing: str | None) -> None:
        kind = self.tokens[self.i].text
        line = self.tokens[self.i].line
        self.i += 1
        name_tok = self.peek()
        if name_tok is None or name_tok.kind != "ident":
            self.diag("warn", f"malformed {kind} declaration", line)
            return
        simple_name = name_tok.text
        self.i += 1
        if enclosing is not None:
            qualified = f"{enclosing}.{simple_name}"
        elif self.package:
            qualified = f"{self.package}.{simple_name}"
        else:
            qualified = simple_name
        self.try_skip_generics()

        superclass: str | None = None
        while (tok := self.peek()) is not None and tok.text in ("extends", "implements", "permits"):
            clause = tok.text
            self.i += 1
            while True:
                target = self.dotted_name()
                if target is None:
                    break
                self.try_skip_generics()
                if clause == "extends" and kind == "class" and superclass is None:
                    superclass = target
                if self.at(","):
                    self.i += 1
                    continue
                break
        if not self.at("{"):
            self.diag("warn", f"{qualified}: type body not found", line)
            return
        self.i += 1  # consume "{"
        raw = _RawType(qualified, kind, superclass, [], [], line)
        self.types.append(raw)
        self.parse_body(raw, simple_name)

    def parse_body(self, raw: _RawType, simple_name: str) -> None:
        modifiers: set[str] = set()
        while self.i < len(self.tokens):
            tok = self.tokens[self.i]
            if tok.text == "}":
                self.i += 1
                return
            if tok.text == "@":
                nxt = self.peek(1)
                if nxt is not None and nxt.text == "interface":
                    self.skip_out_of_subset("annotation type", tok.line)
                    modifiers.clear()
                else:
                    self.skip_annotation()
            elif tok.text in MODIFIER_WORDS:
                modifiers.add(tok.text)
                self.i += 1
            elif tok.text in ("class", "interface"):
                self.parse_type(enclosing=raw.qualified_name)
                modifiers.clear()
            elif tok.text in ("enum", "record"):
                self.skip_out_of_subset(tok.text, tok.line)
                modifiers.clear()
            elif tok.text == "{":
                # static or instance initializer block: ignored by design
                self.skip_balanced("{", "}")
                modifiers.clear()
            elif tok.text == ";":
                self.i += 1
                modifiers.clear()
            elif tok.text == "<":
                self.try_skip_generics()
            else:
                self.parse_member(raw, simple_name, modifiers)
                modifiers.clear()

    # -- members ---------------------------------------------------------------

    def parse_member(self, raw: _RawType, simple_name: str, modifiers: set[str]) -> None:
        start = self.i
        line = self.tokens[start].line
        decision = self._find_decision(start)
        if decision is None:
            self.diag("warn", f"{raw.qualified_name}: malformed member skipped", line)
            self.skip_to_semicolon()
            return
        index, what = decision
        if what == "(":
            self.parse_method(raw, simple_name, modifiers, start, index, line)
        else:
            self.parse_field(raw, modifiers, line)

    def _find_decision(self, start: int) -> tuple[int, str] | None:
        """First of "(", "=", ";" outside any <...> group, scanning a member header."""
        angle = 0
        j = start
        while j < len(self.tokens):
            text = self.tokens[j].text
            if text == "<":
                angle += 1
            elif text == ">":
                angle = max(angle - 1, 0)
            elif angle == 0 and text in ("(", "=", ";"):
                return j, text
            elif text in ("{", "}"):
                return None
            j += 1
        return None

    def parse_method(
        self,
        raw: _RawType,
        simple_name: str,
        modifiers: set[str],
        start: int,
        paren: int,
        line: int,
    ) -> None:
        name_tok = self.tokens[paren - 1]
        if name_tok.kind != "ident":
            self.diag("warn", f"{raw.qualified_name}: malformed method header skipped", line)
            self.i = paren
            self.skip_balanced("(", ")")
            if self.at("{"):
                self.skip_balanced("{", "}")
            else:
                self.skip_to_semicolon()
            return
        name = name_tok.text
        is_constructor = name == simple_name and paren - 1 == start
        self.i = paren
        arity, params = self._parse_params()
        # throws clause and any other header leftovers
        while self.i < len(self.tokens) and not self.at("{") and not self.at(";"):
            self.i += 1
        body: tuple[int, int] | None = None
        if self.at("{"):
            open_index = self.i
            self.skip_balanced("{", "}")
            body = (open_index + 1, self.i - 1)
        elif self.at(";"):
            self.i += 1
        method = _RawMethod(
            name=name,
            arity=arity,
            is_static="static" in modifiers,
            is_constructor=is_constructor,
            params=params,
            body=body,
            line=line,
        )
        if any(
            m.name == name and m.arity == arity and m.is_constructor == is_constructor
            for m in raw.methods
        ):
            # Overloads differing only in parameter types collapse onto one
            # model method; their reference sets are unioned during assembly.
            self.diag(
                "info",
                f"{raw.qualified_name}.{name}/{arity}: overload with equal arity merged",
                line,
            )
        raw.methods.append(method)

    def _parse_params(self) -> tuple[int, list[str]]:
        """Parse a parameter list starting at "("; returns (arity, names)."""
        assert self.at("(")
        self.i += 1
        depth = 1
        angle = 0
        segments: list[list[Token]] = [[]]
        while self.i < len(self.tokens) and depth > 0:
            tok = self.tokens[self.i]
            text = tok.text
            if text in "([{":
                depth += 1
            elif text in ")]}":
                depth -= 1
                if depth == 0:
                    self.i += 1
                    break
            elif text == "<":
                angle += 1
            elif text == ">":
                angle = max(angle - 1, 0)
            elif text == "," and depth == 1 and angle == 0:
                segments.append([])
                self.i += 1
                continue
            segments[-1].append(tok)
            self.i += 1
        if segments == [[]]:
            return 0, []
        names = []
        for segment in segments:
            idents = [t.text for t in segment if t.kind == "ident" and t.text not in KEYWORDS]
            if idents:
                names.append(idents[-1])
        return len(segments), names

    def parse_field(self, raw: _RawType, modifiers: set[str], line: int) -> None:
        # type: dotted name or primitive, optional generics, optional []
        type_name = self.dotted_name()
        if type_name is None:
            tok = self.peek()
            if tok is not None and tok.text in PRIMITIVE_TYPES:
                self.i += 1
            else:
                self.diag("warn", f"{raw.qualified_name}: malformed field skipped", line)
                self.skip_to_semicolon()
                return
        self.try_skip_generics()
        while self.at("[") and (nxt := self.peek(1)) is not None and nxt.text == "]":
            self.i += 2

        if raw.kind == "interface":
            visibility = "public"
            is_static = True
        else:
            if "private" in modifiers:
                visibility = "private"
            elif "protected" in modifiers:
                visibility = "protected"
            elif "public" in modifiers:
                visibility = "public"
            else:
                visibility = "package"
            is_static = "static" in modifiers

        while True:
            name_tok = self.peek()
            if name_tok is None or name_tok.kind != "ident":
                self.diag("warn", f"{raw.qualified_name}: malformed field declarator skipped", line)
                self.skip_to_semicolon()
                return
            self.i += 1
            while self.at("[") and (nxt := self.peek(1)) is not None and nxt.text == "]":
                self.i += 2
            raw.attributes.append(
                AttributeModel(name=name_tok.text, is_static=is_static, visibility=visibility)
            )
            terminator = self._skip_field_initializer()
            if terminator == ",":
                continue
            return

    def _skip_field_initializer(self) -> str:
        """Advance past an optional initializer to the declarator terminator."""
        depth = 0
        while self.i < len(self.tokens):
            text = self.tokens[self.i].text
            if text in "([{":
                depth += 1
            elif text in ")]}":
                depth -= 1
            elif depth == 0 and text == ",":
                self.i += 1
                return ","
            elif depth == 0 and text == ";":
                self.i += 1
                return ";"
            self.i += 1
        return ";"


# ---------------------------------------------------------------------------
# Body scanning


def _collect_locals(
    tokens: list[Token], start: int, end: int, params: list[str]
) -> tuple[set[str], set[int]]:
    """Names bound by parameters or local declarations (flow-insensitive),
    plus the token indices of declaration type/name positions, which the read
    scan must not treat as field reads."""
    locals_found = set(params)
    covered: set[int] = set()
    j = start
    while j < end:
        tok = tokens[j]
        if tok.kind != "ident":
            j += 1
            continue
        # untyped lambda parameter: x ->
        if j + 1 < end and tokens[j + 1].text == "->" and tok.text not in KEYWORDS:
            locals_found.add(tok.text)
            j += 1
            continue
        consumed = _try_local_declaration(tokens, j, end, locals_found, covered)
        if consumed is not None:
            j = consumed
        else:
            j += 1
    # second pass for untyped lambda parameter lists: (a, b) ->
    j = start
    while j < end:
        if tokens[j].text == "(":
            names, close = _lambda_param_list(tokens, j, end)
            if names is not None:
                locals_found.update(names)
                j = close
                continue
        j += 1
    return locals_found, covered


def _lambda_param_list(tokens: list[Token], open_index: int, end: int) -> tuple[list[str] | None, int]:
    names = []
    j = open_index + 1
    expect_ident = True
    while j < end:
        tok = tokens[j]
        if expect_ident:
            if tok.text == ")" and not names:
                j += 1
                break
            if tok.kind != "ident" or tok.text in KEYWORDS:
                return None, open_index
            names.append(tok.text)
            expect_ident = False
        else:
            if tok.text == ",":
                expect_ident = True
            elif tok.text == ")":
                j += 1
                break
            else:
                return None, open_index
        j += 1
    else:
        return None, open_index
    if j < end and tokens[j].text == "->":
        return names, j
    return None, open_index


_TYPE_ANGLE_ALLOWED = {"<", ">", ",", ".", "?", "[", "]", "&", "extends", "super"}


def _try_local_declaration(
    tokens: list[Token], j: int, end: int, locals_found: set[str], covered: set[int]
) -> int | None:
    """Try ``Type name [= expr] [, name2 ...]`` at position j; returns the index
    just past the first declared name on success."""
    first = tokens[j]
    if first.text in KEYWORDS and first.text not in PRIMITIVE_TYPES:
        return None
    if j > 0 and tokens[j - 1].text in (".", "::", "@"):
        return None
    k = j
    # dotted type name
    if first.text in PRIMITIVE_TYPES:
        k += 1
    else:
        k += 1
        while k + 1 < end and tokens[k].text == "." and tokens[k + 1].kind == "ident":
            k += 2
    # generic arguments (content-guarded)
    if k < end and tokens[k].text == "<":
        depth = 0
        g = k
        while g < end:
            text = tokens[g].text
            if tokens[g].kind == "ident" and text not in ("extends", "super"):
                pass
            elif text not in _TYPE_ANGLE_ALLOWED:
                return None
            if text == "<":
                depth += 1
            elif text == ">":
                depth -= 1
                if depth == 0:
                    g += 1
                    break
            g += 1
        else:
            return None
        k = g
    # array brackets on the type
    while k + 1 < end and tokens[k].text == "[" and tokens[k + 1].text == "]":
        k += 2
    if k >= end:
        return None
    name_tok = tokens[k]
    if name_tok.kind != "ident" or name_tok.text in KEYWORDS:
        return None
    k += 1
    while k + 1 < end and tokens[k].text == "[" and tokens[k + 1].text == "]":
        k += 2
    if k >= end or tokens[k].text not in ("=", ";", ":", ",", ")"):
        return None
    locals_found.add(name_tok.text)
    covered.update(range(j, k))  # type tokens and the declared name
    result = k
    # walk the remaining declarators of this statement
    while k < end and tokens[k].text in ("=", ","):
        if tokens[k].text == "=":
            k = _skip_expression(tokens, k + 1, end)
            continue
        k += 1  # past ","
        if k < end and tokens[k].kind == "ident" and tokens[k].text not in KEYWORDS:
            follower = tokens[k + 1].text if k + 1 < end else ";"
            if follower in ("=", ",", ";"):
                locals_found.add(tokens[k].text)
                covered.add(k)
                k += 1
            else:
                break
        else:
            break
    return result


def _skip_expression(tokens: list[Token], j: int, end: int) -> int:
    depth = 0
    while j < end:
        text = tokens[j].text
        if text in "([{":
            depth += 1
        elif text in ")]}":
            if depth == 0:
                return j
            depth -= 1
        elif depth == 0 and text in (",", ";"):
            return j
        j += 1
    return j


def _scan_body(
    tokens: list[Token], start: int, end: int, params: list[str]
) -> tuple[set[str], set[tuple[str, int]]]:
    """Collect candidate attribute reads and (name, argc) call sites."""
    local_names, covered = _collect_locals(tokens, start, end, params)
    reads: set[str] = set()
    calls: set[tuple[str, int]] = set()
    j = start
    while j < end:
        tok = tokens[j]
        if tok.kind != "ident" or tok.text in KEYWORDS or j in covered:
            j += 1
            continue
        prev = tokens[j - 1].text if j - 1 >= start else ""
        prev2 = tokens[j - 2].text if j - 2 >= start else ""
        nxt = tokens[j + 1].text if j + 1 < end else ""

        if prev == ".":
            if prev2 == "this":
                if nxt == "(":
                    calls.add((tok.text, _count_args(tokens, j + 1, end)))
                else:
                    reads.add(tok.text)
            j += 1
            continue
        if prev in ("::", "@") or nxt in (".", "::"):
            j += 1
            continue
        if nxt == "(":
            if prev != "new":
                calls.add((tok.text, _count_args(tokens, j + 1, end)))
            j += 1
            continue
        if prev in ("case", "instanceof", "new"):
            j += 1
            continue
        if prev == "(" and nxt == ")" and _looks_like_cast(tokens, j + 2, end):
            j += 1
            continue
        if tok.text in local_names:
            j += 1
            continue
        reads.add(tok.text)
        j += 1
    return reads, calls


def _looks_like_cast(tokens: list[Token], after_close: int, end: int) -> bool:
    if after_close >= end:
        return False
    tok = tokens[after_close]
    if tok.kind in ("number", "string", "char"):
        return True
    if tok.text == "(":
        return True
    if tok.kind == "ident":
        return tok.text not in KEYWORDS or tok.text in ("this", "new", "true", "false", "null")
    return False


def _count_args(tokens: list[Token], open_paren: int, end: int) -> int:
    if open_paren + 1 < end and tokens[open_paren + 1].text == ")":
        return 0
    depth = 0
    commas = 0
    j = open_paren
    while j < end:
        text = tokens[j].text
        if text in "([{":
            depth += 1
        elif text in ")]}":
            depth -= 1
            if depth == 0:
                break
        elif depth == 1:
            if text == ",":
                commas += 1
            elif text == "new" and j + 1 < end and tokens[j + 1].kind == "ident":
                # skip "new Type<...>" so generic-argument commas don't count
                g = j + 1
                while g + 2 < end and tokens[g + 1].text == "." and tokens[g + 2].kind == "ident":
                    g += 2
                if g + 1 < end and tokens[g + 1].text == "<":
                    angle = 0
                    h = g + 1
                    while h < end:
                        if tokens[h].text == "<":
                            angle += 1
                        elif tokens[h].text == ">":
                            angle -= 1
                            if angle == 0:
                                break
                        h += 1
                    j = h
        j += 1
    return commas + 1


# ---------------------------------------------------------------------------
# Public operations


def extract_types(source: str, path: str = "<memory>") -> tuple[list[TypeModel], list[Diagnostic]]:
    """Extract one TypeModel per class/interface declaration in ``source``.

    References are left unresolved (bare) where the file alone cannot decide;
    registry construction finishes the job.  Raises :class:`ExtractionError`
    only when the file cannot be tokenized at all.
    """
    tokens = tokenize(source, path)
    parser = _Parser(tokens, path)
    parser.parse_unit()
    models = [_assemble(raw, tokens, path) for raw in parser.types]
    return models, parser.diagnostics


def _assemble(raw: _RawType, tokens: list[Token], path: str) -> TypeModel:
    declared_attrs = {a.name for a in raw.attributes}
    declared_methods = {
        (m.name, m.arity) for m in raw.methods if not m.is_constructor
    }
    merged: dict[tuple[str, int, bool], dict] = {}
    order: list[tuple[str, int, bool]] = []
    for m in raw.methods:
        key = (m.name, m.arity, m.is_constructor)
        if key not in merged:
            merged[key] = {"model": m, "reads": set(), "calls": set()}
            order.append(key)
        if m.body is not None:
            reads, calls = _scan_body(tokens, m.body[0], m.body[1], m.params)
            merged[key]["reads"].update(reads)
            merged[key]["calls"].update(calls)

    methods = []
    for key in order:
        entry = merged[key]
        m = entry["model"]
        accesses = frozenset(AttributeRef(name) for name in entry["reads"])
        invokes = frozenset(
            MethodRef(name, argc)
            for (name, argc) in entry["calls"]
            if (name, argc) in declared_methods and (name, argc) != (m.name, m.arity)
        )
        methods.append(
            MethodModel(
                name=m.name,
                arity=m.arity,
                is_static=m.is_static,
                is_constructor=m.is_constructor,
                accesses=accesses,
                invokes=invokes,
            )
        )
    return TypeModel(
        qualified_name=raw.qualified_name,
        kind=raw.kind,
        superclass=raw.superclass,
        attributes=tuple(raw.attributes),
        methods=tuple(methods),
        source_location=SourceLocation(path=path, line=raw.line),
    )


def extract_directory(root: str | Path, *, workers: int = 1) -> TypeRegistry:
    """Extract every ``*.java`` file under ``root`` into one resolved registry.

    Per-file failures (unreadable, unparseable) degrade to diagnostics; the
    result is deterministic and independent of file discovery order.
    """
    root = Path(root)
    if not root.exists():
        raise FileNotFoundError(f"no such directory: {root}")
    files = sorted(p for p in root.rglob(f"*{JAVA_EXTENSION}") if p.is_file())
    diagnostics: list[Diagnostic] = []
    models: list[TypeModel] = []

    def one(path: Path) -> tuple[list[TypeModel], list[Diagnostic]]:
        rel = path.relative_to(root).as_posix()
        try:
            source = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            return [], [Diagnostic("warn", f"unreadable file skipped: {exc}", path=rel, line=0)]
        try:
            return extract_types(source, rel)
        except ExtractionError as exc:
            return [], [Diagnostic("warn", f"extraction failed: {exc}", path=rel, line=exc.line)]

    if workers > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, files))
    else:
        results = [one(path) for path in files]
    for extracted, diags in results:
        models.extend(extracted)
        diagnostics.extend(diags)
    models.sort(key=lambda t: t.qualified_name)
    models = resolve_superclass_names(models)
    return TypeRegistry.from_types(models, lenient=True, diagnostics=diagnostics)


def resolve_superclass_names(models: list[TypeModel]) -> list[TypeModel]:
    """Rewrite ``extends`` targets to known qualified names where unambiguous.

    Source files name superclasses as written (usually a simple name); this
    maps each to a model in the same batch by exact match, then same-package
    qualification, then a unique simple-name match.  Unmatched names stay as
    written and resolve as external.
    """
    by_name = {t.qualified_name: t for t in models}
    by_simple: dict[str, list[str]] = {}
    for t in models:
        by_simple.setdefault(t.simple_name, []).append(t.qualified_name)

    out = []
    for t in models:
        target = t.superclass
        if target is None or target in by_name:
            out.append(t)
            continue
        package, _, _ = t.qualified_name.rpartition(".")
        qualified = f"{package}.{target}" if package else target
        if qualified in by_name:
            out.append(_with_superclass(t, qualified))
            continue
        simple = target.rsplit(".", 1)[-1]
        candidates = by_simple.get(simple, [])
        if len(candidates) == 1:
            out.append(replace(t, superclass=candidates[0]))
        else:
            out.append(t)
    return out
