"""Definition-file AST, parser, predicate type checker and source renderer.

Grammar (``[`` and ``(`` are interchangeable)::

    file    := define*
    define  := (define NAME expr) | (define (NAME VAR) pexpr)
    expr    := (null-regexp) | (empty-regexp) | (singleton-regexp arg)
             | (union-regexp arg arg kw*) | (concat-regexp arg arg kw*)
             | (kleenestar-regexp arg kw*)
             | (let* ([NAME expr] ...) expr) | (let ([NAME expr] ...) expr)
             | (lambda (VAR) pexpr) | NAME | literal
    kw      := #:sigma arg | #:pred arg | #:gen-cases arg | #:in-lang arg | #:not-in-lang arg

Constructor arguments may be arbitrary literals ("a", 'b, 3, '(a b)) so that
misuse reaches validation and is reported as a recipe-based error rather than
a parse error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from ..core import Sym, Word
from ..span import SourceSpan
from .reader import Atom, ParseError, Quote, SList, read_all

CONSTRUCTORS = {
    "null-regexp": "null",
    "empty-regexp": "empty",
    "singleton-regexp": "singleton",
    "union-regexp": "union",
    "concat-regexp": "concat",
    "kleenestar-regexp": "kleenestar",
}
_ARITY_WORDS = {0: "no sub-expressions", 1: "one sub-expression", 2: "two sub-expressions"}
_ARITY = {"null": 0, "empty": 0, "singleton": 1, "union": 2, "concat": 2, "kleenestar": 1}

KEYWORDS = ("sigma", "pred", "gen-cases", "in-lang", "not-in-lang")
EMPTY_WORD_SPELLINGS = ("ε", "EMP")


# -- AST ----------------------------------------------------------------------


@dataclass
class Ref:
    name: str
    span: SourceSpan = field(compare=False)


@dataclass
class Literal:
    """A literal value.  ``quoted`` literals were written with a leading ``'``."""

    value: Any
    quoted: bool
    span: SourceSpan = field(compare=False)


@dataclass
class KeywordArg:
    name: str
    value: Any
    span: SourceSpan = field(compare=False)


@dataclass
class Call:
    kind: str
    args: list
    kws: list[KeywordArg]
    span: SourceSpan = field(compare=False)


@dataclass
class Binding:
    name: str
    value: Any
    span: SourceSpan = field(compare=False)


@dataclass
class Let:
    star: bool
    bindings: list[Binding]
    body: Any
    span: SourceSpan = field(compare=False)


@dataclass
class PVar:
    name: str
    span: SourceSpan = field(compare=False)


@dataclass
class PConst:
    value: Any
    type: str
    span: SourceSpan = field(compare=False)


@dataclass
class PName:
    """A regexp name, only legal as the first argument of ``in-lang-of``."""

    name: str
    span: SourceSpan = field(compare=False)


@dataclass
class PApp:
    op: str
    args: list
    span: SourceSpan = field(compare=False)


PredExpr = Union[PVar, PConst, PName, PApp]


@dataclass
class Lambda:
    param: str
    body: PredExpr
    span: SourceSpan = field(compare=False)


Expr = Union[Ref, Literal, Call, Let, Lambda]


@dataclass
class Definition:
    name: str
    body: Expr
    span: SourceSpan = field(compare=False)


# -- predicate operators --------------------------------------------------------

# op -> (argument types, result type); a trailing "..." repeats the last type.
PRED_OPS: dict[str, tuple[tuple[str, ...], str]] = {
    "and": (("bool", "..."), "bool"),
    "or": (("bool", "..."), "bool"),
    "not": (("bool",), "bool"),
    "eq?": (("any", "any"), "bool"),
    "equal?": (("any", "any"), "bool"),
    "=": (("int", "int"), "bool"),
    "<": (("int", "int"), "bool"),
    "<=": (("int", "int"), "bool"),
    ">": (("int", "int"), "bool"),
    ">=": (("int", "int"), "bool"),
    "odd?": (("int",), "bool"),
    "even?": (("int",), "bool"),
    "zero?": (("int",), "bool"),
    "+": (("int", "int"), "int"),
    "-": (("int", "int"), "int"),
    "remainder": (("int", "int"), "int"),
    "empty?": (("word",), "bool"),
    "length": (("word",), "int"),
    "count": (("sym", "word"), "int"),
    "first": (("word",), "sym"),
    "last": (("word",), "sym"),
    "rest": (("word",), "word"),
    "in-lang-of": (("name", "word"), "bool"),
}

_TYPE_NAMES = {
    "bool": "a Boolean",
    "int": "an integer",
    "sym": "a symbol",
    "word": "a word",
    "text": "a text",
    "name": "a regexp name",
}


# -- parser -------------------------------------------------------------------


def _head(node: Any) -> Optional[str]:
    if isinstance(node, SList) and node.items and isinstance(node.items[0], Atom):
        if node.items[0].kind == "symbol":
            return node.items[0].value
    return None


def _is_name(node: Any) -> bool:
    return isinstance(node, Atom) and node.kind == "symbol"


def quoted_value(node: Any) -> Any:
    """Convert the datum under a quote into a Python value."""
    if isinstance(node, Atom):
        if node.kind == "symbol":
            return Sym(node.value)
        if node.kind == "keyword":
            raise ParseError("keywords cannot be quoted", node.span)
        return node.value
    if isinstance(node, SList):
        return tuple(quoted_value(x) for x in node.items)
    if isinstance(node, Quote):
        raise ParseError("nested quotes are not supported", node.span)
    raise ParseError("unreadable datum", getattr(node, "span", None))


class _Parser:
    def __init__(self) -> None:
        self.toplevel: set[str] = set()

    def definition(self, node: Any, scope: frozenset) -> Definition:
        if _head(node) != "define":
            raise ParseError("expected a (define NAME expression) form", getattr(node, "span", None))
        items = node.items
        if len(items) != 3:
            raise ParseError("define expects a name and one expression", node.span)
        target = items[1]
        if isinstance(target, SList):
            # (define (NAME VAR) pexpr)
            if len(target.items) != 2 or not all(_is_name(x) for x in target.items):
                raise ParseError("a predicate definition must look like (define (NAME w) body)", target.span)
            name = target.items[0].value
            self._fresh_name(name, target.items[0].span)
            param = target.items[1].value
            body = self.lambda_body(items[2], param, scope)
            return Definition(name, Lambda(param, body, node.span), node.span)
        if not _is_name(target):
            raise ParseError("define expects a name", target.span)
        self._fresh_name(target.value, target.span)
        body = self.expr(items[2], scope)
        return Definition(target.value, body, node.span)

    def _fresh_name(self, name: str, span: SourceSpan) -> None:
        if name in self.toplevel:
            raise ParseError(f"{name} is defined more than once", span)
        if name in CONSTRUCTORS or name in EMPTY_WORD_SPELLINGS:
            raise ParseError(f"{name} cannot be used as a definition name", span)

    def expr(self, node: Any, scope: frozenset) -> Expr:
        if isinstance(node, Atom):
            if node.kind == "symbol":
                if node.value in EMPTY_WORD_SPELLINGS:
                    return Literal(Word(), False, node.span)
                if node.value not in scope:
                    raise ParseError(f"unknown name: {node.value}", node.span)
                return Ref(node.value, node.span)
            if node.kind == "keyword":
                raise ParseError(f"unexpected keyword #:{node.value}", node.span)
            return Literal(node.value, False, node.span)
        if isinstance(node, Quote):
            return Literal(quoted_value(node.datum), True, node.span)
        head = _head(node)
        if head in CONSTRUCTORS:
            return self.call(node, CONSTRUCTORS[head], scope)
        if head in ("let", "let*"):
            return self.let(node, head == "let*", scope)
        if head == "lambda":
            return self.lambda_(node, scope)
        if isinstance(node, SList) and not node.items:
            raise ParseError("empty form ()", node.span)
        what = head if head is not None else "expression"
        raise ParseError(f"unknown form: {what}", node.span)

    def call(self, node: SList, kind: str, scope: frozenset) -> Call:
        name = node.items[0].value
        rest = node.items[1:]
        positional = []
        i = 0
        while i < len(rest) and not (isinstance(rest[i], Atom) and rest[i].kind == "keyword"):
            positional.append(rest[i])
            i += 1
        if len(positional) != _ARITY[kind]:
            raise ParseError(f"{name} expects {_ARITY_WORDS[_ARITY[kind]]}", node.span)
        kws: list[KeywordArg] = []
        seen: set[str] = set()
        while i < len(rest):
            kw = rest[i]
            if not (isinstance(kw, Atom) and kw.kind == "keyword"):
                raise ParseError("expected a keyword such as #:sigma", kw.span)
            if kw.value not in KEYWORDS:
                raise ParseError(f"unknown keyword #:{kw.value}", kw.span)
            if kind not in ("union", "concat", "kleenestar"):
                raise ParseError(f"{name} does not take test parameters", kw.span)
            if kw.value in seen:
                raise ParseError(f"keyword #:{kw.value} given more than once", kw.span)
            if i + 1 >= len(rest) or (isinstance(rest[i + 1], Atom) and rest[i + 1].kind == "keyword"):
                raise ParseError(f"keyword #:{kw.value} is missing its value", kw.span)
            seen.add(kw.value)
            value = self.expr(rest[i + 1], scope)
            kws.append(KeywordArg(kw.value, value, _join(kw.span, rest[i + 1].span)))
            i += 2
        args = [self.expr(a, scope) for a in positional]
        return Call(kind, args, kws, node.span)

    def let(self, node: SList, star: bool, scope: frozenset) -> Let:
        if len(node.items) != 3 or not isinstance(node.items[1], SList):
            raise ParseError("let expects a binding list and one body expression", node.span)
        bindings = []
        inner = scope
        for b in node.items[1].items:
            if not (isinstance(b, SList) and len(b.items) == 2 and _is_name(b.items[0])):
                raise ParseError("a binding must look like [NAME expression]", getattr(b, "span", node.span))
            name = b.items[0].value
            if name in CONSTRUCTORS or name in EMPTY_WORD_SPELLINGS:
                raise ParseError(f"{name} cannot be bound", b.items[0].span)
            bindings.append(Binding(name, self.expr(b.items[1], inner), b.span))
            inner = inner | {name}
        body = self.expr(node.items[2], inner)
        return Let(star, bindings, body, node.span)

    def lambda_(self, node: SList, scope: frozenset) -> Lambda:
        items = node.items
        if (
            len(items) != 3
            or not isinstance(items[1], SList)
            or len(items[1].items) != 1
            or not _is_name(items[1].items[0])
        ):
            raise ParseError("a predicate must look like (lambda (w) body)", node.span)
        param = items[1].items[0].value
        return Lambda(param, self.lambda_body(items[2], param, scope), node.span)

    def lambda_body(self, node: Any, param: str, scope: frozenset) -> PredExpr:
        body, ty = self.pexpr(node, param, scope)
        if ty != "bool":
            raise ParseError(f"a predicate body must be a Boolean expression, but this is {_TYPE_NAMES[ty]}", node.span)
        return body

    def pexpr(self, node: Any, param: str, scope: frozenset) -> tuple[PredExpr, str]:
        if isinstance(node, Atom):
            if node.kind == "symbol":
                if node.value == param:
                    return PVar(node.value, node.span), "word"
                if node.value in EMPTY_WORD_SPELLINGS:
                    return PConst(Word(), "word", node.span), "word"
                raise ParseError(f"unknown identifier in predicate: {node.value}", node.span)
            if node.kind == "int":
                return PConst(node.value, "int", node.span), "int"
            if node.kind == "bool":
                return PConst(node.value, "bool", node.span), "bool"
            if node.kind == "string":
                return PConst(node.value, "text", node.span), "text"
            raise ParseError(f"unexpected keyword #:{node.value}", node.span)
        if isinstance(node, Quote):
            value = quoted_value(node.datum)
            if isinstance(value, Sym):
                return PConst(value, "sym", node.span), "sym"
            if isinstance(value, tuple) and all(isinstance(x, Sym) for x in value):
                return PConst(Word(value), "word", node.span), "word"
            raise ParseError("a quoted predicate literal must be a symbol or a word", node.span)
        head = _head(node)
        if head not in PRED_OPS:
            what = head if head is not None else "expression"
            raise ParseError(f"unknown predicate operator: {what}", node.span)
        arg_types, result = PRED_OPS[head]
        args_nodes = node.items[1:]
        if arg_types and arg_types[-1] == "...":
            if not args_nodes:
                raise ParseError(f"{head} expects at least one argument", node.span)
            expected = [arg_types[0]] * len(args_nodes)
        else:
            expected = list(arg_types)
            if len(args_nodes) != len(expected):
                raise ParseError(f"{head} expects {len(expected)} argument(s), got {len(args_nodes)}", node.span)
        args = []
        for pos, (want, a) in enumerate(zip(expected, args_nodes), start=1):
            if want == "name":
                if not _is_name(a) or a.value == param:
                    raise ParseError(f"{head} expects a regexp name as argument {pos}", a.span)
                if a.value not in scope:
                    raise ParseError(f"unknown name: {a.value}", a.span)
                args.append(PName(a.value, a.span))
                continue
            sub, got = self.pexpr(a, param, scope)
            if want != "any" and got != want:
                raise ParseError(
                    f"{head} expects {_TYPE_NAMES[want]} as argument {pos}, but found {_TYPE_NAMES[got]}",
                    a.span,
                )
            args.append(sub)
        return PApp(head, args, node.span), result


def _join(a: SourceSpan, b: SourceSpan) -> SourceSpan:
    return SourceSpan(a.file, a.line, a.column, b.offset + b.length - a.offset, a.offset)


def parse_file(text: str, file: str = "<input>") -> list[Definition]:
    """Parse a definition file.  Raises :class:`ParseError` with a span."""
    parser = _Parser()
    defs = []
    for node in read_all(text, file):
        d = parser.definition(node, frozenset(parser.toplevel))
        parser.toplevel.add(d.name)
        defs.append(d)
    return defs


# -- rendering back to source ------------------------------------------------------


def _datum(v: Any) -> str:
    if isinstance(v, bool):
        return "#t" if v else "#f"
    if isinstance(v, Sym):
        return str(v)
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, tuple):
        return "(" + " ".join(_datum(x) for x in v) + ")"
    return str(v)


def render_expr(e: Any) -> str:
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, Literal):
        if e.quoted:
            return "'" + _datum(e.value)
        if isinstance(e.value, Word):
            return "ε"
        return _datum(e.value)
    if isinstance(e, Call):
        name = next(k for k, v in CONSTRUCTORS.items() if v == e.kind)
        parts = [name] + [render_expr(a) for a in e.args]
        for kw in e.kws:
            parts += [f"#:{kw.name}", render_expr(kw.value)]
        return "(" + " ".join(parts) + ")"
    if isinstance(e, Let):
        binds = " ".join(f"[{b.name} {render_expr(b.value)}]" for b in e.bindings)
        return f"({'let*' if e.star else 'let'} ({binds}) {render_expr(e.body)})"
    if isinstance(e, Lambda):
        return f"(lambda ({e.param}) {render_pred(e.body)})"
    raise TypeError(f"not an expression: {e!r}")


def render_pred(p: Any) -> str:
    if isinstance(p, (PVar, PName)):
        return p.name
    if isinstance(p, PConst):
        if p.type == "sym":
            return "'" + p.value
        if p.type == "word":
            return "'" + _datum(tuple(p.value))
        return _datum(p.value)
    if isinstance(p, PApp):
        return "(" + " ".join([p.op] + [render_pred(a) for a in p.args]) + ")"
    raise TypeError(f"not a predicate expression: {p!r}")


def render_definition(d: Definition) -> str:
    return f"(define {d.name} {render_expr(d.body)})"


def render_file(defs: list[Definition]) -> str:
    return "\n".join(render_definition(d) for d in defs) + ("\n" if defs else "")
