"""Evaluation of parsed definition files and of the predicate mini-language."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from ..automata import Nfa, accepts, to_nfa
from ..core import RegExp, Sym, Word, is_regexp
from ..span import SourceSpan
from ..validation import DEFAULT_GEN_CASES, RecipeError, TestReport, TestSpec, build_and_test
from ..wordgen import GenConfig
from .syntax import Call, Definition, Lambda, Let, Literal, PApp, PConst, PName, PVar, Ref


class EvalError(Exception):
    def __init__(self, message: str, span: Optional[SourceSpan] = None):
        super().__init__(message)
        self.message = message
        self.span = span


def _same(a: Any, b: Any) -> bool:
    # bool is an int subclass; keep #t distinct from 1.
    if isinstance(a, bool) or isinstance(b, bool):
        return type(a) is type(b) and a == b
    if isinstance(a, str) and isinstance(b, str):
        return isinstance(a, Sym) == isinstance(b, Sym) and a == b
    if isinstance(a, tuple) and isinstance(b, tuple):
        return tuple(a) == tuple(b)
    return type(a) is type(b) and a == b


def _nonempty(op: str, w: Word, span: SourceSpan) -> Word:
    if not w:
        raise EvalError(f"{op} cannot be applied to the empty word", span)
    return w


def eval_pred(p: Any, w: Word, env: Mapping[str, Any], _nfas: Optional[dict] = None) -> Any:
    """Evaluate a type-checked predicate expression on word *w*."""
    nfas = _nfas if _nfas is not None else {}

    def ev(e: Any) -> Any:
        if isinstance(e, PVar):
            return w
        if isinstance(e, PConst):
            return e.value
        if not isinstance(e, PApp):
            raise EvalError("malformed predicate expression", getattr(e, "span", None))
        op = e.op
        if op == "and":
            return all(ev(a) for a in e.args)
        if op == "or":
            return any(ev(a) for a in e.args)
        if op == "in-lang-of":
            name = e.args[0].name
            r = env.get(name)
            if not is_regexp(r):
                raise EvalError(f"{name} is not a regular expression", e.args[0].span)
            if name not in nfas:
                nfas[name] = to_nfa(r)
            return accepts(nfas[name], ev(e.args[1]))
        args = [ev(a) for a in e.args]
        if op == "not":
            return not args[0]
        if op in ("eq?", "equal?"):
            return _same(args[0], args[1])
        if op == "=":
            return args[0] == args[1]
        if op == "<":
            return args[0] < args[1]
        if op == "<=":
            return args[0] <= args[1]
        if op == ">":
            return args[0] > args[1]
        if op == ">=":
            return args[0] >= args[1]
        if op == "odd?":
            return args[0] % 2 == 1
        if op == "even?":
            return args[0] % 2 == 0
        if op == "zero?":
            return args[0] == 0
        if op == "+":
            return args[0] + args[1]
        if op == "-":
            return args[0] - args[1]
        if op == "remainder":
            if args[1] == 0:
                raise EvalError("remainder by zero", e.span)
            return abs(args[0]) % abs(args[1]) * (1 if args[0] >= 0 else -1)
        if op == "empty?":
            return len(args[0]) == 0
        if op == "length":
            return len(args[0])
        if op == "count":
            return sum(1 for s in args[1] if s == args[0])
        if op == "first":
            return _nonempty(op, args[0], e.span)[0]
        if op == "last":
            return _nonempty(op, args[0], e.span)[-1]
        if op == "rest":
            return Word(_nonempty(op, args[0], e.span)[1:])
        raise EvalError(f"unknown predicate operator {op}", e.span)

    return ev(p)


class Predicate:
    """A closure of a predicate expression over the environment it was written in."""

    def __init__(self, lam: Lambda, env: Mapping[str, Any], name: Optional[str] = None):
        self.lam = lam
        self.env = dict(env)
        self.name = name
        self._nfas: dict[str, Nfa] = {}

    def __call__(self, w: Word) -> Any:
        return eval_pred(self.lam.body, Word(w), self.env, self._nfas)

    def __repr__(self) -> str:
        return f"Predicate({self.name or 'lambda'})"


@dataclass
class DefinitionReport:
    name: str
    span: SourceSpan
    kind: str
    report: TestReport = field(default_factory=TestReport)
    constructors: int = 0


@dataclass
class Session:
    env: dict[str, Any]
    reports: list[DefinitionReport]


class _Evaluator:
    def __init__(self, cfg: GenConfig, default_gen_cases: int, rng: random.Random):
        self.cfg = cfg
        self.default_gen_cases = default_gen_cases
        self.rng = rng

    def eval(self, e: Any, env: dict[str, Any], acc: DefinitionReport, name: Optional[str] = None) -> Any:
        if isinstance(e, Ref):
            if e.name not in env:
                raise EvalError(f"unknown name: {e.name}", e.span)
            return env[e.name]
        if isinstance(e, Literal):
            return e.value
        if isinstance(e, Lambda):
            return Predicate(e, env, name)
        if isinstance(e, Let):
            inner = dict(env)
            for b in e.bindings:
                inner[b.name] = self.eval(b.value, inner, acc, b.name)
            return self.eval(e.body, inner, acc)
        if isinstance(e, Call):
            args = [self.eval(a, env, acc) for a in e.args]
            spec = TestSpec()
            for kw in e.kws:
                setattr(spec, kw.name.replace("-", "_"), self.eval(kw.value, env, acc))
            try:
                r, report = build_and_test(e.kind, args, spec, self.cfg, self.rng, self.default_gen_cases)
            except RecipeError as err:
                raise err.with_span(e.span) from None
            acc.report += report
            acc.constructors += 1
            return r
        raise EvalError(f"cannot evaluate {e!r}")


def eval_file(
    defs: list[Definition],
    cfg: GenConfig = GenConfig(),
    default_gen_cases: int = DEFAULT_GEN_CASES,
    env: Optional[Mapping[str, Any]] = None,
) -> Session:
    """Evaluate definitions top to bottom.

    One random stream seeded from ``cfg.seed`` is shared by the whole file.
    The first recipe-based error stops evaluation and is raised with the span
    of the constructor call that failed.
    """
    ev = _Evaluator(cfg, default_gen_cases, cfg.rng())
    scope: dict[str, Any] = dict(env or {})
    reports = []
    for d in defs:
        acc = DefinitionReport(d.name, d.span, "predicate" if isinstance(d.body, Lambda) else "regexp")
        value = ev.eval(d.body, scope, acc, d.name)
        if acc.kind == "regexp" and not is_regexp(value):
            acc.kind = "value"
        scope[d.name] = value
        reports.append(acc)
    return Session(scope, reports)


def regexps_of(session: Session) -> dict[str, RegExp]:
    return {k: v for k, v in session.env.items() if is_regexp(v)}
