"""Definition-file language: parsing, predicates and evaluation."""

from .evaluator import DefinitionReport, EvalError, Predicate, Session, eval_file, eval_pred, regexps_of
from .reader import ParseError
from .syntax import Definition, parse_file, render_definition, render_file
from ..span import SourceSpan

__all__ = [
    "Definition",
    "DefinitionReport",
    "EvalError",
    "ParseError",
    "Predicate",
    "Session",
    "SourceSpan",
    "eval_file",
    "eval_pred",
    "parse_file",
    "regexps_of",
    "render_definition",
    "render_file",
]
