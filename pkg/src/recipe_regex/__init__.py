"""Regular-expression construction with recipe-based error messages."""

from .automata import Nfa, accepts, is_empty_language, matches_derivative, to_nfa
from .core import (
    Concat,
    Empty,
    KleeneStar,
    Null,
    RegExp,
    Singleton,
    Sym,
    Union,
    Word,
    collect_singletons,
    render_regexp,
)
from .validation import (
    RecipeError,
    RecipeStep,
    TestReport,
    TestSpec,
    build_checked,
    concat_regexp,
    empty_regexp,
    kleenestar_regexp,
    null_regexp,
    render_value,
    run_spec_tests,
    singleton_regexp,
    union_regexp,
)
from .wordgen import EmptyLanguageError, GenConfig, gen_many, gen_regexp_word

__all__ = [
    "Concat",
    "Empty",
    "EmptyLanguageError",
    "GenConfig",
    "KleeneStar",
    "Nfa",
    "Null",
    "RecipeError",
    "RecipeStep",
    "RegExp",
    "Singleton",
    "Sym",
    "TestReport",
    "TestSpec",
    "Union",
    "Word",
    "accepts",
    "build_checked",
    "collect_singletons",
    "concat_regexp",
    "empty_regexp",
    "gen_many",
    "gen_regexp_word",
    "is_empty_language",
    "kleenestar_regexp",
    "matches_derivative",
    "null_regexp",
    "render_regexp",
    "render_value",
    "run_spec_tests",
    "singleton_regexp",
    "to_nfa",
    "union_regexp",
]
