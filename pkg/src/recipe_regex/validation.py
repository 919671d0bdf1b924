"""Checked regexp constructors that report recipe-based errors.

Every failure names the design recipe step that was not completed and states
the offending value.  Checks run in a fixed order and the first failure is the
only one reported:

1. step five: the constructor's own arguments
2. step one: ``sigma`` (list, valid elements, no duplicates, covers singletons)
3. step six: ``gen_cases`` (positive integer, needs a predicate)
4. step three: ``pred`` on generated words (Boolean result, holds)
5. steps four/six: ``in_lang`` (list of words, inside the alphabet, accepted)
6. steps four/six: ``not_in_lang`` (same, rejected)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional, Sequence

from . import core
from .automata import accepts, is_empty_language, to_nfa
from .core import RegExp, Sym, Word, collect_singletons, is_regexp, is_symbol, render_regexp
from .span import SourceSpan
from .wordgen import GenConfig, gen_many

DEFAULT_GEN_CASES = 5

#: Spellings accepted for the empty word inside literal word lists.
EMPTY_WORD_NAMES = frozenset({"ε", "EMP"})


class RecipeStep(Enum):
    ONE = "one"
    THREE = "three"
    FOUR = "four"
    FIVE = "five"
    SIX = "six"


PREFIX = "Step {step} of the design recipe for regular expressions has not been successfully completed. "

# Template id -> (step, body).  Bodies are str.format templates over rendered values.
TEMPLATES: dict[str, tuple[RecipeStep, str]] = {
    "T1": (RecipeStep.FIVE, "The argument to {kind}-regexp must be a regular expression, but found: {v}"),
    "T2": (RecipeStep.FIVE, "The {ordinal} argument to {kind}-regexp must be a regular expression, but found: {v}"),
    "T3": (
        RecipeStep.FIVE,
        "The argument to singleton-regexp must be a length-one text containing a lowercase "
        "Roman letter or one of $ & ! *, but found: {v}",
    ),
    "T4": (RecipeStep.ONE, "The regexp alphabet must be a list of lowercase alphabet letters, but found: {v}"),
    "T5": (RecipeStep.ONE, "The input alphabet must only contain lowercase alphabet letters, but found: {v}"),
    "T6": (RecipeStep.ONE, "The sigma must not contain duplicate elements, but found: {v}"),
    "T7": (
        RecipeStep.ONE,
        "The regular expression contains singletons built from elements not in the input alphabet: {v}",
    ),
    "T8": (
        RecipeStep.SIX,
        "The number of generated test cases to check with the predicate must be a positive integer, but found: {v}",
    ),
    "T9": (
        RecipeStep.SIX,
        "The number of generated test cases requires a predicate, but no predicate was provided",
    ),
    "T10": (
        RecipeStep.THREE,
        "The given predicate does not hold for the following words generated using the regexp: {v}",
    ),
    "T11": (RecipeStep.THREE, "The given predicate must produce a Boolean value, but produced: {v}"),
    "T12": (RecipeStep.FOUR, "The {what} must be a list of words, but found: {v}"),
    "T13": (
        RecipeStep.SIX,
        "The following words {which} by the regular expression: {v} contain characters not in "
        "the regular expression's alphabet: {sigma}",
    ),
    "T14": (
        RecipeStep.SIX,
        "The following words are expected to be generated by the constructed {kind}-regexp "
        "but are not generated: {v}",
    ),
    "T15": (
        RecipeStep.SIX,
        "The following words are expected to not be generated by the constructed {kind}-regexp "
        "but are generated: {v}",
    ),
    "T16": (
        RecipeStep.THREE,
        "The given predicate could not be evaluated on the following word generated using the regexp: {v}",
    ),
    "T17": (RecipeStep.THREE, "The given predicate must be a function of one word, but found: {v}"),
}


class RecipeError(Exception):
    """A recipe-based error: the uncompleted step plus a one-line message."""

    def __init__(self, step: RecipeStep, message: str, template: str = "", span: Optional[SourceSpan] = None):
        super().__init__(message)
        self.step = step
        self.message = message
        self.template = template
        self.span = span

    def with_span(self, span: SourceSpan) -> "RecipeError":
        return RecipeError(self.step, self.message, self.template, span)

    def __repr__(self) -> str:
        return f"RecipeError({self.step.value!r}, {self.message!r})"


def recipe_error(template: str, **values: Any) -> RecipeError:
    step, body = TEMPLATES[template]
    message = PREFIX.format(step=step.value) + body.format(**values)
    return RecipeError(step, message, template)


def render_value(v: Any) -> str:
    """Render a value the way it appears inside error messages.

    Symbols print bare, text is quoted, words print as ``(a b)`` with the
    empty word as ``ε``, other sequences as parenthesized lists.
    """
    if isinstance(v, bool):
        return "#t" if v else "#f"
    if isinstance(v, Sym):
        return str(v)
    if isinstance(v, str):
        escaped = v.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(v, Word):
        return "(" + " ".join(v) + ")" if v else "ε"
    if isinstance(v, (list, tuple)):
        return "(" + " ".join(render_value(x) for x in v) + ")"
    if is_regexp(v):
        return render_regexp(v)
    if v is None:
        return "#<void>"
    if callable(v):
        name = getattr(v, "name", None) or getattr(v, "__name__", None)
        return f"#<procedure:{name}>" if name and name != "<lambda>" else "#<procedure>"
    return str(v)


@dataclass
class TestSpec:
    """The optional test parameters of a constructor call.  ``None`` means absent."""

    __test__ = False

    sigma: Any = None
    pred: Optional[Callable[[Word], Any]] = None
    gen_cases: Any = None
    in_lang: Any = None
    not_in_lang: Any = None


@dataclass
class TestReport:
    """How many checks of each kind ran (and passed) for one constructor call."""

    __test__ = False

    alphabet: int = 0
    predicate: int = 0
    in_lang: int = 0
    not_in_lang: int = 0

    @property
    def membership(self) -> int:
        return self.in_lang + self.not_in_lang

    @property
    def total(self) -> int:
        return self.alphabet + self.predicate + self.in_lang + self.not_in_lang

    def __iadd__(self, other: "TestReport") -> "TestReport":
        self.alphabet += other.alphabet
        self.predicate += other.predicate
        self.in_lang += other.in_lang
        self.not_in_lang += other.not_in_lang
        return self


# -- step five ----------------------------------------------------------------

_ORDINALS = ("first", "second")


def _is_singleton_text(v: Any) -> bool:
    return isinstance(v, str) and not isinstance(v, Sym) and is_symbol(v)


def check_arguments(kind: str, args: Sequence[Any]) -> RegExp:
    """Step-five guards; returns the (now safe) unchecked construction."""
    if kind not in core.ARITY:
        raise ValueError(f"unknown regexp constructor kind: {kind!r}")
    if len(args) != core.ARITY[kind]:
        raise TypeError(f"{kind}-regexp takes {core.ARITY[kind]} argument(s), got {len(args)}")
    if kind == "singleton":
        if not _is_singleton_text(args[0]):
            raise recipe_error("T3", v=render_value(args[0]))
        return core.make_singleton_unchecked(args[0])
    if kind == "kleenestar" and not is_regexp(args[0]):
        raise recipe_error("T1", kind=kind, v=render_value(args[0]))
    if len(args) == 2:
        for ordinal, a in zip(_ORDINALS, args):
            if not is_regexp(a):
                raise recipe_error("T2", ordinal=ordinal, kind=kind, v=render_value(a))
    return core.UNCHECKED_CONSTRUCTORS[kind](*args)


# -- step one -------------------------------------------------------------------


def check_sigma(r: RegExp, sigma: Any) -> tuple[Sym, ...]:
    """Step-one checks on a supplied alphabet; returns it as a tuple of symbols."""
    if not isinstance(sigma, (list, tuple)):
        raise recipe_error("T4", v=render_value(sigma))
    bad = [x for x in sigma if not is_symbol(x)]
    if bad:
        raise recipe_error("T5", v=render_value(tuple(bad)))
    seen: set[str] = set()
    dups: list[Sym] = []
    for x in sigma:
        if x in seen and x not in dups:
            dups.append(Sym(x))
        seen.add(x)
    if dups:
        raise recipe_error("T6", v=render_value(tuple(dups)))
    alphabet = tuple(Sym(x) for x in sigma)
    outside = sorted(collect_singletons(r) - set(alphabet))
    if outside:
        raise recipe_error("T7", v=render_value(tuple(Sym(x) for x in outside)))
    return alphabet


# -- steps six / three / four ---------------------------------------------------


def check_gen_cases(spec: TestSpec) -> None:
    n = spec.gen_cases
    if n is None:
        return
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise recipe_error("T8", v=render_value(n))
    if spec.pred is None:
        raise recipe_error("T9")


def check_predicate(
    r: RegExp,
    pred: Any,
    n: int,
    cfg: GenConfig,
    rng: random.Random,
) -> int:
    """Step-three checks; returns the number of generated words tested."""
    if not callable(pred):
        raise recipe_error("T17", v=render_value(pred))
    if is_empty_language(r):
        # Nothing can be generated, so the predicate holds vacuously.
        return 0
    words = gen_many(r, n, cfg, rng)
    failing = []
    for w in words:
        try:
            result = pred(w)
        except Exception as exc:
            raise recipe_error("T16", v=render_value(w)) from exc
        if not isinstance(result, bool):
            raise recipe_error("T11", v=render_value(result))
        if not result:
            failing.append(w)
    if failing:
        raise recipe_error("T10", v=render_value(tuple(failing)))
    return len(words)


def _as_word(x: Any) -> Optional[Word]:
    if isinstance(x, Sym) and x in EMPTY_WORD_NAMES:
        return Word()
    if isinstance(x, (list, tuple)) and all(is_symbol(s) for s in x):
        return Word(x)
    return None


def as_word_list(value: Any) -> Optional[list[Word]]:
    """Coerce a literal list of words, or ``None`` if *value* is not one."""
    if not isinstance(value, (list, tuple)) or isinstance(value, Word):
        return None
    words = [_as_word(x) for x in value]
    if any(w is None for w in words):
        return None
    return words


def effective_alphabet(r: RegExp, sigma: Optional[Sequence[Sym]]) -> tuple[Sym, ...]:
    if sigma is not None:
        return tuple(sigma)
    return tuple(Sym(s) for s in sorted(collect_singletons(r)))


def check_word_list(r: RegExp, value: Any, alphabet: tuple[Sym, ...], expect_member: bool) -> int:
    if expect_member:
        what, which, template = "words generated by the regular expression", "to be generated", "T14"
    else:
        what, which, template = "words not generated by the regular expression", "not to be generated", "T15"
    words = as_word_list(value)
    if words is None:
        raise recipe_error("T12", what=what, v=render_value(value))
    allowed = set(alphabet)
    outside = [w for w in words if not set(w) <= allowed]
    if outside:
        raise recipe_error("T13", which=which, v=render_value(tuple(outside)), sigma=render_value(alphabet))
    nfa = to_nfa(r)
    wrong = [w for w in words if accepts(nfa, w) != expect_member]
    if wrong:
        raise recipe_error(template, kind=r.kind, v=render_value(tuple(wrong)))
    return len(words)


def run_spec_tests(
    r: RegExp,
    spec: TestSpec,
    cfg: GenConfig = GenConfig(),
    rng: Optional[random.Random] = None,
    default_gen_cases: int = DEFAULT_GEN_CASES,
    sigma: Optional[Sequence[Sym]] = None,
) -> TestReport:
    """Run the gen-cases, predicate and word-list checks against an existing regexp.

    *sigma* is the already-validated alphabet, if any; when omitted and
    ``spec.sigma`` is a valid alphabet it is used as given.
    """
    rng = rng if rng is not None else cfg.rng()
    report = TestReport()
    if sigma is None and spec.sigma is not None:
        sigma = tuple(Sym(x) for x in spec.sigma)
    check_gen_cases(spec)
    if spec.pred is not None:
        n = spec.gen_cases if spec.gen_cases is not None else default_gen_cases
        report.predicate = check_predicate(r, spec.pred, n, cfg, rng)
    alphabet = effective_alphabet(r, sigma)
    if spec.in_lang is not None:
        report.in_lang = check_word_list(r, spec.in_lang, alphabet, expect_member=True)
    if spec.not_in_lang is not None:
        report.not_in_lang = check_word_list(r, spec.not_in_lang, alphabet, expect_member=False)
    return report


def build_and_test(
    kind: str,
    args: Sequence[Any] = (),
    spec: Optional[TestSpec] = None,
    cfg: GenConfig = GenConfig(),
    rng: Optional[random.Random] = None,
    default_gen_cases: int = DEFAULT_GEN_CASES,
) -> tuple[RegExp, TestReport]:
    """Like :func:`build_checked` but also return the report of the checks that ran."""
    spec = spec if spec is not None else TestSpec()
    r = check_arguments(kind, args)
    sigma = None
    alphabet_checks = 0
    if spec.sigma is not None:
        sigma = check_sigma(r, spec.sigma)
        alphabet_checks = 1
    report = run_spec_tests(r, spec, cfg, rng, default_gen_cases, sigma=sigma)
    report.alphabet = alphabet_checks
    return r, report


def build_checked(
    kind: str,
    args: Sequence[Any] = (),
    spec: Optional[TestSpec] = None,
    cfg: GenConfig = GenConfig(),
    rng: Optional[random.Random] = None,
    default_gen_cases: int = DEFAULT_GEN_CASES,
) -> RegExp:
    """Construct a regexp of *kind* from raw *args*, running the requested tests.

    Raises :class:`RecipeError` for the first failing check.
    """
    return build_and_test(kind, args, spec, cfg, rng, default_gen_cases)[0]


# Convenience wrappers mirroring the constructor names.


def singleton_regexp(a: Any, **kw: Any) -> RegExp:
    return build_checked("singleton", [a], TestSpec(**kw))


def union_regexp(r1: Any, r2: Any, **kw: Any) -> RegExp:
    return build_checked("union", [r1, r2], TestSpec(**kw))


def concat_regexp(r1: Any, r2: Any, **kw: Any) -> RegExp:
    return build_checked("concat", [r1, r2], TestSpec(**kw))


def kleenestar_regexp(r1: Any, **kw: Any) -> RegExp:
    return build_checked("kleenestar", [r1], TestSpec(**kw))


def null_regexp() -> RegExp:
    return core.make_null()


def empty_regexp() -> RegExp:
    return core.make_empty()
