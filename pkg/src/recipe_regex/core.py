"""The regexp algebra: six variants, unchecked constructors, observers, predicates.

Values are immutable and compared structurally.  Checked construction (the
kind that produces recipe-based errors) lives in :mod:`recipe_regex.validation`.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

#: Characters admissible as singleton symbols.  Digits and uppercase are excluded.
SYMBOL_UNIVERSE = frozenset(string.ascii_lowercase) | frozenset("$&!*")


class Sym(str):
    """A quoted symbol such as ``'b``.

    Symbols are strings, so ``Sym("a") == "a"``; the subclass only matters
    for rendering, where symbols print bare and text prints quoted.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return f"Sym({str.__repr__(self)})"


class Word(tuple):
    """A finite sequence of symbols.  The empty word renders as ``ε``."""

    __slots__ = ()

    def __new__(cls, symbols=()):
        return super().__new__(cls, (Sym(s) for s in symbols))

    def __repr__(self) -> str:
        return f"Word({' '.join(self) or 'ε'})"


EMPTY_WORD = Word()


def is_symbol(value: object) -> bool:
    return isinstance(value, str) and len(value) == 1 and value in SYMBOL_UNIVERSE


class RegExp:
    """Base class of the six regexp variants."""

    __slots__ = ()
    kind: str = ""

    def __str__(self) -> str:
        return render_regexp(self)


@dataclass(frozen=True, eq=True)
class Null(RegExp):
    kind = "null"


@dataclass(frozen=True, eq=True)
class Empty(RegExp):
    kind = "empty"


@dataclass(frozen=True, eq=True)
class Singleton(RegExp):
    a: Sym
    kind = "singleton"


@dataclass(frozen=True, eq=True)
class Union(RegExp):
    r1: RegExp
    r2: RegExp
    kind = "union"


@dataclass(frozen=True, eq=True)
class Concat(RegExp):
    r1: RegExp
    r2: RegExp
    kind = "concat"


@dataclass(frozen=True, eq=True)
class KleeneStar(RegExp):
    r1: RegExp
    kind = "kleenestar"


AnyRegExp = Null | Empty | Singleton | Union | Concat | KleeneStar


class WrongVariantError(TypeError):
    """An observer was applied to a regexp of the wrong variant."""

    def __init__(self, observer: str, expected: str, actual: RegExp):
        self.observer = observer
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{observer} expects a {expected}-regexp, but found a "
            f"{getattr(actual, 'kind', type(actual).__name__)}-regexp"
        )


# -- constructors -----------------------------------------------------------

_NULL = Null()
_EMPTY = Empty()


def make_null() -> RegExp:
    return _NULL


def make_empty() -> RegExp:
    return _EMPTY


def make_singleton_unchecked(a: str) -> RegExp:
    """Build ``Singleton(a)``.  The caller guarantees *a* is a valid symbol."""
    return Singleton(Sym(a))


def make_union_unchecked(r1: RegExp, r2: RegExp) -> RegExp:
    return Union(r1, r2)


def make_concat_unchecked(r1: RegExp, r2: RegExp) -> RegExp:
    return Concat(r1, r2)


def make_kleenestar_unchecked(r1: RegExp) -> RegExp:
    return KleeneStar(r1)


UNCHECKED_CONSTRUCTORS = {
    "null": make_null,
    "empty": make_empty,
    "singleton": make_singleton_unchecked,
    "union": make_union_unchecked,
    "concat": make_concat_unchecked,
    "kleenestar": make_kleenestar_unchecked,
}

#: Number of sub-regexp / symbol arguments each constructor takes.
ARITY = {"null": 0, "empty": 0, "singleton": 1, "union": 2, "concat": 2, "kleenestar": 1}


# -- observers --------------------------------------------------------------


def _expect(r: RegExp, cls: type, observer: str) -> None:
    if not isinstance(r, cls):
        raise WrongVariantError(observer, cls.kind, r)


def singleton_a(r: RegExp) -> Sym:
    _expect(r, Singleton, "singleton-regexp-a")
    return r.a


def union_r1(r: RegExp) -> RegExp:
    _expect(r, Union, "union-regexp-r1")
    return r.r1


def union_r2(r: RegExp) -> RegExp:
    _expect(r, Union, "union-regexp-r2")
    return r.r2


def concat_r1(r: RegExp) -> RegExp:
    _expect(r, Concat, "concat-regexp-r1")
    return r.r1


def concat_r2(r: RegExp) -> RegExp:
    _expect(r, Concat, "concat-regexp-r2")
    return r.r2


def kleenestar_r1(r: RegExp) -> RegExp:
    _expect(r, KleeneStar, "kleenestar-regexp-r1")
    return r.r1


# -- predicates -------------------------------------------------------------


def is_regexp(value: object) -> bool:
    return isinstance(value, (Null, Empty, Singleton, Union, Concat, KleeneStar))


def is_null(r: object) -> bool:
    return isinstance(r, Null)


def is_empty(r: object) -> bool:
    return isinstance(r, Empty)


def is_singleton(r: object) -> bool:
    return isinstance(r, Singleton)


def is_union(r: object) -> bool:
    return isinstance(r, Union)


def is_concat(r: object) -> bool:
    return isinstance(r, Concat)


def is_kleenestar(r: object) -> bool:
    return isinstance(r, KleeneStar)


TYPE_PREDICATES = (is_null, is_empty, is_singleton, is_union, is_concat, is_kleenestar)


# -- structural utilities ---------------------------------------------------


def children(r: RegExp) -> tuple[RegExp, ...]:
    if isinstance(r, (Union, Concat)):
        return (r.r1, r.r2)
    if isinstance(r, KleeneStar):
        return (r.r1,)
    return ()


def collect_singletons(r: RegExp) -> frozenset[Sym]:
    """Every symbol used to build a singleton node somewhere inside *r*."""
    found: set[Sym] = set()
    stack = [r]
    while stack:
        node = stack.pop()
        if isinstance(node, Singleton):
            found.add(node.a)
        stack.extend(children(node))
    return frozenset(found)


def size(r: RegExp) -> int:
    """Node count."""
    return 1 + sum(size(c) for c in children(r))


def star_depth(r: RegExp) -> int:
    inner = max((star_depth(c) for c in children(r)), default=0)
    return inner + 1 if isinstance(r, KleeneStar) else inner


def render_regexp(r: RegExp) -> str:
    """Render in constructor syntax, e.g. ``(concat-regexp (singleton-regexp "a") (empty-regexp))``."""
    if isinstance(r, Null):
        return "(null-regexp)"
    if isinstance(r, Empty):
        return "(empty-regexp)"
    if isinstance(r, Singleton):
        return f'(singleton-regexp "{r.a}")'
    parts = " ".join(render_regexp(c) for c in children(r))
    return f"({r.kind}-regexp {parts})"
