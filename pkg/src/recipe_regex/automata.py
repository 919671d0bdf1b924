"""Membership and emptiness for regexps.

Two deciders that share nothing but the :mod:`core` data types:

* :func:`to_nfa` + :func:`accepts` -- Thompson construction and epsilon-closure
  subset simulation.  This is what validation uses.
* :func:`matches_derivative` -- Brzozowski derivatives, kept as an
  independent cross-check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .core import (
    Concat,
    Empty,
    KleeneStar,
    Null,
    RegExp,
    Singleton,
    Union,
    render_regexp,
)

EPSILON = None


@dataclass(frozen=True)
class Nfa:
    """An epsilon-NFA.  Transition labels are symbols, or ``None`` for epsilon."""

    states: frozenset[int]
    start: int
    finals: frozenset[int]
    transitions: frozenset[tuple[int, Optional[str], int]]
    _closures: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )
    _out: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.start not in self.states or not self.finals <= self.states:
            raise ValueError("start and finals must be states")
        out: dict[int, list[tuple[Optional[str], int]]] = {s: [] for s in self.states}
        for src, label, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError(f"transition {src}->{dst} leaves the state set")
            out[src].append((label, dst))
        self._out.update(out)

    def outgoing(self, state: int) -> list[tuple[Optional[str], int]]:
        return self._out[state]

    def closure(self, state: int) -> frozenset[int]:
        """Epsilon closure of a single state, memoized."""
        cached = self._closures.get(state)
        if cached is not None:
            return cached
        seen = {state}
        stack = [state]
        while stack:
            s = stack.pop()
            for label, dst in self._out[s]:
                if label is EPSILON and dst not in seen:
                    seen.add(dst)
                    stack.append(dst)
        result = frozenset(seen)
        with self._lock:
            self._closures.setdefault(state, result)
        return result

    def closure_of(self, states: Iterable[int]) -> frozenset[int]:
        acc: set[int] = set()
        for s in states:
            acc |= self.closure(s)
        return frozenset(acc)


class _Builder:
    def __init__(self) -> None:
        self.next_id = 0
        self.transitions: list[tuple[int, Optional[str], int]] = []

    def fresh(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def build(self, r: RegExp) -> tuple[int, int]:
        if isinstance(r, (Null, Empty, Singleton)):
            s, f = self.fresh(), self.fresh()
            if isinstance(r, Empty):
                self.transitions.append((s, EPSILON, f))
            elif isinstance(r, Singleton):
                self.transitions.append((s, str(r.a), f))
            return s, f
        if isinstance(r, Union):
            s = self.fresh()
            s1, f1 = self.build(r.r1)
            s2, f2 = self.build(r.r2)
            f = self.fresh()
            self.transitions += [(s, EPSILON, s1), (s, EPSILON, s2), (f1, EPSILON, f), (f2, EPSILON, f)]
            return s, f
        if isinstance(r, Concat):
            s1, f1 = self.build(r.r1)
            s2, f2 = self.build(r.r2)
            self.transitions.append((f1, EPSILON, s2))
            return s1, f2
        if isinstance(r, KleeneStar):
            s = self.fresh()
            s1, f1 = self.build(r.r1)
            f = self.fresh()
            self.transitions += [(s, EPSILON, s1), (s, EPSILON, f), (f1, EPSILON, s1), (f1, EPSILON, f)]
            return s, f
        raise TypeError(f"not a regexp: {r!r}")


def to_nfa(r: RegExp) -> Nfa:
    """Thompson construction.  Concatenation links the parts with an epsilon edge."""
    b = _Builder()
    start, final = b.build(r)
    return Nfa(
        states=frozenset(range(b.next_id)),
        start=start,
        finals=frozenset({final}),
        transitions=frozenset(b.transitions),
    )


def accepts(n: Nfa, w: Iterable[str]) -> bool:
    current = n.closure(n.start)
    for sym in w:
        step = {dst for s in current for label, dst in n.outgoing(s) if label == sym}
        if not step:
            return False
        current = n.closure_of(step)
    return not current.isdisjoint(n.finals)


def is_empty_language(r: RegExp) -> bool:
    if isinstance(r, Null):
        return True
    if isinstance(r, (Empty, Singleton, KleeneStar)):
        return False
    if isinstance(r, Union):
        return is_empty_language(r.r1) and is_empty_language(r.r2)
    if isinstance(r, Concat):
        return is_empty_language(r.r1) or is_empty_language(r.r2)
    raise TypeError(f"not a regexp: {r!r}")


# -- Brzozowski derivatives -------------------------------------------------

_NULL = Null()
_EMPTY = Empty()


def _union_terms(r: RegExp, acc: set[RegExp]) -> None:
    if isinstance(r, Union):
        _union_terms(r.r1, acc)
        _union_terms(r.r2, acc)
    elif not isinstance(r, Null):
        acc.add(r)


def _union(r1: RegExp, r2: RegExp) -> RegExp:
    # Flatten and sort the alternatives so that equal languages built in a
    # different order collapse to the same term.
    terms: set[RegExp] = set()
    _union_terms(r1, terms)
    _union_terms(r2, terms)
    if not terms:
        return _NULL
    ordered = sorted(terms, key=_term_key)
    out = ordered[-1]
    for t in reversed(ordered[:-1]):
        out = Union(t, out)
    return out


@lru_cache(maxsize=4096)
def _term_key(r: RegExp) -> str:
    return render_regexp(r)


def _concat(r1: RegExp, r2: RegExp) -> RegExp:
    if isinstance(r1, Null) or isinstance(r2, Null):
        return _NULL
    if isinstance(r1, Empty):
        return r2
    if isinstance(r2, Empty):
        return r1
    return Concat(r1, r2)


def _star(r: RegExp) -> RegExp:
    if isinstance(r, (Null, Empty)):
        return _EMPTY
    if isinstance(r, KleeneStar):
        return r
    return KleeneStar(r)


@lru_cache(maxsize=4096)
def nullable(r: RegExp) -> bool:
    if isinstance(r, (Empty, KleeneStar)):
        return True
    if isinstance(r, (Null, Singleton)):
        return False
    if isinstance(r, Union):
        return nullable(r.r1) or nullable(r.r2)
    if isinstance(r, Concat):
        return nullable(r.r1) and nullable(r.r2)
    raise TypeError(f"not a regexp: {r!r}")


@lru_cache(maxsize=16384)
def derivative(r: RegExp, a: str) -> RegExp:
    """The regexp for ``{w : a.w in L(r)}``."""
    if isinstance(r, (Null, Empty)):
        return _NULL
    if isinstance(r, Singleton):
        return _EMPTY if r.a == a else _NULL
    if isinstance(r, Union):
        return _union(derivative(r.r1, a), derivative(r.r2, a))
    if isinstance(r, Concat):
        left = _concat(derivative(r.r1, a), r.r2)
        if nullable(r.r1):
            return _union(left, derivative(r.r2, a))
        return left
    if isinstance(r, KleeneStar):
        return _concat(derivative(r.r1, a), _star(r.r1))
    raise TypeError(f"not a regexp: {r!r}")


def matches_derivative(r: RegExp, w: Iterable[str]) -> bool:
    for sym in w:
        r = derivative(r, str(sym))
        if isinstance(r, Null):
            return False
    return nullable(r)
