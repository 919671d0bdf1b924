from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from recipe_regex import core
from recipe_regex.core import Concat, Empty, KleeneStar, Null, Singleton, Union, Word, children
from recipe_regex.dsl import eval_file, parse_file, regexps_of

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

#: Corpus files that evaluate without error.
GOOD_FILES = ["bstar_a.rkt", "odda.rkt", "abstar_session/v6.rkt", "dna.rkt", "odda_session/v5.rkt"]

A = core.make_singleton_unchecked("a")
B = core.make_singleton_unchecked("b")
BSTAR = core.make_kleenestar_unchecked(B)
BSTAR_A = core.make_concat_unchecked(BSTAR, A)
A_BSTAR = core.make_concat_unchecked(A, BSTAR)
B_ASTAR = core.make_concat_unchecked(B, core.make_kleenestar_unchecked(A))
AB_STAR_U_BA_STAR = core.make_union_unchecked(A_BSTAR, B_ASTAR)


def load(name: str):
    path = CORPUS / name
    return eval_file(parse_file(path.read_text(encoding="utf-8"), str(path)))


def subterms(r):
    seen = []
    stack = [r]
    while stack:
        node = stack.pop()
        if node not in seen:
            seen.append(node)
        stack.extend(children(node))
    return seen


def corpus_regexps() -> dict[str, core.RegExp]:
    """Every named corpus regexp plus every distinct subterm of one."""
    out: dict[str, core.RegExp] = {}
    for f in GOOD_FILES:
        for name, r in regexps_of(load(f)).items():
            out[f"{f}:{name}"] = r
    distinct = {}
    for key, r in list(out.items()):
        for i, t in enumerate(subterms(r)):
            if t not in distinct.values():
                distinct[f"{key}#{i}"] = t
    out.update({k: v for k, v in distinct.items() if v not in out.values()})
    return out


def words_upto(alphabet, n):
    alphabet = sorted(alphabet)
    for k in range(n + 1):
        for combo in itertools.product(alphabet, repeat=k):
            yield Word(combo)


def language_upto(r, n: int) -> set[tuple]:
    """Brute-force set semantics: every word of L(r) with length <= n."""
    if isinstance(r, Null):
        return set()
    if isinstance(r, Empty):
        return {()}
    if isinstance(r, Singleton):
        return {(str(r.a),)} if n >= 1 else set()
    if isinstance(r, Union):
        return language_upto(r.r1, n) | language_upto(r.r2, n)
    if isinstance(r, Concat):
        left, right = language_upto(r.r1, n), language_upto(r.r2, n)
        return {u + v for u in left for v in right if len(u) + len(v) <= n}
    if isinstance(r, KleeneStar):
        body = {w for w in language_upto(r.r1, n) if w}
        result = {()}
        frontier = {()}
        while frontier:
            frontier = {u + v for u in frontier for v in body if len(u) + len(v) <= n} - result
            result |= frontier
        return result
    raise TypeError(r)


SMALL_SYMBOLS = st.sampled_from(["a", "b", "c"])


def regexps(symbols=SMALL_SYMBOLS, max_leaves: int = 8):
    leaves = st.one_of(
        st.just(core.make_null()),
        st.just(core.make_empty()),
        symbols.map(core.make_singleton_unchecked),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.tuples(inner, inner).map(lambda p: core.make_union_unchecked(*p)),
            st.tuples(inner, inner).map(lambda p: core.make_concat_unchecked(*p)),
            inner.map(core.make_kleenestar_unchecked),
        ),
        max_leaves=max_leaves,
    )


@pytest.fixture(scope="session")
def corpus():
    return corpus_regexps()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, ok in sorted(RESULTS):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
