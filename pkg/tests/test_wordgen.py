import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recipe_regex import core
from recipe_regex.automata import accepts, is_empty_language, to_nfa
from recipe_regex.core import KleeneStar, Word
from recipe_regex.wordgen import EmptyLanguageError, GenConfig, gen_many, gen_regexp_word

from conftest import A, AB_STAR_U_BA_STAR, B, BSTAR, BSTAR_A, regexps


def test_trivial_languages():
    assert gen_regexp_word(core.make_empty()) == Word()
    assert gen_regexp_word(A, GenConfig(seed=7)) == Word("a")
    assert gen_many(A, 3) == [Word("a")] * 3


@pytest.mark.parametrize("r", [core.make_null(), core.make_concat_unchecked(A, core.make_null())])
def test_empty_language_raises(r):
    with pytest.raises(EmptyLanguageError):
        gen_regexp_word(r)
    with pytest.raises(EmptyLanguageError):
        gen_many(r, 1)


def test_bstar_a_golden():
    # random.Random(1234).randint(0, 10) == 7, so seven b's then the a.
    assert random.Random(1234).randint(0, 10) == 7
    w = gen_regexp_word(BSTAR_A, GenConfig(seed=1234))
    assert w == Word("bbbbbbba")
    assert accepts(to_nfa(BSTAR_A), w)


def test_gen_many_golden_and_sound():
    words = gen_many(AB_STAR_U_BA_STAR, 3, GenConfig(seed=1234))
    assert words == [Word("ba"), Word("ab"), Word("abbbbbbbbbb")]
    n = to_nfa(AB_STAR_U_BA_STAR)
    assert all(accepts(n, w) for w in words)


def test_star_of_empty_language_generates_epsilon():
    assert gen_regexp_word(KleeneStar(core.make_null())) == Word()


def test_union_avoids_empty_branch():
    r = core.make_union_unchecked(core.make_null(), B)
    assert set(gen_many(r, 50)) == {Word("b")}


def test_config_validation():
    with pytest.raises(ValueError):
        GenConfig(max_star_reps=0)
    with pytest.raises(ValueError):
        gen_many(A, 0)


def test_star_coverage():
    counts = Counter(len(w) for w in gen_many(BSTAR, 1000, GenConfig(seed=1234, max_star_reps=10)))
    assert set(counts) == set(range(11))


def test_shared_rng_continues_the_stream():
    rng = random.Random(5)
    first = [gen_regexp_word(BSTAR, rng=rng) for _ in range(5)]
    again = gen_many(BSTAR, 5, rng=random.Random(5))
    assert first == again


def leaves(r):
    if isinstance(r, (core.Singleton, core.Empty)):
        return 1
    return sum(leaves(c) for c in core.children(r))


@settings(max_examples=200)
@given(regexps(max_leaves=8), st.integers(0, 2**32), st.integers(1, 4))
def test_sound_deterministic_bounded(r, seed, reps):
    if is_empty_language(r):
        return
    cfg = GenConfig(seed=seed, max_star_reps=reps)
    words = gen_many(r, 20, cfg)
    assert words == gen_many(r, 20, cfg)
    n = to_nfa(r)
    bound = max(leaves(r), 1) * reps ** core.star_depth(r)
    for w in words:
        assert accepts(n, w)
        assert len(w) <= bound


@given(st.integers(0, 2**32), st.integers(1, 12))
def test_star_length_bound(seed, reps):
    for w in gen_many(BSTAR, 30, GenConfig(seed=seed, max_star_reps=reps)):
        assert len(w) <= reps
