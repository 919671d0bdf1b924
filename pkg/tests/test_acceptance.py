"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that the terminal summary prints (see
``conftest.py``).  Run on its own with ``pytest tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import json
import random
import re
import subprocess
import sys
import time

import pytest

from recipe_regex.automata import accepts, matches_derivative, to_nfa
from recipe_regex.cli import CliConfig, check_files, load_script, replay_session
from recipe_regex.core import Word, collect_singletons
from recipe_regex.dsl import parse_file
from recipe_regex.dsl.syntax import Call, Definition, Let, Literal, Ref
from recipe_regex.wordgen import EmptyLanguageError, GenConfig, gen_many

from conftest import AB_STAR_U_BA_STAR, BSTAR_A, CORPUS, load, words_upto

RESULTS: list[tuple[int, str, bool]] = []


@contextlib.contextmanager
def criterion(n: int, title: str):
    ok = False
    try:
        yield
        ok = True
    finally:
        RESULTS.append((n, title, ok))


HEAD = "Step {} of the design recipe for regular expressions has not been successfully completed. "

#: (session, version index, step, message body, first line of the highlighted expression, line, column)
TRANSCRIPTS = [
    ("odda_session", 0, "five", "The argument to kleenestar-regexp must be a regular expression, but found: b",
     "(kleenestar-regexp 'b)", 6, 25),
    ("odda_session", 1, "five", 'The argument to kleenestar-regexp must be a regular expression, but found: "b"',
     '(kleenestar-regexp "b")', 6, 25),
    ("odda_session", 2, "five", 'The second argument to concat-regexp must be a regular expression, but found: "a"',
     '(concat-regexp BSTAR "a")', 7, 25),
    ("odda_session", 3, "five", 'The first argument to concat-regexp must be a regular expression, but found: "a"',
     '(concat-regexp "a" EVENASTAR)', 11, 25),
    ("abstar_session", 0, "six", "The number of generated test cases to check with the predicate must be a positive "
     "integer, but found: a", "(union-regexp", 18, 5),
    ("abstar_session", 1, "three", "The given predicate does not hold for the following words generated using the "
     "regexp: ((a b b b) (a b b b b b b b))", "(union-regexp", 18, 5),
    ("abstar_session", 2, "six", "The following words to be generated by the regular expression: ((a b b v)) contain "
     "characters not in the regular expression's alphabet: (a b)", "(union-regexp", 18, 5),
    ("abstar_session", 3, "six", "The following words are expected to be generated by the constructed union-regexp "
     "but are not generated: ((b b))", "(union-regexp", 18, 5),
    ("abstar_session", 4, "six", "The following words are expected to not be generated by the constructed "
     "union-regexp but are generated: ((a b))", "(union-regexp", 18, 5),
]


def _norm(s: str) -> str:
    return " ".join(s.split())


def _replay(session: str):
    versions, seed = load_script([str(CORPUS / session / "session.json")])
    cfg = CliConfig(versions, seed=seed if seed is not None else 1234)
    return replay_session(versions, cfg)[1]


def test_1_transcript_fidelity():
    with criterion(1, "transcript fidelity: 9 session messages byte-exact with spans"):
        start = time.perf_counter()
        results = {s: _replay(s) for s in ("odda_session", "abstar_session")}
        elapsed = time.perf_counter() - start
        got = []
        for session, runs in results.items():
            assert runs[-1].status == "ok"
            for i, r in enumerate(runs[:-1]):
                head = r.span.text(r.source).splitlines()[0]
                got.append((session, i, r.step, _norm(r.message), head, r.span.line, r.span.column))
        expected = [
            (s, i, step, _norm(HEAD.format(step) + body), head, line, col)
            for s, i, step, body, head, line, col in TRANSCRIPTS
        ]
        assert got == expected
        assert elapsed < 1.0


def test_2_corpus_success():
    with criterion(2, "corpus success: final corpus files exit 0 at seed 1234"):
        start = time.perf_counter()
        paths = [str(CORPUS / f) for f in ("bstar_a.rkt", "odda.rkt", "abstar_session/v6.rkt", "dna.rkt")]
        for p in paths:
            result = check_files([p], CliConfig([p], seed=1234))
            assert result.exit_code == 0, (p, result.message)
        assert time.perf_counter() - start < 5.0


def test_3_generator_soundness(corpus):
    with criterion(3, "generator soundness: 1000 words per corpus regexp accepted"):
        start = time.perf_counter()
        cfg = GenConfig(seed=1234)
        failures = 0
        nonempty = 0
        for name, r in corpus.items():
            n = to_nfa(r)
            try:
                words = gen_many(r, 1000, cfg)
            except EmptyLanguageError:
                continue
            nonempty += 1
            failures += sum(1 for w in words if not accepts(n, w))
        assert nonempty > 0
        assert failures == 0
        assert time.perf_counter() - start < 5.0


def test_4_oracle_equivalence(corpus):
    with criterion(4, "oracle equivalence: NFA and derivatives agree on all words up to length 6"):
        disagreements = 0
        for name, r in corpus.items():
            n = to_nfa(r)
            words = list(words_upto(collect_singletons(r), 6))
            if name == "dna.rkt:DISORDER-DNA":
                assert len(words) == 5461
            disagreements += sum(1 for w in words if accepts(n, w) != matches_derivative(r, w))
        assert "dna.rkt:DISORDER-DNA" in corpus
        assert disagreements == 0


def test_5_semantic_spot_checks():
    with criterion(5, "semantic spot checks confirmed by both deciders"):
        dna = load("dna.rkt").env["DISORDER-DNA"]
        cases = [
            (BSTAR_A, "bba", True),
            (BSTAR_A, "", False),
            (AB_STAR_U_BA_STAR, "ab", True),
            (AB_STAR_U_BA_STAR, "bb", False),
            (dna, "cagcag", True),
            (dna, "cag", False),
        ]
        for r, w, expected in cases:
            assert accepts(to_nfa(r), Word(w)) is expected
            assert matches_derivative(r, Word(w)) is expected


# -- criterion 6 ------------------------------------------------------------------

_REGEXP_ARG_BUGS = ['"a"', "'b", "7", "#t"]
_SINGLETON_ARG_BUGS = ["'a", '"ab"', '"A"', "3"]


def _calls(node, out):
    if isinstance(node, Definition):
        _calls(node.body, out)
    elif isinstance(node, Let):
        for b in node.bindings:
            _calls(b.value, out)
        _calls(node.body, out)
    elif isinstance(node, Call):
        out.append(node)
        for a in node.args:
            _calls(a, out)


def _sites(text: str):
    """One mutable argument per constructor call: (call offset, arg offset, arg length, kind)."""
    calls = []
    for d in parse_file(text):
        _calls(d, calls)
    sites = []
    for c in calls:
        for a in c.args:
            if c.kind == "singleton" and isinstance(a, Literal):
                sites.append((c.span.offset, a.span.offset, a.span.length, c.kind))
            elif isinstance(a, Ref):
                sites.append((c.span.offset, a.span.offset, a.span.length, c.kind))
    return sites


def _apply(text: str, muts) -> str:
    # muts are (arg offset, arg length, replacement) in original coordinates.
    for off, length, new in sorted(muts, reverse=True):
        text = text[:off] + new + text[off + length :]
    return text


def _shift(muts, offset: int) -> int:
    return offset + sum(len(new) - length for off, length, new in muts if off < offset)


def test_6_single_error_property(tmp_path):
    with criterion(6, "single-error property: 100 mutated files, one error per run until success"):
        rng = random.Random(2024)
        sources = {f: (CORPUS / f).read_text(encoding="utf-8") for f in ("bstar_a.rkt", "odda.rkt", "abstar_session/v6.rkt", "dna.rkt", "odda_session/v5.rkt")}
        runs = 0
        for trial in range(100):
            name = rng.choice(sorted(sources))
            text = sources[name]
            by_call = {}
            for site in _sites(text):
                by_call.setdefault(site[0], site)
            k = rng.randint(3, min(5, len(by_call)))
            chosen = rng.sample(sorted(by_call.values()), k)
            active = {}
            for call_off, off, length, kind in chosen:
                bugs = _SINGLETON_ARG_BUGS if kind == "singleton" else _REGEXP_ARG_BUGS
                active[call_off] = (off, length, rng.choice(bugs))
            path = tmp_path / f"m{trial}.rkt"
            fixes = 0
            while True:
                path.write_text(_apply(text, active.values()), encoding="utf-8")
                result = check_files([str(path)], CliConfig([str(path)]))
                runs += 1
                if result.status == "ok":
                    break
                assert result.status == "recipe-error" and result.step == "five", result.message
                assert len(re.findall(r"Step \w+ of the design recipe", result.message)) == 1
                matched = [c for c in active if _shift(active.values(), c) == result.span.offset]
                assert len(matched) == 1, (name, result.message)
                del active[matched[0]]
                fixes += 1
            assert fixes == k and not active
        assert runs >= 400


def test_7_validation_order():
    from recipe_regex.validation import RecipeError, RecipeStep, TestSpec, build_checked
    from recipe_regex.core import Sym
    from conftest import A_BSTAR, B_ASTAR, BSTAR

    with criterion(7, "validation order: step five before one, gen-cases before predicate"):
        with pytest.raises(RecipeError) as info:
            build_checked("concat", [BSTAR, "a"], TestSpec(sigma="ab"))
        assert info.value.step is RecipeStep.FIVE
        with pytest.raises(RecipeError) as info:
            build_checked("union", [A_BSTAR, B_ASTAR], TestSpec(gen_cases=Sym("a"), pred=lambda w: False))
        assert info.value.step is RecipeStep.SIX
        assert "number of generated test cases" in info.value.message


def test_8_determinism():
    with criterion(8, "determinism: identical stdout bytes across runs, text and json"):
        base = [sys.executable, "-m", "recipe_regex.cli"]
        for fmt in ("text", "json"):
            for argv in (
                ["replay", str(CORPUS / "abstar_session/session.json")],
                ["check", "--seed", "77", str(CORPUS / "dna.rkt")],
            ):
                cmd = base + argv + ["--format", fmt]
                outs = [subprocess.run(cmd, capture_output=True, check=False).stdout for _ in range(2)]
                assert outs[0] == outs[1] and outs[0]
                if fmt == "json":
                    json.loads(outs[0])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
