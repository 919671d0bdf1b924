"""Compare the NFA and derivative deciders, and check generated words, on corpus regexps.

    python scripts/oracle_agreement.py [--max-len 6] [--samples 1000] [--seed 1234]

Prints one row per named corpus regexp.
"""

from __future__ import annotations

import argparse
import itertools
import time
from pathlib import Path

from recipe_regex.automata import accepts, matches_derivative, to_nfa
from recipe_regex.core import Word, collect_singletons, size
from recipe_regex.dsl import eval_file, parse_file, regexps_of
from recipe_regex.wordgen import EmptyLanguageError, GenConfig, gen_many

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
FILES = ["bstar_a.rkt", "odda.rkt", "abstar_session/v6.rkt", "dna.rkt", "odda_session/v5.rkt"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=1234)
    args = ap.parse_args()
    cfg = GenConfig(seed=args.seed)

    print(f"{'regexp':<28}{'size':>6}{'states':>8}{'words':>8}{'accepted':>10}{'disagree':>10}{'gen bad':>9}{'secs':>7}")
    for f in FILES:
        path = CORPUS / f
        named = regexps_of(eval_file(parse_file(path.read_text(encoding="utf-8"), str(path)), cfg))
        for name, r in named.items():
            t0 = time.perf_counter()
            n = to_nfa(r)
            alphabet = sorted(collect_singletons(r))
            words = [Word(p) for k in range(args.max_len + 1) for p in itertools.product(alphabet, repeat=k)]
            verdicts = [accepts(n, w) for w in words]
            disagree = sum(v != matches_derivative(r, w) for v, w in zip(verdicts, words))
            try:
                bad = sum(not accepts(n, w) for w in gen_many(r, args.samples, cfg))
            except EmptyLanguageError:
                bad = 0
            secs = time.perf_counter() - t0
            label = f"{f}:{name}"
            print(f"{label:<28}{size(r):>6}{len(n.states):>8}{len(words):>8}{sum(verdicts):>10}{disagree:>10}{bad:>9}{secs:>7.2f}")


if __name__ == "__main__":
    main()
