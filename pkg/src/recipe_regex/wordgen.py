"""Seeded random generation of words in a regexp's language."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import Concat, Empty, KleeneStar, Null, RegExp, Singleton, Union, Word, children


@dataclass(frozen=True)
class GenConfig:
    seed: int = 1234
    max_star_reps: int = 10

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.max_star_reps < 1:
            raise ValueError(f"max_star_reps must be at least 1, got {self.max_star_reps}")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


class EmptyLanguageError(ValueError):
    """Raised when asked for a word of a regexp whose language is empty."""

    def __init__(self, r: RegExp):
        self.regexp = r
        super().__init__(f"the language of {r} is empty; no word can be generated")


def _emptiness(r: RegExp) -> dict[int, bool]:
    # Keyed by id() because the walk below only ever sees nodes of this tree.
    table: dict[int, bool] = {}

    def visit(node: RegExp) -> bool:
        key = id(node)
        if key in table:
            return table[key]
        for c in children(node):
            visit(c)
        if isinstance(node, Null):
            empty = True
        elif isinstance(node, Union):
            empty = table[id(node.r1)] and table[id(node.r2)]
        elif isinstance(node, Concat):
            empty = table[id(node.r1)] or table[id(node.r2)]
        else:
            empty = False
        table[key] = empty
        return empty

    visit(r)
    return table


def _generate(r: RegExp, empty: dict[int, bool], reps: int, rng: random.Random, out: list) -> None:
    if isinstance(r, Empty):
        return
    if isinstance(r, Singleton):
        out.append(r.a)
    elif isinstance(r, Union):
        options = [c for c in (r.r1, r.r2) if not empty[id(c)]]
        pick = options[0] if len(options) == 1 else options[rng.randrange(len(options))]
        _generate(pick, empty, reps, rng, out)
    elif isinstance(r, Concat):
        _generate(r.r1, empty, reps, rng, out)
        _generate(r.r2, empty, reps, rng, out)
    elif isinstance(r, KleeneStar):
        if empty[id(r.r1)]:
            return
        for _ in range(rng.randint(0, reps)):
            _generate(r.r1, empty, reps, rng, out)
    else:
        raise TypeError(f"not a generable regexp: {r!r}")


def gen_regexp_word(r: RegExp, cfg: GenConfig = GenConfig(), rng: Optional[random.Random] = None) -> Word:
    """Draw one word of ``L(r)``.

    Union picks uniformly among branches with a nonempty language; a star
    repeats its body a uniform ``0..cfg.max_star_reps`` times.  Pass the same
    *rng* across calls to continue one stream; without one a fresh stream
    seeded from ``cfg.seed`` is used.
    """
    empty = _emptiness(r)
    if empty[id(r)]:
        raise EmptyLanguageError(r)
    rng = rng if rng is not None else cfg.rng()
    out: list = []
    _generate(r, empty, cfg.max_star_reps, rng, out)
    return Word(out)


def gen_many(r: RegExp, n: int, cfg: GenConfig = GenConfig(), rng: Optional[random.Random] = None) -> list[Word]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    empty = _emptiness(r)
    if empty[id(r)]:
        raise EmptyLanguageError(r)
    rng = rng if rng is not None else cfg.rng()
    words = []
    for _ in range(n):
        out: list = []
        _generate(r, empty, cfg.max_star_reps, rng, out)
        words.append(Word(out))
    return words
