"""Bounded brute-force comparison of two behaviors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .automata import WordPair
from .errors import IncompatibleSemantics, SemiringMismatch
from .semantics import behavior, compatible_tags, Semantics

DEFAULT_MAX_LEN = 4
PAIR_LIMIT = 10**6


@dataclass(frozen=True)
class Divergence:
    pair: WordPair
    left: object
    right: object

    def __str__(self) -> str:
        return f"{self.pair}: {self.left} != {self.right}"


@dataclass(frozen=True)
class EquivVerdict:
    equal: bool
    max_len: int
    checked: int
    failures: int = 0
    first_divergence: Divergence | None = None

    def __bool__(self) -> bool:
        return self.equal


def count_word_pairs(n_inputs: int, n_outputs: int, max_len: int) -> int:
    k = n_inputs * n_outputs
    return sum(k**n for n in range(max_len + 1))


def enumerate_word_pairs(X: Sequence, Y: Sequence, max_len: int) -> Iterator[WordPair]:
    """All (u, v) with |u| = |v| <= max_len, by length, then lexicographically.

    Letters are ordered as pairs (x, y) in declaration order, x first.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    letters = [(x, y) for x in X for y in Y]
    for n in range(max_len + 1):
        for word in itertools.product(letters, repeat=n):
            yield WordPair(tuple(x for x, _ in word), tuple(y for _, y in word))


def check_equiv(a1, tag1, a2, tag2, max_len: int = DEFAULT_MAX_LEN) -> EquivVerdict:
    """Compare two behaviors on every word pair up to ``max_len``."""
    if a1.semiring is not a2.semiring:
        raise SemiringMismatch(f"{a1.semiring.name} vs {a2.semiring.name}")
    if a1.inputs != a2.inputs or a1.outputs != a2.outputs:
        raise ValueError("automata have different input or output alphabets")
    for a, tag in ((a1, tag1), (a2, tag2)):
        try:
            ok = Semantics(tag) in compatible_tags(a)
        except ValueError:
            ok = False
        if not ok:
            raise IncompatibleSemantics(f"semantics {tag} does not apply to a {a.kind} automaton")
    n_pairs = count_word_pairs(len(a1.inputs), len(a1.outputs), max_len)
    if n_pairs > PAIR_LIMIT:
        raise ValueError(f"{n_pairs} word pairs exceed the limit of {PAIR_LIMIT}")

    eq = a1.semiring.eq
    first = None
    failures = 0
    for w in enumerate_word_pairs(a1.inputs, a1.outputs, max_len):
        left, right = behavior(a1, tag1, w), behavior(a2, tag2, w)
        if not eq(left, right):
            failures += 1
            if first is None:
                first = Divergence(w, left, right)
    return EquivVerdict(first is None, max_len, n_pairs, failures, first)
