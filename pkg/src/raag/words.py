"""Canonical forms for traces and group elements, and desk-scale enumeration.

A *trace* is an equivalence class of positive words over the vertex set,
two words being identified when they differ by swaps of adjacent commuting
letters (move M3).  We store the lexicographically least representative
under the graph's vertex order; it is computed greedily by repeatedly
pulling the least front-movable letter to the front.

A group element is stored as a syllable sequence (generator, nonzero
exponent), reduced so that the syllable count is minimal (moves M1/M2/M3)
and lexicographically least among its M3-equivalents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from raag.errors import ResourceLimitError, UnknownGeneratorError, check_states
from raag.graph import Graph

Trace = tuple[str, ...]


def canonicalize_trace(letters: Iterable[str], g: Graph) -> Trace:
    """Lexicographically least word reachable by commuting adjacent swaps.

    Greedy fact about trace monoids: the first letter of the least
    representative is the least letter whose whole prefix commutes with it,
    and the tail is the least representative of what remains.
    """
    word = list(letters)
    for v in word:
        g.index(v)  # raises UnknownGeneratorError
    out: list[str] = []
    while word:
        best = None
        best_pos = -1
        for i, v in enumerate(word):
            if all(g.adjacent(u, v) for u in word[:i]):
                if best is None or g.index(v) < g.index(best):
                    best, best_pos = v, i
        out.append(word.pop(best_pos))  # type: ignore[arg-type]
    return tuple(out)


@dataclass(frozen=True)
class Syllable:
    generator: str
    exponent: int

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("syllable exponent must be nonzero")


@dataclass(frozen=True)
class GroupWord:
    """Canonical syllable sequence; build through :func:`reduce_word`."""

    syllables: tuple[Syllable, ...]

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = GroupWord(())


def _push(word: list[Syllable], gen: str, exp: int, g: Graph) -> bool:
    """Append gen^exp to a reduced word, merging through commuting tails.

    Returns True if a merge cancelled to zero (caller must rebuild, since
    the deletion may expose further merges across the gap).
    """
    if exp == 0:
        return False
    i = len(word) - 1
    while i >= 0:
        s = word[i]
        if s.generator == gen:
            merged = s.exponent + exp
            if merged == 0:
                del word[i]
                return True
            word[i] = Syllable(gen, merged)
            return False
        if not g.adjacent(s.generator, gen):
            break
        i -= 1
    word.append(Syllable(gen, exp))
    return False


def _lex_min_syllables(word: list[Syllable], g: Graph) -> tuple[Syllable, ...]:
    # Same greedy normal form as for traces, acting on whole syllables;
    # two syllables commute exactly when their generators are adjacent.
    out: list[Syllable] = []
    rest = list(word)
    while rest:
        best = None
        best_pos = -1
        for i, s in enumerate(rest):
            if all(g.adjacent(t.generator, s.generator) for t in rest[:i]):
                if best is None or g.index(s.generator) < g.index(best.generator):
                    best, best_pos = s, i
        out.append(rest.pop(best_pos))
    return tuple(out)


def reduce_word(syllables: Iterable[Syllable | tuple[str, int]], g: Graph) -> GroupWord:
    """Canonical form: moves M1/M2/M3 to minimal syllable count, then the
    lexicographically least M3-representative.  Idempotent."""
    pending: list[tuple[str, int]] = []
    for s in syllables:
        gen, exp = (s.generator, s.exponent) if isinstance(s, Syllable) else s
        g.index(gen)
        pending.append((gen, exp))
    word: list[Syllable] = []
    idx = 0
    while idx < len(pending):
        gen, exp = pending[idx]
        idx += 1
        if _push(word, gen, exp, g):
            # a syllable vanished: replay the current word, then the rest
            pending = [(s.generator, s.exponent) for s in word] + pending[idx:]
            word = []
            idx = 0
    return GroupWord(_lex_min_syllables(word, g))


def multiply(u: GroupWord, v: GroupWord, g: Graph) -> GroupWord:
    return reduce_word(u.syllables + v.syllables, g)


def invert(u: GroupWord, g: Graph) -> GroupWord:
    return reduce_word(
        [Syllable(s.generator, -s.exponent) for s in reversed(u.syllables)], g
    )


def word_length(u: GroupWord) -> int:
    return sum(abs(s.exponent) for s in u.syllables)


_TOKEN = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


def parse_word(text: str, g: Graph) -> GroupWord:
    """Parse whitespace-separated `gen^exp` tokens (exponent defaults to 1)."""
    if text.strip() == "1":
        return IDENTITY
    sylls: list[tuple[str, int]] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad token {tok!r}")
        gen, exp = m.group(1), int(m.group(2) or 1)
        if gen not in g:
            raise UnknownGeneratorError(f"unknown generator {gen!r}")
        sylls.append((gen, exp))
    return reduce_word(sylls, g)


def format_word(u: GroupWord) -> str:
    if not u.syllables:
        return "1"
    return " ".join(
        s.generator if s.exponent == 1 else f"{s.generator}^{s.exponent}"
        for s in u.syllables
    )


def enumerate_traces(g: Graph, n: int) -> list[Trace]:
    """All canonical traces of length exactly n, sorted by vertex order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    layer: set[Trace] = {()}
    for _ in range(n):
        nxt: set[Trace] = set()
        for t in layer:
            for v in g.vertices:
                nxt.add(canonicalize_trace(t + (v,), g))
            check_states(len(nxt), "enumerate_traces")
        layer = nxt
    return sorted(layer, key=lambda t: tuple(g.index(v) for v in t))


def ball(g: Graph, r: int) -> list[GroupWord]:
    """All group elements of word length <= r, by breadth-first search with
    canonical-form dedup; sorted by (length, canonical syllables)."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    seen: dict[GroupWord, int] = {IDENTITY: 0}
    frontier = [IDENTITY]
    for dist in range(1, r + 1):
        nxt: list[GroupWord] = []
        for u in frontier:
            for v in g.vertices:
                for e in (1, -1):
                    w = reduce_word(list(u.syllables) + [(v, e)], g)
                    if word_length(w) == dist and w not in seen:
                        seen[w] = dist
                        nxt.append(w)
            check_states(len(seen), "ball")
        frontier = nxt
    def key(u: GroupWord):
        return (
            word_length(u),
            tuple((g.index(s.generator), s.exponent) for s in u.syllables),
        )
    return sorted(seen, key=key)


def sphere_sizes(g: Graph, r: int) -> list[int]:
    """Number of elements of word length exactly 0..r."""
    counts = [0] * (r + 1)
    for u in ball(g, r):
        counts[word_length(u)] += 1
    return counts


def substitute_word(u: GroupWord, vertex_map, target: Graph) -> GroupWord:
    """Image of u under the homomorphism induced by a graph morphism."""
    return reduce_word(
        [(vertex_map[s.generator], s.exponent) for s in u.syllables], target
    )
