"""Unique-decoding probabilities for the four insertion/deletion channels.

USC_t outputs each distinct t-supersequence with equal probability, UIC_t each
t-insertion history; UBC_t and UDC_t are the deletion counterparts.  Exact
values come from enumeration.  UIC/UDC histories are aggregated level by level
(intermediate word -> number of histories reaching it) which gives the same
counts as listing every history but scales much better.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .balls import subsequences, supersequences
from .bounds import deletion_history_count, insertion_history_count
from .words import Code, Word, _is_subseq


class Channel(enum.Enum):
    USC = "usc"
    UIC = "uic"
    UDC = "udc"
    UBC = "ubc"

    @property
    def deletes(self) -> bool:
        return self in (Channel.UDC, Channel.UBC)


@dataclass(frozen=True)
class ChannelKind:
    channel: Channel
    t: int

    def __post_init__(self):
        if isinstance(self.channel, str):
            object.__setattr__(self, "channel", Channel(self.channel.lower()))
        if self.t < 0:
            raise ValueError(f"negative t={self.t}")

    def __str__(self) -> str:
        return f"{self.channel.name}_{self.t}"


class ChannelDomainError(ValueError):
    """Channel parameters incompatible with the code (e.g. t > n for deletions)."""


@dataclass(frozen=True)
class DecodingReport:
    kind: ChannelKind
    counts: dict[Word, tuple[int, int]]

    @property
    def per_codeword(self) -> dict[Word, Fraction]:
        return {c: Fraction(a, b) for c, (a, b) in self.counts.items()}

    @property
    def W(self) -> Fraction:
        return min(self.per_codeword.values())

    @property
    def U(self) -> Fraction:
        vals = self.per_codeword.values()
        return sum(vals, Fraction(0)) / len(vals)


def _unique_to(others: list[Word], *, deletions: bool):
    """Memoized test: is a received word explained by none of ``others``?"""
    other_syms = [c.symbols for c in others]
    cache: dict[tuple[int, ...], bool] = {}

    def unique(s: tuple[int, ...]) -> bool:
        hit = cache.get(s)
        if hit is None:
            if deletions:
                hit = not any(_is_subseq(s, o) for o in other_syms)
            else:
                hit = not any(_is_subseq(o, s) for o in other_syms)
            cache[s] = hit
        return hit

    return unique


def _check_deletion_radius(c: Word, t: int) -> None:
    if t > len(c):
        raise ChannelDomainError(f"t={t} deletions exceed codeword length {len(c)}")
    if t < 0:
        raise ValueError(f"negative t={t}")


def usc_counts(c: Word, code: Code, t: int) -> tuple[int, int]:
    unique = _unique_to(code.others(c), deletions=False)
    ball = supersequences(c.symbols, t, c.q)
    return sum(1 for s in ball if unique(s)), len(ball)


def insertion_history_multiplicities(c: Word, t: int) -> Counter:
    """Received word -> number of t-insertion histories of ``c`` producing it."""
    level = Counter({c.symbols: 1})
    for _ in range(t):
        nxt: Counter = Counter()
        for w, m in level.items():
            for p in range(len(w) + 1):
                head, tail = w[:p], w[p:]
                for a in range(c.q):
                    nxt[head + (a,) + tail] += m
        level = nxt
    return level


def deletion_history_multiplicities(c: Word, t: int) -> Counter:
    """Received word -> number of t-deletion histories of ``c`` producing it."""
    _check_deletion_radius(c, t)
    level = Counter({c.symbols: 1})
    for _ in range(t):
        nxt: Counter = Counter()
        for w, m in level.items():
            for i in range(len(w)):
                nxt[w[:i] + w[i + 1:]] += m
        level = nxt
    return level


def uic_counts(c: Word, code: Code, t: int) -> tuple[int, int]:
    unique = _unique_to(code.others(c), deletions=False)
    mult = insertion_history_multiplicities(c, t)
    total = insertion_history_count(len(c), c.q, t)
    assert sum(mult.values()) == total
    return sum(m for s, m in mult.items() if unique(s)), total


def udc_counts(c: Word, code: Code, t: int) -> tuple[int, int]:
    unique = _unique_to(code.others(c), deletions=True)
    mult = deletion_history_multiplicities(c, t)
    total = deletion_history_count(len(c), t)
    assert sum(mult.values()) == total
    return sum(m for s, m in mult.items() if unique(s)), total


def ubc_counts(c: Word, code: Code, t: int) -> tuple[int, int]:
    _check_deletion_radius(c, t)
    unique = _unique_to(code.others(c), deletions=True)
    ball = subsequences(c.symbols, t)
    return sum(1 for s in ball if unique(s)), len(ball)


_COUNTERS = {
    Channel.USC: usc_counts,
    Channel.UIC: uic_counts,
    Channel.UDC: udc_counts,
    Channel.UBC: ubc_counts,
}


def f_usc(c: Word, code: Code, t: int) -> Fraction:
    return Fraction(*usc_counts(c, code, t))


def f_uic(c: Word, code: Code, t: int) -> Fraction:
    return Fraction(*uic_counts(c, code, t))


def f_udc(c: Word, code: Code, t: int) -> Fraction:
    return Fraction(*udc_counts(c, code, t))


def f_ubc(c: Word, code: Code, t: int) -> Fraction:
    return Fraction(*ubc_counts(c, code, t))


def unique_decoding_probability(c: Word, code: Code, kind: ChannelKind) -> Fraction:
    return Fraction(*_COUNTERS[kind.channel](c, code, kind.t))


def report(code: Code, kind: ChannelKind) -> DecodingReport:
    if kind.channel.deletes and kind.t > code.n:
        raise ChannelDomainError(f"{kind} needs t <= n={code.n}")
    counter = _COUNTERS[kind.channel]
    return DecodingReport(kind, {c: counter(c, code, kind.t) for c in code})


def _sample_insertions(rng: np.random.Generator, c: Word, t: int, trials: int) -> np.ndarray:
    words = np.tile(np.asarray(c.symbols, dtype=np.int64), (trials, 1))
    rows = np.arange(trials)[:, None]
    for _ in range(t):
        length = words.shape[1]
        pos = rng.integers(0, length + 1, size=trials)[:, None]
        sym = rng.integers(0, c.q, size=trials)[:, None]
        if length == 0:
            words = sym
            continue
        idx = np.arange(length + 1)[None, :]
        src = np.minimum(idx - (idx > pos), length - 1)
        words = np.where(idx == pos, sym, words[rows, src])
    return words


def _sample_deletions(rng: np.random.Generator, c: Word, t: int, trials: int) -> np.ndarray:
    words = np.tile(np.asarray(c.symbols, dtype=np.int64), (trials, 1))
    rows = np.arange(trials)[:, None]
    for _ in range(t):
        length = words.shape[1]
        pos = rng.integers(0, length, size=trials)[:, None]
        idx = np.arange(length - 1)[None, :]
        words = words[rows, idx + (idx >= pos)]
    return words


def monte_carlo_counts(c: Word, code: Code, kind: ChannelKind, trials: int,
                       rng: np.random.Generator) -> tuple[int, int]:
    if trials < 1:
        raise ValueError(f"trials={trials} must be >= 1")
    if kind.channel is Channel.UIC:
        samples = _sample_insertions(rng, c, kind.t, trials)
    elif kind.channel is Channel.UDC:
        _check_deletion_radius(c, kind.t)
        samples = _sample_deletions(rng, c, kind.t, trials)
    else:
        raise ValueError(f"Monte Carlo only supports UIC and UDC, not {kind.channel.name}")
    unique = _unique_to(code.others(c), deletions=kind.channel.deletes)
    if samples.shape[1] == 0:
        return (trials if unique(()) else 0), trials
    distinct, freq = np.unique(samples, axis=0, return_counts=True)
    hits = sum(int(m) for row, m in zip(distinct.tolist(), freq) if unique(tuple(row)))
    return hits, trials


def monte_carlo_f(c: Word, code: Code, kind: ChannelKind, trials: int, seed: int) -> Fraction:
    """Estimate f by sampling histories uniformly step by step; deterministic per seed."""
    rng = np.random.default_rng(seed)
    return Fraction(*monte_carlo_counts(c, code, kind, trials, rng))


def monte_carlo_report(code: Code, kind: ChannelKind, trials: int, seed: int) -> DecodingReport:
    """Per-codeword estimates, each from its own substream of ``seed``."""
    streams = np.random.SeedSequence(seed).spawn(len(code))
    return DecodingReport(kind, {
        c: monte_carlo_counts(c, code, kind, trials, np.random.default_rng(ss))
        for c, ss in zip(code, streams)
    })


def rightmost_run_length(c: Word) -> int:
    if not len(c):
        return 0
    last, k = c[-1], 0
    for s in reversed(c.symbols):
        if s != last:
            break
        k += 1
    return k


def has_unique_supersequence_witness(code: Code, t: int) -> Word:
    """A codeword whose last symbol repeated t more times is a unique t-supersequence.

    Any codeword with the longest rightmost run works; the lexicographically
    smallest is returned.
    """
    if len(code) == 1:
        return code.words[0]
    longest = max(rightmost_run_length(c) for c in code)
    witness = min(c for c in code if rightmost_run_length(c) == longest)
    s = witness_supersequence(witness, t)
    if any(_is_subseq(o.symbols, s.symbols) for o in code.others(witness)):
        raise AssertionError(f"{s} is not unique to {witness}")
    return witness


def witness_supersequence(c: Word, t: int) -> Word:
    if not len(c):
        raise ValueError("the empty word has no last symbol to repeat")
    return Word(c.symbols + (c[-1],) * t, c.q)
