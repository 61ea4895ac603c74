"""Insertion and deletion balls: enumeration, sizes and intersection counts."""

from __future__ import annotations

import sys
from functools import lru_cache
from math import comb
from typing import Sequence

from .words import Word, _check_same_alphabet, _is_subseq


def insertion_ball_size(n: int, t: int, q: int) -> int:
    """|I_t(x)| for any length-n word x over q symbols.

    ``q == 1`` is accepted (the value is then 1).
    """
    if n < 0 or t < 0 or q < 1:
        raise ValueError(f"need n, t >= 0 and q >= 1, got n={n} t={t} q={q}")
    return sum(comb(n + t, i) * (q - 1) ** i for i in range(t + 1))


@lru_cache(maxsize=4096)
def supersequences(x: tuple[int, ...], t: int, q: int) -> frozenset[tuple[int, ...]]:
    """I_t(x) on raw symbol tuples."""
    level = {x}
    for _ in range(t):
        nxt = set()
        for w in level:
            for p in range(len(w) + 1):
                head, tail = w[:p], w[p:]
                for a in range(q):
                    # inserting a directly before an equal symbol duplicates
                    # the insertion right after it
                    if tail and tail[0] == a:
                        continue
                    nxt.add(head + (a,) + tail)
        level = nxt
    return frozenset(level)


@lru_cache(maxsize=4096)
def subsequences(x: tuple[int, ...], t: int) -> frozenset[tuple[int, ...]]:
    """D_t(x) on raw symbol tuples."""
    if not 0 <= t <= len(x):
        raise ValueError(f"deletion radius {t} outside 0..{len(x)}")
    level = {x}
    for _ in range(t):
        level = {w[:i] + w[i + 1:] for w in level for i in range(len(w))}
    return frozenset(level)


def enumerate_insertion_ball(x: Word, t: int) -> set[Word]:
    if t < 0:
        raise ValueError(f"negative radius {t}")
    return {Word(s, x.q) for s in supersequences(x.symbols, t, x.q)}


def enumerate_deletion_ball(x: Word, t: int) -> set[Word]:
    return {Word(s, x.q) for s in subsequences(x.symbols, t)}


def _check_lengths(x: Word, t1: int, y: Word, t2: int) -> None:
    _check_same_alphabet(x, y)
    if len(x) + t1 != len(y) + t2:
        raise ValueError(
            f"ball output lengths differ: |x|+t1={len(x) + t1}, |y|+t2={len(y) + t2}")


def intersection_bruteforce(x: Word, t1: int, y: Word, t2: int) -> int:
    """|I_t1(x) ∩ I_t2(y)| by enumerating both balls."""
    _check_lengths(x, t1, y, t2)
    if t1 < 0 or t2 < 0:
        raise ValueError("negative radius")
    a = supersequences(x.symbols, t1, x.q)
    b = supersequences(y.symbols, t2, y.q)
    return len(a & b)


def intersection_recursive(x: Word, t1: int, y: Word, t2: int) -> int:
    """|I_t1(x) ∩ I_t2(y)| by first-symbol recursion.

    Splits on the first symbol of a common supersequence: if it matches the
    leading symbol of x (resp. y) that symbol is consumed greedily, otherwise
    it counts as an inserted symbol.
    """
    _check_lengths(x, t1, y, t2)
    return _intersection_count(x.symbols, t1, y.symbols, t2, x.q)


def _intersection_count(xs: Sequence[int], t1: int, ys: Sequence[int], t2: int, q: int) -> int:
    lx, ly = len(xs), len(ys)
    memo: dict[tuple[int, int, int, int], int] = {}

    def count(i: int, j: int, k: int, t: int) -> int:
        if k < 0 or t < 0:
            return 0
        if i == lx:
            return insertion_ball_size(ly - j, t, q)
        if j == ly:
            return insertion_ball_size(lx - i, k, q)
        if k == 0:
            return int(_is_subseq(ys[j:], xs[i:]))
        if t == 0:
            return int(_is_subseq(xs[i:], ys[j:]))
        key = (i, j, k, t)
        if key in memo:
            return memo[key]
        if xs[i] == ys[j]:
            val = count(i + 1, j + 1, k, t) + (q - 1) * count(i, j, k - 1, t - 1)
        else:
            val = count(i + 1, j, k, t - 1) + count(i, j + 1, k - 1, t)
            if q > 2:
                val += (q - 2) * count(i, j, k - 1, t - 1)
        memo[key] = val
        return val

    depth = lx + ly + t1 + t2 + 100
    if depth > sys.getrecursionlimit():
        sys.setrecursionlimit(depth)
    return count(0, 0, t1, t2)
