"""Closed-form intersection counts and upper bounds on unique-decoding probability.

All results are exact: integers or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from .balls import insertion_ball_size


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")


def min_intersection(n1: int, n2: int, t1: int, t2: int, q: int) -> int:
    """Smallest |I_t1(X) ∩ I_t2(Y)| over X in F_q^n1, Y in F_q^n2.

    Attained by 0_n1 against 1_n2, and by every pair at indel distance n1 + n2.
    """
    if min(n1, n2, t1, t2) < 0:
        raise ValueError("lengths and radii must be nonnegative")
    if n1 + t1 != n2 + t2:
        raise ValueError(f"n1+t1={n1 + t1} differs from n2+t2={n2 + t2}")
    _check_q(q)
    N = n2 + t2
    return sum(
        sum(binom(k, i) * (q - 2) ** i for i in range(k - n1 + 1)) * binom(N, k)
        for k in range(n1, t2 + 1)
    )


def maxdist_pair_intersection(n1: int, n2: int, t1: int, t2: int, q: int, q_b: int) -> int:
    """|I_t1(X) ∩ I_t2(Y)| when Y uses a sub-alphabet of size ``q_b`` and X the rest."""
    if n1 + t1 != n2 + t2:
        raise ValueError(f"n1+t1={n1 + t1} differs from n2+t2={n2 + t2}")
    if min(n1, n2, t1, t2) < 0:
        raise ValueError("lengths and radii must be nonnegative")
    _check_q(q)
    if not 1 <= q_b <= q - 1:
        raise ValueError(f"sub-alphabet size q_b={q_b} outside 1..{q - 1}")
    N = n1 + t1
    return sum(
        insertion_ball_size(n1, k, q - q_b)
        * insertion_ball_size(n2, N - k - n1 - n2, q_b)
        * binom(N, t1 - k)
        for k in range(N - n1 - n2 + 1)
    )


def bound_usc(n: int, q: int, t: int) -> Fraction:
    """Tight upper bound on f for the uniform t-supersequence channel."""
    _check_nqt(n, q, t)
    return 1 - Fraction(min_intersection(n, n, t, t, q), insertion_ball_size(n, t, q))


def insertion_history_count(n: int, q: int, t: int) -> int:
    """Number of t-insertion histories of a length-n word: q^t (n+1)...(n+t)."""
    return q ** t * prod(range(n + 1, n + t + 1))


def count_histories_covering(n: int, q: int, t: int) -> int:
    """Histories of X whose output lies in I_t(Y), for d_L(X, Y) = 2n.

    For other distinct pairs of length n this is a lower bound.  Zero when t < n.
    """
    _check_nqt(n, q, t)
    if t < n:
        return 0
    return insertion_ball_size(n, t - n, q) * prod(range(n + 1, n + t + 1))


def bound_uic(n: int, q: int, t: int) -> Fraction:
    """Tight upper bound on f for the uniform t-insertion channel."""
    _check_nqt(n, q, t)
    lo = max(0, t - n + 1)
    return Fraction(sum(binom(t, i) * (q - 1) ** i for i in range(lo, t + 1)), q ** t)


def deletion_history_count(n: int, t: int) -> int:
    """n!/(n-t)!"""
    return prod(range(n - t + 1, n + 1))


def _shared_deletion_histories(n: int, t: int, d: int) -> int:
    # histories that delete a fixed set of d positions among t deletions
    return (factorial(d) * factorial(t - d) * binom(t, d) * binom(n - d, t - d))


def bound_udc(n: int, q: int, t: int, d: int) -> Fraction:
    """Tight bound on f for the uniform t-deletion channel given a codeword at distance 2d.

    The value does not depend on ``q``.
    """
    _check_q(q)
    if not 1 <= d <= n:
        raise ValueError(f"d={d} outside 1..n={n}")
    if not 1 <= t <= n:
        raise ValueError(f"t={t} outside 1..n={n}")
    if t < d:
        return Fraction(1)
    return 1 - Fraction(_shared_deletion_histories(n, t, d), deletion_history_count(n, t))


def weight_bound_uic_0n1n(n: int, t: int, w: int) -> Fraction:
    """UIC bound for a weight-w codeword of a binary code containing 0_n and 1_n."""
    if not 1 <= w <= n - 1:
        raise ValueError(f"weight w={w} outside 1..{n - 1}")
    if not 1 <= t <= n - 1:
        raise ValueError(f"t={t} outside 1..{n - 1}")
    into_ones = sum(binom(t, i) for i in range(n - w, t + 1))
    into_zeros = sum(binom(t, i) for i in range(w, t + 1))
    return 1 - Fraction(into_ones + into_zeros, 2 ** t)


def weight_bound_uic_0n(n: int, q: int, t: int, w: int) -> Fraction:
    """UIC bound for a codeword of Hamming weight w in a code containing 0_n."""
    _check_q(q)
    if w < 1:
        raise ValueError(f"weight w={w} must be >= 1")
    if t < 0:
        raise ValueError(f"negative t={t}")
    if w > n:
        raise ValueError(f"weight w={w} exceeds n={n}")
    return Fraction(sum(binom(t, i) * (q - 1) ** (t - i) for i in range(min(w, t + 1))), q ** t)


def _a_term(x: int, n: int, t: int) -> Fraction:
    # fraction of histories deleting a fixed set of x positions; zero until t >= x
    if t < x:
        return Fraction(0)
    return Fraction(_shared_deletion_histories(n, t, x), deletion_history_count(n, t))


def weight_bound_udc_0n1n(n: int, t: int, w: int) -> Fraction:
    """UDC bound for a weight-w codeword of a binary code containing 0_n and 1_n."""
    if not 1 <= w <= n - 1:
        raise ValueError(f"weight w={w} outside 1..{n - 1}")
    if not 1 <= t <= n:
        raise ValueError(f"t={t} outside 1..{n}")
    if t == n:
        return Fraction(0)
    # outputs all zeros: every one deleted; all ones: every zero deleted
    return 1 - _a_term(w, n, t) - _a_term(n - w, n, t)


def _check_nqt(n: int, q: int, t: int) -> None:
    _check_q(q)
    if n < 1:
        raise ValueError(f"n={n} must be >= 1")
    if t < 0:
        raise ValueError(f"t={t} must be >= 0")
