import math
import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from indelprob.balls import (enumerate_deletion_ball, intersection_bruteforce,
                             intersection_recursive)
from indelprob.bounds import (bound_udc, bound_uic, bound_usc, maxdist_pair_intersection,
                              min_intersection, weight_bound_udc_0n1n, weight_bound_uic_0n,
                              weight_bound_uic_0n1n)
from indelprob.channels import (ChannelKind, f_ubc, f_udc, f_uic, f_usc,
                                has_unique_supersequence_witness, monte_carlo_f, report,
                                witness_supersequence)
from indelprob.vt import (VTParams, decode_one_deletion, decode_one_insertion,
                          decode_two_insertions_scan, vt_code)
from indelprob.words import Code, Word, indel_distance, is_subsequence

from oracles import all_words, contains

pytestmark = pytest.mark.acceptance

def zeros(n, q=2):
    return Word.constant(0, n, q)


def ones(n, q=2):
    return Word.constant(1, n, q)


def test_criterion_01_min_intersection_closed_form():
    for q in (2, 3, 4):
        for n1, n2, t1 in product(range(5), repeat=3):
            t2 = n1 + t1 - n2
            if 0 <= t2 <= 4:
                got = intersection_bruteforce(zeros(n1, q), t1, ones(n2, q), t2)
                assert min_intersection(n1, n2, t1, t2, q) == got, (q, n1, n2, t1, t2)


def test_criterion_02_minimality_over_all_pairs():
    for q in (2, 3):
        for n in range(1, 5):
            words = all_words(n, q)
            for t in range(5):
                target = min_intersection(n, n, t, t, q)
                best = None
                for i, x in enumerate(words):
                    for y in words[i:]:
                        k = intersection_bruteforce(x, t, y, t)
                        best = k if best is None else min(best, k)
                        if indel_distance(x, y) == 2 * n:
                            assert k == target, (q, x, y, t)
                assert best == target, (q, n, t)


def test_criterion_03_recursion_matches_bruteforce():
    for q in (2, 3):
        words = [w for n in range(5) for w in all_words(n, q)]
        for x in words:
            for y in words:
                for t1 in range(4):
                    t2 = len(x) + t1 - len(y)
                    if 0 <= t2 <= 3:
                        assert intersection_recursive(x, t1, y, t2) == \
                            intersection_bruteforce(x, t1, y, t2), (x, t1, y, t2)


def test_criterion_04_maxdist_pair_formula():
    for n1, n2, t1 in product(range(5), repeat=3):
        t2 = n1 + t1 - n2
        if 0 <= t2 <= 4:
            assert maxdist_pair_intersection(n1, n2, t1, t2, 2, 1) == \
                min_intersection(n1, n2, t1, t2, 2)
    q = 4
    for qb in (1, 2, 3):
        for B in combinations(range(q), qb):
            rest = [a for a in range(q) if a not in B]
            for n1, n2, t1 in product(range(4), repeat=3):
                t2 = n1 + t1 - n2
                if not 0 <= t2 <= 3:
                    continue
                expect = maxdist_pair_intersection(n1, n2, t1, t2, q, qb)
                for xs in product(rest, repeat=n1):
                    for ys in product(B, repeat=n2):
                        got = intersection_bruteforce(Word(xs, q), t1, Word(ys, q), t2)
                        assert got == expect, (B, xs, ys, t1, t2)


def test_criterion_05_bounds_are_attained():
    for n in range(1, 5):
        code = Code([zeros(n), ones(n)])
        for t in range(5):
            assert f_usc(zeros(n), code, t) == bound_usc(n, 2, t)
            assert f_uic(zeros(n), code, t) == bound_uic(n, 2, t)
    for n in range(1, 7):
        for d in range(1, n + 1):
            c = Word((1,) * d + (0,) * (n - d), 2)
            code = Code([c, zeros(n)])
            for t in range(d, n + 1):
                assert f_udc(c, code, t) == bound_udc(n, 2, t, d), (n, d, t)


def _random_binary_code(rng):
    n = rng.randint(1, 5)
    words = all_words(n, 2)
    m = rng.randint(2, min(6, len(words)))
    forced = []
    if n >= 2 and rng.random() < 0.4:
        forced = [zeros(n), ones(n)] if rng.random() < 0.6 else [zeros(n)]
    rest = [w for w in words if w not in forced]
    return Code(forced + rng.sample(rest, m - len(forced)))


def test_criterion_06_upper_bound_dominance():
    rng = random.Random(20240601)
    checked = 0
    for _ in range(100):
        code = _random_binary_code(rng)
        n = code.n
        has0, has1 = zeros(n) in code, ones(n) in code
        for c in code:
            w = c.weight
            dists = {indel_distance(c, o) // 2 for o in code.others(c)}
            for t in range(5):
                fu, fi = f_usc(c, code, t), f_uic(c, code, t)
                assert fu <= bound_usc(n, 2, t) and fi <= bound_uic(n, 2, t)
                if has0 and has1 and 1 <= w <= n - 1 and 1 <= t <= n - 1:
                    assert fi <= weight_bound_uic_0n1n(n, t, w)
                if has0 and w >= 1:
                    assert fi <= weight_bound_uic_0n(n, 2, t, w)
                if t <= n:
                    fd = f_udc(c, code, t)
                    assert f_ubc(c, code, t) <= 1
                    if t >= 1:
                        for d in dists:
                            assert fd <= bound_udc(n, 2, t, d)
                    if has0 and has1 and 1 <= w <= n - 1 and t >= 1:
                        assert fd <= weight_bound_udc_0n1n(n, t, w)
                checked += 1
    assert checked > 1000


def test_criterion_07_vt_suite():
    vt06 = vt_code(VTParams(6, 0))
    assert vt06.M == 10 and zeros(6) in vt06 and ones(6) in vt06
    for n in range(1, 9):
        for a in range(n + 1):
            p = VTParams(n, a)
            seen = set()
            for c in vt_code(p):
                dels = enumerate_deletion_ball(c, 1)
                assert not dels & seen
                seen |= dels
                for r in dels:
                    assert decode_one_deletion(p, r) == c
                for i in range(n + 1):
                    for b in (0, 1):
                        r = Word(c.symbols[:i] + (b,) + c.symbols[i:], 2)
                        assert decode_one_insertion(p, r) == c
    codewords = list(vt06)
    for r in all_words(8, 2):
        expect = tuple(sorted(c for c in codewords if contains(r.symbols, c.symbols)))
        assert decode_two_insertions_scan(VTParams(6, 0), r).candidates == expect


def test_criterion_08_vt_deletion_channels_and_witness():
    vt06 = vt_code(VTParams(6, 0))
    for ch in ("ubc", "udc"):
        rep = report(vt06, ChannelKind(ch, 2))
        assert rep.W == rep.U == 0
    for t in range(5):
        w = has_unique_supersequence_witness(vt06, t)
        s = witness_supersequence(w, t)
        assert len(s) == 6 + t and is_subsequence(w, s)
        assert not any(is_subsequence(o, s) for o in vt06.others(w))
        assert f_usc(w, vt06, t) > 0


def test_criterion_09_degeneration_at_t_n_minus_1():
    rng = random.Random(99)
    for n in (4, 5, 6):
        middle = [w for w in all_words(n, 2) if w not in (zeros(n), ones(n))]
        for _ in range(10):
            code = Code([zeros(n), ones(n), *rng.sample(middle, rng.randint(1, 4))])
            usc = report(code, ChannelKind("usc", n - 1))
            uic = report(code, ChannelKind("uic", n - 1))
            for c in code:
                if c not in (zeros(n), ones(n)):
                    assert usc.per_codeword[c] == uic.per_codeword[c] == 0
            assert usc.W == uic.W == 0
            assert usc.U <= Fraction(1, code.M)


def test_criterion_10_limit_trends():
    usc = [bound_usc(6, 2, t) for t in range(6, 41)]
    assert all(a >= b for a, b in zip(usc, usc[1:]))
    assert usc[-1] < Fraction(1, 20)
    uic = [bound_uic(n, 2, n + 1) for n in range(1, 61)]
    assert all(a <= b for a, b in zip(uic, uic[1:]))
    assert uic[-1] > Fraction(99, 100)
    udc = [bound_udc(n, 2, 3, 2) for n in range(3, 201)]
    assert all(a <= b for a, b in zip(udc, udc[1:]))
    assert udc[-1] > Fraction(999, 1000)


def test_criterion_11_four_codeword_code_trend():
    w_usc, w_uic = [], []
    for n in (4, 6, 8):
        h = n // 2
        code = Code([zeros(n), Word((0,) * h + (1,) * h, 2),
                     Word((1,) * h + (0,) * h, 2), ones(n)])
        w_usc.append(report(code, ChannelKind("usc", h)).W)
        w_uic.append(report(code, ChannelKind("uic", h)).W)
    assert w_usc == sorted(w_usc) and w_uic == sorted(w_uic)


@pytest.mark.parametrize("codewords, channel, t", [
    (["00", "11"], "uic", 2),
    (["10", "00"], "udc", 1),
])
def test_criterion_12_monte_carlo_consistency(codewords, channel, t):
    code = Code.from_strings(codewords)
    c = Word.from_str(codewords[0])
    kind = ChannelKind(channel, t)
    exact = {"uic": f_uic, "udc": f_udc}[channel](c, code, t)
    trials = 10 ** 5
    sigma = math.sqrt(exact * (1 - exact) / trials)
    tol = 3 * sigma + 1 / trials
    good = sum(abs(float(monte_carlo_f(c, code, kind, trials, seed) - exact)) <= tol
               for seed in range(100))
    assert good >= 95, good
