from itertools import combinations, permutations, product

import pytest
from hypothesis import given, strategies as st

from indelprob.words import (AlphabetMismatch, Code, CodeFileError, Word,
                             apply_deletion_history, apply_deletion_pattern,
                             apply_insertion_history, format_code, history_to_pattern,
                             indel_distance, is_subsequence, parse_code, pattern_to_history, runs)

from oracles import all_deletion_histories, all_words, contains, indel_distance_bfs

W = Word.from_str


def test_word_validation():
    with pytest.raises(ValueError):
        Word((0, 2), q=2)
    with pytest.raises(ValueError):
        Word((0,), q=1)
    assert len(Word((), 2)) == 0
    assert str(Word.constant(1, 3)) == "111"


def test_indel_distance_examples():
    assert indel_distance(Word.constant(0, 3), Word.constant(0, 3)) == 0
    assert indel_distance(Word.constant(0, 3), Word.constant(1, 3)) == 6
    assert indel_distance(W("001100"), W("0100")) == 2
    assert indel_distance_bfs(W("001100"), W("0100"), 2) == 2


def test_indel_distance_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        indel_distance(W("01"), W("01", 3))


def test_indel_distance_matches_bfs():
    words = [w for n in range(4) for w in all_words(n, 2)]
    for x in words:
        for y in words:
            assert indel_distance(x, y) == indel_distance_bfs(x, y, 2), (x, y)


def test_indel_distance_is_metric():
    words = [w for n in range(5) for w in all_words(n, 2)]
    d = {(x, y): indel_distance(x, y) for x in words for y in words}
    for x in words:
        for y in words:
            assert d[x, y] == d[y, x]
            assert (d[x, y] == 0) == (x == y)
            if len(x) == len(y):
                assert d[x, y] % 2 == 0
    small = [w for w in words if len(w) <= 3]
    for x, y, z in product(small, repeat=3):
        assert d[x, z] <= d[x, y] + d[y, z]


def test_runs():
    assert runs(W("001100")) == [(0, 2), (1, 2), (0, 2)]
    assert runs(Word.constant(0, 4)) == [(0, 4)]
    assert runs(Word((), 2)) == []


@pytest.mark.parametrize("q", [2, 3])
def test_single_deletion_count_is_run_count(q):
    for n in range(9 if q == 2 else 7):
        for x in all_words(n, q):
            d1 = {x.symbols[:i] + x.symbols[i + 1:] for i in range(n)}
            assert len(d1) == len(runs(x))


def test_is_subsequence():
    assert is_subsequence(W("01"), W("0011"))
    assert not is_subsequence(W("10"), W("0011"))
    assert is_subsequence(W("0100"), W("001100"))
    assert contains(W("001100").symbols, W("0100").symbols)


def test_is_subsequence_matches_exhaustive_deletions():
    for n in range(6):
        for y in all_words(n, 2):
            subs = {tuple(y[i] for i in keep) for k in range(n + 1)
                    for keep in combinations(range(n), k)}
            for m in range(n + 1):
                for x in all_words(m, 2):
                    assert is_subsequence(x, y) == (x.symbols in subs)


def test_insertion_history():
    assert apply_insertion_history(W("00"), [(0, 1), (0, 0)]) == W("0100")
    assert apply_insertion_history(W("0101"), []) == W("0101")
    assert apply_insertion_history(W("0"), [(1, 1)]) == W("01")
    with pytest.raises(ValueError):
        apply_insertion_history(W("0"), [(2, 1)])
    with pytest.raises(ValueError):
        apply_insertion_history(W("0"), [(0, 2)])


def test_deletion_history():
    assert apply_deletion_history(W("001100"), [0, 1]) == W("0100")
    assert apply_deletion_history(W("01"), [0, 0]) == Word((), 2)
    assert apply_deletion_history(W("011"), []) == W("011")
    with pytest.raises(ValueError):
        apply_deletion_history(W("01"), [1, 1])


def test_history_to_pattern_example():
    assert history_to_pattern(6, [0, 1]) == (0, 2)
    c = W("001100")
    assert apply_deletion_pattern(c, (0, 2)) == apply_deletion_history(c, [0, 1]) == W("0100")
    assert apply_deletion_pattern(c, (0, 1)) == W("1100")
    assert history_to_pattern(4, []) == ()


def test_history_pattern_bijection():
    for n in range(7):
        for t in range(min(n, 3) + 1):
            hs = list(all_deletion_histories(n, t))
            pats = {history_to_pattern(n, h) for h in hs}
            assert len(pats) == len(hs)
            assert pats == set(permutations(range(n), t))
            if n <= 5:
                for h in hs:
                    assert pattern_to_history(n, history_to_pattern(n, h)) == tuple(h)


@given(st.lists(st.integers(0, 2), max_size=7), st.data())
def test_history_and_pattern_agree(symbols, data):
    x = Word(tuple(symbols), 3)
    t = data.draw(st.integers(0, len(x)))
    h = [data.draw(st.integers(0, len(x) - i - 1)) for i in range(t)]
    assert apply_deletion_pattern(x, history_to_pattern(len(x), h)) == apply_deletion_history(x, h)


def test_code_metadata():
    code = Code.from_strings(["110", "000", "011"])
    assert [str(c) for c in code] == ["000", "011", "110"]
    assert code.M == 3 and code.n == 3
    assert code.d_min == 2
    assert Code.from_strings(["01"]).d_min is None
    with pytest.raises(ValueError):
        Code.from_strings(["01", "01"])
    with pytest.raises(ValueError):
        Code.from_strings(["01", "011"])


def test_parse_code_roundtrip():
    code = parse_code("q=3 n=2\n02\n\n21\n")
    assert code.q == 3 and [str(c) for c in code] == ["02", "21"]
    assert parse_code(format_code(code)) == code


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("q=2\n01\n", 1),
    ("q=2 n=2\n01\n012\n", 3),
    ("q=2 n=2\n01\n02\n", 3),
    ("q=2 n=2\n01\n01\n", 3),
])
def test_parse_code_errors(text, line):
    with pytest.raises(CodeFileError) as exc:
        parse_code(text)
    assert exc.value.line == line
