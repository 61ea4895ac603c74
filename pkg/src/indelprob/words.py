"""Words, codes and error histories over a q-ary alphabet.

Symbols are the integers ``0..q-1``.  A word carries its alphabet size so
that mixing words over different alphabets is caught instead of silently
producing nonsense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

# A t-insertion history: temporal list of (gap position, symbol).
InsertionHistory = Sequence[tuple[int, int]]
# A t-deletion history: temporal list of indices into the current word.
DeletionHistory = Sequence[int]
# A t-deletion pattern: temporal list of indices into the original word.
DeletionPattern = Sequence[int]


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True, slots=True)
class Word:
    """An immutable q-ary sequence.  The empty word is allowed."""

    symbols: tuple[int, ...]
    q: int = 2

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} outside alphabet of size {self.q}")

    @classmethod
    def from_str(cls, text: str, q: int = 2) -> Word:
        if q > 10:
            raise ValueError("text form only supports q <= 10")
        try:
            return cls(tuple(int(ch) for ch in text), q)
        except ValueError:
            raise ValueError(f"invalid word {text!r} for q={q}") from None

    @classmethod
    def constant(cls, symbol: int, n: int, q: int = 2) -> Word:
        """The word ``symbol`` repeated ``n`` times."""
        return cls((symbol,) * n, q)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(map(str, self.symbols))
        return "(" + ",".join(map(str, self.symbols)) + ")"

    @property
    def weight(self) -> int:
        """Number of nonzero symbols."""
        return sum(1 for s in self.symbols if s)


def _check_same_alphabet(x: Word, y: Word) -> None:
    if x.q != y.q:
        raise AlphabetMismatch(f"words over different alphabets (q={x.q} vs q={y.q})")


def lcs_length(x: Sequence[int], y: Sequence[int]) -> int:
    # rolling single-row table
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0]
        for j, b in enumerate(y):
            if a == b:
                cur.append(prev[j] + 1)
            else:
                cur.append(max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def indel_distance(x: Word, y: Word) -> int:
    """Minimum number of insertions and deletions turning ``x`` into ``y``."""
    _check_same_alphabet(x, y)
    return len(x) + len(y) - 2 * lcs_length(x.symbols, y.symbols)


def runs(x: Word) -> list[tuple[int, int]]:
    """Maximal constant substrings of ``x`` as ``(symbol, length)`` pairs."""
    out: list[tuple[int, int]] = []
    for s in x.symbols:
        if out and out[-1][0] == s:
            out[-1] = (s, out[-1][1] + 1)
        else:
            out.append((s, 1))
    return out


def _is_subseq(x: Sequence[int], y: Sequence[int]) -> bool:
    it = iter(y)
    return all(any(a == b for b in it) for a in x)


def is_subsequence(x: Word, y: Word) -> bool:
    """True iff ``x`` can be obtained from ``y`` by deletions."""
    _check_same_alphabet(x, y)
    return _is_subseq(x.symbols, y.symbols)


def apply_insertion_history(x: Word, history: InsertionHistory) -> Word:
    """Apply insertions one at a time; ``(p, a)`` puts ``a`` before current index ``p``.

    ``p == len(current)`` appends.
    """
    cur = list(x.symbols)
    for step, (pos, sym) in enumerate(history, 1):
        if not 0 <= pos <= len(cur):
            raise ValueError(f"insertion step {step}: position {pos} outside 0..{len(cur)}")
        if not 0 <= sym < x.q:
            raise ValueError(f"insertion step {step}: symbol {sym} outside alphabet")
        cur.insert(pos, sym)
    return Word(tuple(cur), x.q)


def apply_deletion_history(x: Word, history: DeletionHistory) -> Word:
    cur = list(x.symbols)
    for step, idx in enumerate(history, 1):
        if not 0 <= idx < len(cur):
            raise ValueError(f"deletion step {step}: index {idx} outside 0..{len(cur) - 1}")
        del cur[idx]
    return Word(tuple(cur), x.q)


def apply_deletion_pattern(x: Word, pattern: DeletionPattern) -> Word:
    """Delete the listed original indices (order is irrelevant to the result)."""
    _validate_pattern(len(x), pattern)
    gone = set(pattern)
    return Word(tuple(s for i, s in enumerate(x.symbols) if i not in gone), x.q)


def _validate_pattern(n: int, pattern: DeletionPattern) -> None:
    if len(set(pattern)) != len(pattern):
        raise ValueError(f"deletion pattern {list(pattern)} repeats an index")
    for idx in pattern:
        if not 0 <= idx < n:
            raise ValueError(f"deletion pattern index {idx} outside 0..{n - 1}")


def history_to_pattern(x_len: int, history: DeletionHistory) -> tuple[int, ...]:
    """Original-index trace of a deletion history on a word of length ``x_len``."""
    remaining = list(range(x_len))
    out = []
    for step, idx in enumerate(history, 1):
        if not 0 <= idx < len(remaining):
            raise ValueError(f"deletion step {step}: index {idx} outside 0..{len(remaining) - 1}")
        out.append(remaining.pop(idx))
    return tuple(out)


def pattern_to_history(x_len: int, pattern: DeletionPattern) -> tuple[int, ...]:
    """Inverse of :func:`history_to_pattern`."""
    _validate_pattern(x_len, pattern)
    remaining = list(range(x_len))
    out = []
    for orig in pattern:
        idx = remaining.index(orig)
        out.append(idx)
        del remaining[idx]
    return tuple(out)


@dataclass(frozen=True)
class Code:
    """A set of distinct equal-length words over one alphabet.

    Codewords are kept in lexicographic order.
    """

    words: tuple[Word, ...]
    n: int = field(init=False)
    q: int = field(init=False)

    def __init__(self, words: Iterable[Word]):
        words = tuple(words)
        if not words:
            raise ValueError("a code needs at least one codeword")
        n, q = len(words[0]), words[0].q
        for w in words:
            if len(w) != n:
                raise ValueError(f"codeword {w} has length {len(w)}, expected {n}")
            if w.q != q:
                raise AlphabetMismatch(f"codeword {w} over q={w.q}, expected q={q}")
        if len(set(words)) != len(words):
            raise ValueError("duplicate codewords")
        object.__setattr__(self, "words", tuple(sorted(words)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_strings(cls, texts: Iterable[str], q: int = 2) -> Code:
        return cls(Word.from_str(s, q) for s in texts)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w: object) -> bool:
        return w in self._members

    @cached_property
    def _members(self) -> frozenset[Word]:
        return frozenset(self.words)

    @property
    def M(self) -> int:
        return len(self.words)

    @cached_property
    def d_min(self) -> int | None:
        """Minimum pairwise indel distance (``None`` for a single codeword)."""
        if len(self.words) < 2:
            return None
        return min(indel_distance(a, b) for a, b in combinations(self.words, 2))

    def others(self, c: Word) -> list[Word]:
        if c not in self:
            raise ValueError(f"{c} is not a codeword")
        return [w for w in self.words if w != c]


class CodeFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_code(text: str) -> Code:
    """Parse the code text format.

    Line 1 is ``q=<int> n=<int>``; every further non-empty line is one
    codeword written as ``n`` base-q digits.
    """
    lines = text.splitlines()
    if not lines:
        raise CodeFileError(1, "empty code file")
    try:
        header = dict(part.split("=", 1) for part in lines[0].split())
        q, n = int(header["q"]), int(header["n"])
    except (ValueError, KeyError):
        raise CodeFileError(1, f"bad header {lines[0]!r}, expected 'q=<int> n=<int>'") from None
    if not 2 <= q <= 10:
        raise CodeFileError(1, f"q={q} unsupported in text form (need 2 <= q <= 10)")
    if n < 0:
        raise CodeFileError(1, f"negative length n={n}")
    words: list[Word] = []
    seen: set[Word] = set()
    for lineno, raw in enumerate(lines[1:], 2):
        line = raw.strip()
        if not line:
            continue
        if len(line) != n:
            raise CodeFileError(lineno, f"codeword {line!r} has length {len(line)}, expected {n}")
        try:
            w = Word.from_str(line, q)
        except ValueError as exc:
            raise CodeFileError(lineno, str(exc)) from None
        if w in seen:
            raise CodeFileError(lineno, f"duplicate codeword {line}")
        seen.add(w)
        words.append(w)
    if not words:
        raise CodeFileError(len(lines), "no codewords")
    return Code(words)


def read_code(path: str | Path) -> Code:
    return parse_code(Path(path).read_text())


def format_code(code: Code) -> str:
    return "\n".join([f"q={code.q} n={code.n}", *map(str, code)]) + "\n"
