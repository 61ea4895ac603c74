"""Varshamov-Tenengolts codes and their single/double insertion decoders."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .balls import subsequences
from .words import Code, Word, _is_subseq


@dataclass(frozen=True)
class VTParams:
    n: int
    a: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"VT length n={self.n} must be >= 1")
        if not 0 <= self.a <= self.n:
            raise ValueError(f"VT residue a={self.a} outside 0..{self.n}")

    @property
    def modulus(self) -> int:
        return self.n + 1


class DecodingFailure(ValueError):
    """The received word is not explained by any codeword."""


def _require_binary(x: Word) -> None:
    if x.q != 2:
        raise ValueError(f"VT codes are binary, got q={x.q}")


def vt_checksum(x: Word) -> int:
    """sum of i * x_i over 1-based positions, mod |x| + 1."""
    _require_binary(x)
    return _syndrome(x.symbols, len(x) + 1)


def _syndrome(bits: tuple[int, ...], modulus: int) -> int:
    return sum(i for i, b in enumerate(bits, 1) if b) % modulus


@lru_cache(maxsize=64)
def vt_code(p: VTParams) -> Code:
    words = [Word(bits, 2) for bits in product((0, 1), repeat=p.n)
             if _syndrome(bits, p.modulus) == p.a]
    return Code(words)


def is_codeword(p: VTParams, x: Word) -> bool:
    _require_binary(x)
    return len(x) == p.n and _syndrome(x.symbols, p.modulus) == p.a


def decode_one_deletion(p: VTParams, r: Word) -> Word:
    """Recover the codeword from a single deletion.

    The syndrome deficit ``s`` says what was lost: if ``s`` is at most the
    weight of ``r`` a 0 was deleted with ``s`` ones to its right, otherwise a
    1 was deleted with ``s - weight - 1`` zeros to its left.
    """
    _require_binary(r)
    if len(r) != p.n - 1:
        raise ValueError(f"received length {len(r)}, expected {p.n - 1}")
    bits = r.symbols
    weight = sum(bits)
    s = (p.a - _syndrome(bits, p.modulus)) % p.modulus
    if s <= weight:
        ones_right = weight
        pos = 0
        while ones_right > s:
            ones_right -= bits[pos]
            pos += 1
        cand = bits[:pos] + (0,) + bits[pos:]
    else:
        zeros_left = 0
        pos = 0
        while zeros_left < s - weight - 1 and pos < len(bits):
            zeros_left += 1 - bits[pos]
            pos += 1
        cand = bits[:pos] + (1,) + bits[pos:]
    if _syndrome(cand, p.modulus) != p.a:
        raise DecodingFailure(f"{r} is not a single deletion of any VT_{p.a}({p.n}) codeword")
    return Word(cand, 2)


def decode_one_insertion(p: VTParams, r: Word) -> Word:
    """Recover the codeword from a single insertion by trying each deletion of ``r``."""
    _require_binary(r)
    if len(r) != p.n + 1:
        raise ValueError(f"received length {len(r)}, expected {p.n + 1}")
    bits = r.symbols
    for i in range(len(bits)):
        if i and bits[i] == bits[i - 1]:
            continue
        cand = bits[:i] + bits[i + 1:]
        if _syndrome(cand, p.modulus) == p.a:
            return Word(cand, 2)
    raise DecodingFailure(f"{r} is not a single insertion into any VT_{p.a}({p.n}) codeword")


@dataclass(frozen=True)
class ScanResult:
    """Outcome of two-insertion decoding: every codeword that explains the word."""

    candidates: tuple[Word, ...]

    @property
    def status(self) -> str:
        return {0: "none", 1: "unique"}.get(len(self.candidates), "ambiguous")

    @property
    def codeword(self) -> Word | None:
        return self.candidates[0] if len(self.candidates) == 1 else None


def decode_two_insertions_scan(p: VTParams, r: Word) -> ScanResult:
    """Run the single-insertion decoder on every 1-subsequence of ``r``."""
    _require_binary(r)
    if len(r) != p.n + 2:
        raise ValueError(f"received length {len(r)}, expected {p.n + 2}")
    found = set()
    for sub in subsequences(r.symbols, 1):
        try:
            c = decode_one_insertion(p, Word(sub, 2))
        except DecodingFailure:
            continue
        if _is_subseq(c.symbols, r.symbols):
            found.add(c)
    return ScanResult(tuple(sorted(found)))
