"""Bit-stream encoding of block functions.

A block function f is encoded as the infinite word prod_i 1 0^f(i); a
finite prefix of that word is a str over '0'/'1'.  Parsing recovers the
completed block sizes plus the trailing partial run of zeros that the
prefix cut off.
"""
from __future__ import annotations

from dataclasses import dataclass


class MalformedStreamError(ValueError):
    pass


@dataclass(frozen=True)
class BlockSeq:
    """Completed block sizes plus the zero-run after the last '1'.

    trailing_partial is None only for the empty word: a nonempty
    well-formed word always ends inside some block.
    """

    sizes: tuple[int, ...]
    trailing_partial: int | None


def stream_prefix(f, bits: int) -> str:
    """First `bits` bits of the stream of f.  f must be normalized."""
    if bits < 0:
        raise ValueError("bit count must be a natural number")
    parts = []
    have = 0
    i = 0
    while have < bits:
        size = f.value(i) if hasattr(f, "value") else f(i)
        if size < 0:
            raise MalformedStreamError(f"block {i} has negative size {size}")
        parts.append("1")
        parts.append("0" * size)
        have += 1 + size
        i += 1
    return "".join(parts)[:bits]


def parse_blocks(word: str) -> BlockSeq:
    if not word:
        return BlockSeq((), None)
    bad = word.strip("01")
    if bad:
        raise MalformedStreamError(f"not a bit word: contains {bad[0]!r}")
    if word[0] != "1":
        raise MalformedStreamError("bit word must begin with '1'")
    runs = word.split("1")[1:]  # zero-runs following each '1'
    sizes = tuple(len(r) for r in runs[:-1])
    return BlockSeq(sizes, len(runs[-1]))


def prefix_equal(f, g, bits: int) -> bool:
    """Do the streams of f and g agree on their first `bits` bits?

    Walks blocks lazily and stops at the first divergent bit, so only
    O(bits) work happens even when the functions differ early.
    """
    pos = 0
    i = 0
    while pos < bits:
        a = f.value(i) if hasattr(f, "value") else f(i)
        b = g.value(i) if hasattr(g, "value") else g(i)
        if a < 0 or b < 0:
            raise MalformedStreamError(f"negative block size at index {i}")
        if a != b:
            # streams agree through 1 0^min(a,b); the next bit differs
            return pos + min(a, b) + 1 >= bits
        pos += a + 1
        i += 1
    return True


def ragged_equal(x: str, y: str) -> bool:
    """Prefix comparison that truncates to the shorter word.

    Transduced prefixes of the same stream can end at different points;
    agreement is only meaningful on the overlap.
    """
    m = min(len(x), len(y))
    return x[:m] == y[:m]
