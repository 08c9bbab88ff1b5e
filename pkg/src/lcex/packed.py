"""Small-alphabet variant: the text as a packed bit string.

Capped bit-LCE needs no tree at all: one unaligned word fetch per side, an
exclusive-or, and a leading-zero count.  Whole-word runs reuse the block-code
machinery over the bit string, with word values themselves acting as block
ranks (most-significant-first packing makes numeric order lexicographic).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blockcode import BlockCode, build_blockcode
from .diffcover import build_cover_index, build_difference_cover
from .errors import OutOfRange
from .textstore import Text

_PAD = 16   # zero bytes past the end so unaligned fetches never slice short


@dataclass
class PackedText:
    """n symbols of b bits each, most significant bit first."""

    bits: bytes
    b: int
    n: int
    word_size: int
    nbits: int

    def fetch(self, p: int, width: int) -> int:
        """width bits starting at bit position p (1-based), zero padded."""
        byte0 = (p - 1) >> 3
        off = (p - 1) & 7
        window = int.from_bytes(self.bits[byte0 : byte0 + 10], "big")
        return (window >> (80 - off - width)) & ((1 << width) - 1)

    def decode(self, i: int) -> int:
        """Symbol at text position i."""
        return self.fetch((i - 1) * self.b + 1, self.b)


def pack(t: Text, word_size: int = 64) -> PackedText:
    """Pack internal symbols at ceil(log2 sigma) bits each."""
    if t.sigma < 2:
        raise ValueError("packing needs at least two distinct symbols")
    if not 1 <= word_size <= 64:
        raise ValueError("word size must be in [1..64]")
    b = max(1, (t.sigma - 1).bit_length())
    nbits = t.n * b
    acc = 0
    for s in t.symbols():
        acc = (acc << b) | s
    pad_bits = (-nbits) % 8
    acc <<= pad_bits
    raw = acc.to_bytes((nbits + pad_bits) // 8, "big") + b"\x00" * _PAD
    return PackedText(bits=raw, b=b, n=t.n, word_size=word_size, nbits=nbits)


def _msb8(x: int) -> int:
    """Portable byte-table msb: index of the highest set bit of a byte."""
    return _MSB_TABLE[x]


_MSB_TABLE = [0] * 256
for _v in range(1, 256):
    _MSB_TABLE[_v] = _v.bit_length() - 1


def leading_equal_bits(x: int, width: int) -> int:
    """Bits before the most significant set bit of x, within width."""
    if x == 0:
        return width
    return width - x.bit_length()


def bit_short_lce(pt: PackedText, bi: int, bj: int) -> int:
    """min(bitLCE(bi, bj), word_size) with one fetch per side plus XOR/msb."""
    if not (1 <= bi <= pt.nbits and 1 <= bj <= pt.nbits):
        raise OutOfRange(f"bit positions ({bi},{bj}) not in [1..{pt.nbits}]")
    w = pt.word_size
    cap = min(w, pt.nbits - bi + 1, pt.nbits - bj + 1)
    x = pt.fetch(bi, w) ^ pt.fetch(bj, w)
    if x == 0:
        return cap
    return min(leading_equal_bits(x, w), cap)


def build_bit_blockcode(pt: PackedText) -> BlockCode:
    """Block code over the bit string with block length word_size.

    A block's word value is its lexicographic key; dense-ranking the values
    yields exactly the rank sequence the block code needs.
    """
    w = pt.word_size
    dc = build_difference_cover(w)
    cover = build_cover_index(dc, pt.nbits)
    positions = [p for p in cover.positions() if p + w - 1 <= pt.nbits]
    values = [pt.fetch(p, w) for p in positions]
    order = {v: r + 1 for r, v in enumerate(sorted(set(values)))}
    ranks = np.zeros(pt.nbits + 1, dtype=np.int64)
    for p, v in zip(positions, values):
        ranks[p] = order[v]
    return build_blockcode(ranks, cover)


def _capped(pt: PackedText, bi: int, bj: int) -> int:
    # bit suffixes may match to the very end (no bit-level sentinel), so a
    # chained step can step one past the last bit; that contributes nothing
    if bi > pt.nbits or bj > pt.nbits:
        return 0
    return bit_short_lce(pt, bi, bj)


def bit_lce(pt: PackedText, bc: BlockCode, bi: int, bj: int) -> int:
    """Exact bit-level LCE by the same decompose-align-finish algorithm."""
    nbits = pt.nbits
    if bi == bj:
        return nbits - bi + 1
    w = pt.word_size
    l1 = bit_short_lce(pt, bi, bj)
    if l1 < w:
        return l1
    if max(bi, bj) > nbits - 2 * w - 1:
        s = l1
        while True:
            r = _capped(pt, bi + s, bj + s)
            s += r
            if r < w:
                return s
    delta = bc.cover.dc.h(bi, bj)
    l2 = bc.long_lce(bi + delta, bj + delta)
    l3 = _capped(pt, bi + delta + w * l2, bj + delta + w * l2)
    return delta + w * l2 + l3


def packed_lce(pt: PackedText, bc: BlockCode, i: int, j: int) -> int:
    """Symbol-level LCE recovered as floor(bitLCE / b)."""
    if not (1 <= i <= pt.n and 1 <= j <= pt.n):
        raise OutOfRange(f"positions ({i},{j}) not in [1..{pt.n}]")
    b = pt.b
    return bit_lce(pt, bc, (i - 1) * b + 1, (j - 1) * b + 1) // b


@dataclass
class PackedLce:
    """Bundled packed text and its bit-level block code."""

    pt: PackedText
    bc: BlockCode

    def lce(self, i: int, j: int) -> int:
        return packed_lce(self.pt, self.bc, i, j)

    def bit_lce(self, bi: int, bj: int) -> int:
        return bit_lce(self.pt, self.bc, bi, bj)


def build_packed(t: Text, word_size: int = 64) -> PackedLce:
    pt = pack(t, word_size)
    return PackedLce(pt=pt, bc=build_bit_blockcode(pt))
