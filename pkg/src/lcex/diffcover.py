"""Difference covers of Z_t, the derived position cover S(t), and the O(1)
alignment offset h(i, j)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

# Hand-verified minimal covers for small moduli.  Every entry is checked for
# the coverage identity at build time; larger moduli use the block
# construction below.  The t=5 entry is the classic perfect cover {1,2,4}.
_SMALL_COVERS = {
    1: (0,),
    2: (0, 1),
    3: (0, 1),
    4: (0, 1, 2),
    5: (1, 2, 4),
    6: (0, 1, 3),
    7: (1, 2, 4),
    8: (0, 1, 2, 4),
    9: (0, 1, 2, 4),
    13: (0, 1, 3, 9),
}


def _block_cover(t: int) -> tuple[int, ...]:
    """Residues {0..r-1} plus multiples of r (mod t), r = ceil(sqrt(t)).

    For any d, some multiple of r lands in [d..d+r-1]; subtracting a small
    residue reaches d, so differences cover Z_t with |D| <= 3*sqrt(t).
    """
    r = math.isqrt(t - 1) + 1 if t > 1 else 1
    members = set(range(r))
    k = 0
    while k * r <= t + r:
        members.add((k * r) % t)
        k += 1
    return tuple(sorted(members))


@dataclass
class DifferenceCover:
    """A t-difference-cover D with the offset table hdelta.

    hdelta[d] is the smallest x in D with (x+d) mod t in D; it exists for
    every d because differences of D cover Z_t.
    """

    t: int
    members: tuple
    hdelta: list = field(repr=False)

    def h(self, i: int, j: int) -> int:
        """Offset delta in [0..t-1] with i+delta and j+delta both in S(t).

        Callers must keep i, j <= n-t so the shifted positions stay in range.
        """
        t = self.t
        return (self.hdelta[(j - i) % t] - i) % t

    def member_mask(self) -> np.ndarray:
        mask = np.zeros(self.t, dtype=bool)
        mask[list(self.members)] = True
        return mask


@lru_cache(maxsize=None)
def build_difference_cover(t: int) -> DifferenceCover:
    """Deterministic t-difference-cover with a fully populated hdelta table."""
    if t < 1:
        raise ValueError("modulus must be >= 1")
    members = _SMALL_COVERS.get(t) or _block_cover(t)
    in_d = [False] * t
    for x in members:
        in_d[x] = True
    hdelta = [-1] * t
    for d in range(t):
        for x in members:
            if in_d[(x + d) % t]:
                hdelta[d] = x
                break
        if hdelta[d] < 0:
            raise AssertionError(f"residue {d} not covered for t={t}")
    return DifferenceCover(t=t, members=tuple(members), hdelta=hdelta)


@dataclass
class CoverIndex:
    """S(t) membership plus the segment layout of the encoded string.

    Residue x's segment lists the ranks of blocks starting at x, x+t, ...
    (first position t when x = 0) while the block fits inside [1..n].
    ``seg_start`` gives each segment's 0-based offset in code(w); separators
    are accounted one per non-empty segment.
    """

    t: int
    n: int
    dc: DifferenceCover
    residue_order: tuple
    residue_index: np.ndarray        # residue -> index in residue_order, -1 outside D
    first_pos: np.ndarray            # per residue index, first position of the segment
    seg_len: np.ndarray              # per residue index, number of defined blocks
    seg_start: np.ndarray            # per residue index, offset of the segment in code
    code_len: int
    size: int                        # |S(t)| counted over [1..n]

    def __post_init__(self):
        # list mirrors keep the scalar query path off numpy scalar boxing
        self._residue_index = self.residue_index.tolist()
        self._first_pos = self.first_pos.tolist()
        self._seg_start = self.seg_start.tolist()

    def in_cover(self, i: int) -> bool:
        return 1 <= i <= self.n and self._residue_index[i % self.t] >= 0

    def seg_rank(self, i: int) -> int:
        """Index of i within its residue's arithmetic progression."""
        ri = self._residue_index[i % self.t]
        return (i - self._first_pos[ri]) // self.t

    def seg_offset(self, x: int) -> int:
        """Start offset of residue x's segment inside code(w)."""
        return self._seg_start[self._residue_index[x]]

    def pos_in_code(self, i: int) -> int:
        """0-based position of block i inside code(w); block must be defined."""
        ri = self._residue_index[i % self.t]
        return self._seg_start[ri] + (i - self._first_pos[ri]) // self.t

    def positions(self) -> list[int]:
        """All cover positions in [1..n], ascending."""
        mask = self.dc.member_mask()
        idx = np.arange(1, self.n + 1)
        return idx[mask[idx % self.t]].tolist()


def build_cover_index(dc: DifferenceCover, n: int) -> CoverIndex:
    if n < 1:
        raise ValueError("n must be >= 1")
    t = dc.t
    order = dc.members
    residue_index = np.full(t, -1, dtype=np.int64)
    for k, x in enumerate(order):
        residue_index[x] = k
    first_pos = np.empty(len(order), dtype=np.int64)
    seg_len = np.empty(len(order), dtype=np.int64)
    seg_start = np.empty(len(order), dtype=np.int64)
    size = 0
    off = 0
    for k, x in enumerate(order):
        first = x if x >= 1 else t
        first_pos[k] = first
        if first <= n:
            size += (n - first) // t + 1
        length = 0 if first > n - t + 1 else (n - t + 1 - first) // t + 1
        seg_len[k] = length
        seg_start[k] = off
        off += length + (1 if length else 0)
    return CoverIndex(
        t=t, n=n, dc=dc, residue_order=order, residue_index=residue_index,
        first_pos=first_pos, seg_len=seg_len, seg_start=seg_start,
        code_len=off, size=size,
    )
