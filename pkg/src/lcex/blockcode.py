"""Block-wise LCE over cover positions: rank t-blocks, concatenate per-residue
rank sequences with unique separators, and run suffix-array machinery on the
result so one range-minimum answers floor(LCE/t)."""

from __future__ import annotations

import functools

import numpy as np

from .diffcover import CoverIndex
from .navtree import NavTree, short_lce
from .suffixes import SparseMin, inverse_permutation, lcp_array, suffix_array
from .textstore import Text
from .tst import TruncatedSuffixTree


def rank_blocks(t: Text, tree: TruncatedSuffixTree, nav: NavTree,
                cover: CoverIndex) -> np.ndarray:
    """Lexicographic rank of each defined t-block, indexed by 1-based position.

    The rank of the block at i is the rank of the depth-t ancestor of the
    leaf located for i; positions whose block would overrun the text keep the
    reserved rank 0.
    """
    if tree.tgram_rank is None or tree.tgram_depth != cover.t:
        raise ValueError("trie lacks t-gram marks at the block length")
    n = t.n
    bt = cover.t
    ranks = np.zeros(n + 1, dtype=np.int64)
    tg = tree.tgram_rank
    for i in cover.positions():
        if i + bt - 1 <= n:
            ranks[i] = tg[nav.locate(i)]
    return ranks


def rank_blocks_by_sort(t: Text, nav: NavTree, tree: TruncatedSuffixTree,
                        cover: CoverIndex) -> np.ndarray:
    """Comparison-sort route for block ranking when the trie is shallower
    than the block length: blocks compare via chained capped-LCE calls with a
    text read only at the first mismatch (build time still holds the text)."""
    n = t.n
    bt = cover.t
    tp = nav.t
    syms = t.symbols()

    def chain(i: int, j: int) -> int:
        total = 0
        while total < bt:
            r = short_lce(nav, tree, i + total, j + total)
            total += r
            if r < tp:
                break
        return min(total, bt)

    def cmp(i: int, j: int) -> int:
        if i == j:
            return 0
        l = chain(i, j)
        if l >= bt:
            return 0
        a = syms[i - 1 + l] if i + l <= n else -1
        b = syms[j - 1 + l] if j + l <= n else -1
        return -1 if a < b else (1 if a > b else 0)

    defined = [i for i in cover.positions() if i + bt - 1 <= n]
    defined.sort(key=functools.cmp_to_key(cmp))
    ranks = np.zeros(n + 1, dtype=np.int64)
    rank = 0
    prev = None
    for i in defined:
        if prev is None or cmp(prev, i) != 0:
            rank += 1
        ranks[i] = rank
        prev = i
    return ranks


class BlockCode:
    """code(w) plus its suffix-array stack; answers floor(LCE/t) for cover
    positions in O(1)."""

    def __init__(self, t: int, n: int, cover: CoverIndex, code: np.ndarray):
        self.t = t
        self.n = n
        self.cover = cover
        self.code = code
        if len(code):
            self.sa = suffix_array(code)
            self.isa = inverse_permutation(self.sa)
            self.lcp = lcp_array(code, self.sa)
            self.rmq = SparseMin(self.lcp)
        else:
            self.sa = np.empty(0, dtype=np.int64)
            self.isa = np.empty(0, dtype=np.int64)
            self.lcp = np.empty(0, dtype=np.int64)
            self.rmq = None
        self._isa_list = self.isa.tolist()
        self._code_list = code.tolist()

    @property
    def code_len(self) -> int:
        return len(self.code)

    def posmap(self, i: int) -> int:
        """0-based index of block i inside code(w)."""
        return self.cover.pos_in_code(i)

    def rank_at(self, i: int) -> int:
        return self._code_list[self.posmap(i)]

    def long_lce(self, i: int, j: int):
        """floor(LCE(i, j) / t) for cover positions; None when either position
        is outside the cover.  The diagonal returns the count of defined
        blocks from i."""
        cov = self.cover
        n, t = self.n, self.t
        ridx = cov._residue_index
        if not (1 <= i <= n and 1 <= j <= n):
            return None
        ri = ridx[i % t]
        rj = ridx[j % t]
        if ri < 0 or rj < 0:
            return None
        if i == j:
            return (n - i + 1) // t
        if i + t - 1 > n or j + t - 1 > n:
            return 0
        first, start = cov._first_pos, cov._seg_start
        a = self._isa_list[start[ri] + (i - first[ri]) // t]
        b = self._isa_list[start[rj] + (j - first[rj]) // t]
        if a > b:
            a, b = b, a
        return self.rmq.query(a + 1, b)

    def long_lce_batch(self, I: np.ndarray, J: np.ndarray) -> np.ndarray:
        """Vectorized floor(LCE/t); callers must pass distinct cover positions
        with defined blocks."""
        cov = self.cover
        ri = cov.residue_index[I % self.t]
        rj = cov.residue_index[J % self.t]
        ci = cov.seg_start[ri] + (I - cov.first_pos[ri]) // self.t
        cj = cov.seg_start[rj] + (J - cov.first_pos[rj]) // self.t
        a = self.isa[ci]
        b = self.isa[cj]
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        return self.rmq.query_batch(lo + 1, hi).astype(np.int64)


def build_blockcode(ranks: np.ndarray, cover: CoverIndex) -> BlockCode:
    """Assemble code(w) segment by segment in ascending residue order.

    Separators are the distinct values -1, -2, ... appended after each
    non-empty segment, smaller than every rank so no common prefix crosses a
    segment boundary.
    """
    t, n = cover.t, cover.n
    code = np.empty(cover.code_len, dtype=np.int64)
    sep = -1
    for k in range(len(cover.residue_order)):
        length = int(cover.seg_len[k])
        if length == 0:
            continue
        first = int(cover.first_pos[k])
        off = int(cover.seg_start[k])
        idx = first + t * np.arange(length, dtype=np.int64)
        code[off : off + length] = ranks[idx]
        code[off + length] = sep
        sep -= 1
    return BlockCode(t=t, n=n, cover=cover, code=code)
