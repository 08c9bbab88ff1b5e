"""The composed encoding LCE index and its query algorithm.

A query decomposes as delta + t*l2 + l3: a capped prefix check aligns both
positions onto the cover via the O(1) offset h, the block code supplies the
whole-block run l2, and one more capped check finishes the remainder.  Near
the text boundary the capped check simply chains, which stays O(1) because
fewer than 2t+2 characters can remain there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import blockcode as _bc
from . import navtree as _nav
from . import tst as _tst
from .diffcover import build_cover_index, build_difference_cover
from .errors import OutOfRange, ParamOutOfRange
from .suffixes import lcp_array, suffix_array
from .textstore import Text

# Weight of one trie leaf against one cover entry in the tuning objective and
# the estimated-words formula below; see README ("Space accounting").
TUNE_ALPHA = 3


@dataclass
class SpaceStats:
    """Structure sizes in entry counts plus the documented word estimate.

    estimated_words = 4*tst_nodes + ceil(tst_ref_len/8) + 2*nav_nodes
                      + sampled_count + 4*code_len
    """

    tst_nodes: int
    tst_ref_len: int
    nav_nodes: int
    sampled_count: int
    code_len: int
    estimated_words: int
    z: int | None
    n: int
    t: int
    t_prime: int


def estimated_words(tst_nodes: int, tst_ref_len: int, nav_nodes: int,
                    sampled_count: int, code_len: int) -> int:
    return (4 * tst_nodes + (tst_ref_len + 7) // 8 + 2 * nav_nodes
            + sampled_count + 4 * code_len)


class LceIndex:
    """Encoding LCE structure: trie + navigation tree + block code.

    After construction the original text is unreachable; every answer comes
    from the component structures alone.
    """

    def __init__(self, n: int, t: int, t_prime: int, sigma: int, sentinel: int,
                 tree: _tst.TruncatedSuffixTree, nav: _nav.NavTree,
                 bc: _bc.BlockCode, stats: SpaceStats, packed=None):
        self.n = n
        self.t = t
        self.t_prime = t_prime
        self.sigma = sigma
        self.sentinel = sentinel
        self.tree = tree
        self.nav = nav
        self.bc = bc
        self.stats = stats
        self.packed = packed
        # bound-method caches for the query hot path
        self._h = bc.cover.dc.h
        self._long = bc.long_lce

    # -- queries ------------------------------------------------------------

    def _short(self, i: int, j: int) -> int:
        return _nav.short_lce(self.nav, self.tree, i, j)

    def _short_chain(self, i: int, j: int, cap: int) -> tuple[int, int]:
        """Capped common-prefix length via chained t'-capped calls.

        Returns (min(LCE, cap), number of sub-calls); at most ceil(cap/t')
        sub-calls plus one when the cap is overshot mid-step.
        """
        tp = self.t_prime
        total = 0
        calls = 0
        while True:
            r = self._short(i + total, j + total)
            calls += 1
            total += r
            if r < tp or total >= cap:
                break
        return (min(total, cap), calls)

    def lce(self, i: int, j: int) -> int:
        """Length of the longest common prefix of the suffixes at i and j.

        The diagonal is defined as the full suffix length n-i+1 and short
        circuits before touching any structure.
        """
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise OutOfRange(f"positions ({i},{j}) not in [1..{n}]")
        if i == j:
            return n - i + 1
        t = self.t
        l1, _ = self._short_chain(i, j, t)
        if l1 < t:
            return l1
        if max(i, j) > n - 2 * t - 1:
            s = l1
            while True:
                r, _ = self._short_chain(i + s, j + s, t)
                s += r
                if r < t:
                    return s
        delta = self.bc.cover.dc.h(i, j)
        l2 = self.bc.long_lce(i + delta, j + delta)
        l3, _ = self._short_chain(i + delta + t * l2, j + delta + t * l2, t)
        return delta + t * l2 + l3

    def lce_instrumented(self, i: int, j: int) -> tuple[int, dict]:
        """lce plus sub-call accounting: total capped-LCE sub-calls for the
        query and the maximum within any single chained invocation."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise OutOfRange(f"positions ({i},{j}) not in [1..{n}]")
        counts: list[int] = []
        if i == j:
            return n - i + 1, {"total": 0, "per_invocation_max": 0, "invocations": 0}
        t = self.t
        l1, c = self._short_chain(i, j, t)
        counts.append(c)
        ans = None
        if l1 < t:
            ans = l1
        elif max(i, j) > n - 2 * t - 1:
            s = l1
            while True:
                r, c = self._short_chain(i + s, j + s, t)
                counts.append(c)
                s += r
                if r < t:
                    ans = s
                    break
        else:
            delta = self.bc.cover.dc.h(i, j)
            l2 = self.bc.long_lce(i + delta, j + delta)
            l3, c = self._short_chain(i + delta + t * l2, j + delta + t * l2, t)
            counts.append(c)
            ans = delta + t * l2 + l3
        return ans, {
            "total": sum(counts),
            "per_invocation_max": max(counts),
            "invocations": len(counts),
        }

    def short_lce(self, i: int, j: int) -> int:
        """min(LCE(i, j), t), chained through the t' structure when t' < t."""
        self_n = self.n
        if not (1 <= i <= self_n and 1 <= j <= self_n):
            raise OutOfRange(f"positions ({i},{j}) not in [1..{self_n}]")
        if i == j:
            return min(self_n - i + 1, self.t)
        return self._short_chain(i, j, self.t)[0]

    def space_report(self) -> SpaceStats:
        return self.stats


def build_index(t: Text, t_param: int, t_prime: int | None = None,
                packed: bool = False, level_ancestor: str = "lifting",
                z: int | None = None) -> LceIndex:
    """Build every component at block length t_param (trie depth 2*t'),
    then drop all references to the text."""
    n = t.n
    tp = t_param if t_prime is None else t_prime
    if not (1 <= tp <= t_param <= n) or 2 * tp > n:
        raise ParamOutOfRange(
            f"need 1 <= t'={tp} <= t={t_param} <= n={n} and 2t' <= n")

    dc = build_difference_cover(t_param)
    cover = build_cover_index(dc, n)
    tree = _tst.build_tst(t, 2 * tp)
    _tst.mark_tgram_nodes(tree, tp)
    nav = _nav.build_navtree(t, tree, tp, level_ancestor=level_ancestor)
    if tp == t_param:
        ranks = _bc.rank_blocks(t, tree, nav, cover)
    else:
        ranks = _bc.rank_blocks_by_sort(t, nav, tree, cover)
    bc = _bc.build_blockcode(ranks, cover)
    _tst.compact_reference(tree, t)

    pk = None
    if packed:
        from . import packed as _packed

        pk = _packed.build_packed(t)

    stats = SpaceStats(
        tst_nodes=tree.node_count,
        tst_ref_len=len(tree.ref),
        nav_nodes=nav.node_count,
        sampled_count=len(nav.sampled),
        code_len=bc.code_len,
        estimated_words=estimated_words(
            tree.node_count, len(tree.ref), nav.node_count,
            len(nav.sampled), bc.code_len),
        z=z, n=n, t=t_param, t_prime=tp,
    )
    tree.leaf_of_pos = None   # transient build artifact; the index stays sub-linear
    return LceIndex(n=n, t=t_param, t_prime=tp, sigma=t.sigma,
                    sentinel=t.sentinel, tree=tree, nav=nav, bc=bc,
                    stats=stats, packed=pk)


def lce(ix: LceIndex, i: int, j: int) -> int:
    return ix.lce(i, j)


def truncated_leaf_counts(t: Text) -> tuple[np.ndarray, np.ndarray]:
    """One suffix-array pass enabling O(1) leaf-count probes for any depth:
    the q-clipped distinct-suffix count is n minus the LCP entries >= q."""
    sa = suffix_array(t.arr)
    lcp = lcp_array(t.arr, sa)
    return sa, lcp


def tune_tau(t: Text, budget: int = 64) -> int:
    """Pick a block length by doubling then binary search, comparing measured
    trie leaf counts against ceil(n/sqrt(t)); returns the probed value with
    the smallest weighted total TUNE_ALPHA*leaves + ceil(n/sqrt(t)).

    Never consults the factorization size; only measured structure sizes.
    """
    if t.n < 4:
        raise ParamOutOfRange("tuning needs n >= 4")
    n = t.n
    _, lcp = truncated_leaf_counts(t)

    def leaves(q: int) -> int:
        return int(n - np.count_nonzero(lcp >= q))

    def ceil_n_over_sqrt(q: int) -> int:
        return math.ceil(n / math.sqrt(q))

    probes: dict[int, int] = {}

    def probe(q: int) -> int:
        if q not in probes:
            probes[q] = leaves(q)
        return probes[q]

    lo = 1
    hi = 1
    while hi < n and probe(hi) < ceil_n_over_sqrt(hi) and len(probes) < budget:
        lo = hi
        hi = min(2 * hi, n)
    while hi - lo > 1 and len(probes) < budget:
        mid = (lo + hi) // 2
        if probe(mid) < ceil_n_over_sqrt(mid):
            lo = mid
        else:
            hi = mid

    best_t = min(probes, key=lambda q: (TUNE_ALPHA * probes[q] + ceil_n_over_sqrt(q), q))
    return best_t
