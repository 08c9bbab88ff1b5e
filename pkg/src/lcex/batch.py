"""Vectorized query paths mirroring the scalar algorithms.

Every step of the scalar decomposition is a gather: leaf location walks the
lifting table bit by bit, the LCA depth is one sparse-table lookup over the
Euler tour, and the block-code reduction is arithmetic plus one more lookup.
Lanes that reach the boundary fallback or a chained capped call iterate under
a shrinking mask; iteration counts carry the same O(1) bounds as the scalar
code.
"""

from __future__ import annotations

import numpy as np

from .lce import LceIndex


def _locate_batch(ix: LceIndex, I: np.ndarray) -> np.ndarray:
    nav = ix.nav
    tp = nav.t
    k = (I - 1) // tp
    d = I - 1 - k * tp
    nodes = nav.sampled_np[k]
    lift = nav.lift_np
    bit = 0
    remaining = d.copy()
    while remaining.any():
        take = (remaining & 1).astype(bool)
        if take.any():
            nodes[take] = lift[bit][nodes[take]]
        remaining >>= 1
        bit += 1
    return nodes


def _leaf_sdepth_np(ix: LceIndex) -> np.ndarray:
    cache = getattr(ix, "_leaf_sdepth_np", None)
    if cache is None:
        sd = np.asarray(ix.tree.sdepth, dtype=np.int64)
        leaves = np.asarray(ix.tree.leaves, dtype=np.int64)
        cache = sd[leaves]
        ix._leaf_sdepth_np = cache
    return cache


def short_lce_batch(ix: LceIndex, I: np.ndarray, J: np.ndarray) -> np.ndarray:
    """min(LCE, t') for every lane, one locate pair + one LCA lookup each."""
    tree = ix.tree
    tp = ix.nav.t
    u = _locate_batch(ix, I)
    v = _locate_batch(ix, J)
    fa = tree.first_leaf[u]
    fb = tree.first_leaf[v]
    lo = np.minimum(fa, fb)
    hi = np.maximum(fa, fb)
    val = tree.tour_sparse.query_batch(lo, hi).astype(np.int64)
    same = u == v
    if same.any():
        val[same] = _leaf_sdepth_np(ix)[u[same]]
    return np.minimum(val, tp)


def short_chain_batch(ix: LceIndex, I: np.ndarray, J: np.ndarray, cap: int) -> np.ndarray:
    """Chained capped-LCE: advance active lanes by each t'-sized result.

    Diagonal lanes can consume their whole suffix, so lanes stop once the
    advanced position passes the end of the text.
    """
    tp = ix.t_prime
    n = ix.n
    total = np.zeros(len(I), dtype=np.int64)
    active = np.arange(len(I))
    while len(active):
        r = short_lce_batch(ix, I[active] + total[active], J[active] + total[active])
        total[active] += r
        adv = total[active]
        keep = (r == tp) & (adv < cap) & (I[active] + adv <= n) & (J[active] + adv <= n)
        active = active[keep]
    return np.minimum(total, cap)


def lce_batch(ix: LceIndex, I: np.ndarray, J: np.ndarray) -> np.ndarray:
    """Vectorized lce over position arrays; exact same answers as ix.lce."""
    I = np.asarray(I, dtype=np.int64)
    J = np.asarray(J, dtype=np.int64)
    n, t = ix.n, ix.t
    if len(I) and (I.min() < 1 or J.min() < 1 or I.max() > n or J.max() > n):
        from .errors import OutOfRange

        raise OutOfRange("batch positions out of [1..n]")
    ans = np.zeros(len(I), dtype=np.int64)

    diag = I == J
    ans[diag] = n - I[diag] + 1
    rest = np.flatnonzero(~diag)
    if not len(rest):
        return ans

    l1 = short_chain_batch(ix, I[rest], J[rest], t)
    done = l1 < t
    ans[rest[done]] = l1[done]
    rest = rest[~done]
    if not len(rest):
        return ans

    near = np.maximum(I[rest], J[rest]) > n - 2 * t - 1
    fall = rest[near]
    main = rest[~near]

    if len(main):
        Im, Jm = I[main], J[main]
        dc = ix.bc.cover.dc
        hdelta = getattr(ix, "_hdelta_np", None)
        if hdelta is None:
            hdelta = np.asarray(dc.hdelta, dtype=np.int64)
            ix._hdelta_np = hdelta
        delta = (hdelta[(Jm - Im) % t] - Im) % t
        l2 = ix.bc.long_lce_batch(Im + delta, Jm + delta)
        l3 = short_chain_batch(ix, Im + delta + t * l2, Jm + delta + t * l2, t)
        ans[main] = delta + t * l2 + l3

    if len(fall):
        s = np.full(len(fall), t, dtype=np.int64)
        active = np.arange(len(fall))
        while len(active):
            idx = fall[active]
            r = short_chain_batch(ix, I[idx] + s[active], J[idx] + s[active], t)
            s[active] += r
            active = active[r == t]
        ans[fall] = s

    return ans
