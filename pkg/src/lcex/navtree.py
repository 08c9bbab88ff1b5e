"""Spanning-tree navigation over 2t-gram contexts: maps any position to its
trie leaf in O(1) and answers length-capped LCE queries.

Nodes are the leaves of the depth-2t truncated suffix tree.  Scanning the
text right to left, each position's node gets the next position's node as
parent on first visit; walking d ancestors from the node of a sampled
position deletes d leading characters, which recovers the node spelling at
least the first t characters of any position's context.
"""

from __future__ import annotations

import numpy as np

from .textstore import Text
from .tst import TruncatedSuffixTree


class NavTree:
    """Parent links over trie leaves plus level-ancestor and sampled pointers."""

    def __init__(self, t: int, n: int, parent: list[int], root: int,
                 sampled: list[int], level_ancestor: str = "lifting"):
        self.t = t
        self.n = n
        self.parent = parent
        self.root = root
        self.sampled = sampled
        self.mode = level_ancestor
        self.depth = self._compute_depths()
        self.lift = self._build_lifting()
        self.ladder_of: list[tuple[int, int]] | None = None
        self.ladders: list[list[int]] | None = None
        if level_ancestor == "ladder":
            self._build_ladders()
        elif level_ancestor != "lifting":
            raise ValueError(f"unknown level-ancestor mode {level_ancestor!r}")
        # numpy mirrors for the batch query path
        self.sampled_np = np.asarray(sampled, dtype=np.int64)
        self.lift_np = np.asarray(self.lift, dtype=np.int64)

    @property
    def node_count(self) -> int:
        return len(self.parent)

    def _compute_depths(self) -> list[int]:
        depth = [-1] * len(self.parent)
        depth[self.root] = 0
        for v in range(len(self.parent)):
            if depth[v] >= 0:
                continue
            path = []
            u = v
            while depth[u] < 0:
                path.append(u)
                u = self.parent[u]
            d = depth[u]
            for w in reversed(path):
                d += 1
                depth[w] = d
        return depth

    def _build_lifting(self) -> list[list[int]]:
        levels = max(1, max(self.depth).bit_length())
        up = [list(self.parent)]
        up[0][self.root] = self.root
        for k in range(1, levels):
            prev = up[-1]
            up.append([prev[prev[v]] for v in range(len(prev))])
        return up

    def _build_ladders(self) -> None:
        """Long-path decomposition, each path doubled upward; with the jump
        table this answers level-ancestor queries in O(1)."""
        n_nodes = len(self.parent)
        children: list[list[int]] = [[] for _ in range(n_nodes)]
        for v in range(n_nodes):
            if v != self.root:
                children[self.parent[v]].append(v)
        height = [0] * n_nodes
        order = sorted(range(n_nodes), key=self.depth.__getitem__, reverse=True)
        heavy = [-1] * n_nodes
        for v in order:
            for c in children[v]:
                if height[c] + 1 > height[v]:
                    height[v] = height[c] + 1
                    heavy[v] = c
        self.ladders = []
        self.ladder_of = [(-1, -1)] * n_nodes
        for v in order[::-1]:   # top-down
            if self.ladder_of[v][0] >= 0:
                continue
            path = []
            u = v
            while u >= 0:
                path.append(u)
                u = heavy[u]
            # extend upward by the path's own length
            top = self.parent[v] if v != self.root else -1
            ext = []
            u = top
            while u >= 0 and len(ext) < len(path):
                ext.append(u)
                u = self.parent[u] if u != self.root else -1
                if ext and ext[-1] == self.root:
                    break
            ladder = list(reversed(ext)) + path
            lid = len(self.ladders)
            self.ladders.append(ladder)
            base = len(ext)
            for k, u2 in enumerate(path):
                if self.ladder_of[u2][0] < 0:
                    self.ladder_of[u2] = (lid, base + k)

    def level_ancestor(self, v: int, d: int) -> int:
        """The d-th ancestor of v; d must not exceed depth(v)."""
        if d == 0:
            return v
        if self.mode == "ladder":
            k = d.bit_length() - 1
            v = self.lift[k][v]
            d -= 1 << k
            if d == 0:
                return v
            lid, idx = self.ladder_of[v]
            return self.ladders[lid][idx - d]
        k = 0
        while d:
            if d & 1:
                v = self.lift[k][v]
            d >>= 1
            k += 1
        return v

    def locate(self, i: int) -> int:
        """Leaf (by lex rank) whose string starts with w[i..i+t-1], clipped."""
        t = self.t
        k = (i - 1) // t
        d = i - 1 - k * t
        return self.level_ancestor(self.sampled[k], d)


def build_navtree(t: Text, tree: TruncatedSuffixTree, blk: int,
                  level_ancestor: str = "lifting") -> NavTree:
    """Spanning tree over the 2*blk-gram graph, built by one right-to-left scan.

    parent(node at i) = node at i+1, assigned at the rightmost occurrence;
    every node is some position's context, so the relation is a tree rooted
    at the sentinel node.
    """
    if tree.q != 2 * blk:
        raise ValueError("navigation tree needs a trie of depth exactly 2*blk")
    if tree.leaf_of_pos is None:
        raise ValueError("trie is missing its transient position map")
    n = t.n
    lop = tree.leaf_of_pos.tolist()
    parent = [-1] * tree.leaf_count
    root = lop[n - 1]
    for i in range(n - 2, -1, -1):
        u = lop[i]
        if parent[u] < 0 and u != root:
            parent[u] = lop[i + 1]
    sampled = [lop[k] for k in range(0, n, blk)]
    return NavTree(t=blk, n=n, parent=parent, root=root, sampled=sampled,
                   level_ancestor=level_ancestor)


def short_lce(nav: NavTree, tree: TruncatedSuffixTree, i: int, j: int) -> int:
    """min(LCE(i, j), t) via two leaf locates and one LCA depth."""
    u = nav.locate(i)
    v = nav.locate(j)
    if u == v:
        return min(tree.sdepth[tree.leaves[u]], nav.t)
    return min(tree.lca_prefix_len(u, v), nav.t)
