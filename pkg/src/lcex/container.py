"""Versioned binary container for a built index.

Layout: magic "LCEX", version u16, flags u16, then length-prefixed sections
in fixed order (params, tst, navtree, blockcode, stats, and a packed section
when flag bit 0 is set).  All integers are fixed-width little-endian.  Arrays
carry a dtype tag chosen deterministically from their value range, so
serialize(load(b)) reproduces b byte for byte.  Derived structures (sparse
tables, lifting tables, child maps) are rebuilt on load.
"""

from __future__ import annotations

import io
import struct

import numpy as np

from .errors import FormatError

MAGIC = b"LCEX"
VERSION = 1
FLAG_PACKED = 1

_DTYPES = {
    0: np.uint8, 1: np.uint16, 2: np.uint32, 3: np.uint64,
    4: np.int8, 5: np.int16, 6: np.int32, 7: np.int64,
}


def _pick_dtype(lo: int, hi: int) -> int:
    if lo >= 0:
        for code, top in ((0, 1 << 8), (1, 1 << 16), (2, 1 << 32)):
            if hi < top:
                return code
        return 3
    for code, bits in ((4, 8), (5, 16), (6, 32)):
        if -(1 << (bits - 1)) <= lo and hi < (1 << (bits - 1)):
            return code
    return 7


class _Writer:
    def __init__(self):
        self.buf = io.BytesIO()

    def u8(self, v): self.buf.write(struct.pack("<B", v))
    def u16(self, v): self.buf.write(struct.pack("<H", v))
    def u64(self, v): self.buf.write(struct.pack("<Q", v))
    def i64(self, v): self.buf.write(struct.pack("<q", v))

    def array(self, values) -> None:
        arr = np.asarray(values)
        if arr.size == 0:
            code = 0
        else:
            code = _pick_dtype(int(arr.min()), int(arr.max()))
        out = arr.astype(_DTYPES[code])
        self.u8(code)
        self.u64(out.size)
        self.buf.write(out.astype(out.dtype.newbyteorder("<")).tobytes())

    def getvalue(self) -> bytes:
        return self.buf.getvalue()


class _Reader:
    def __init__(self, data: bytes):
        self.buf = io.BytesIO(data)

    def _read(self, n: int) -> bytes:
        b = self.buf.read(n)
        if len(b) != n:
            raise FormatError("truncated container")
        return b

    def u8(self): return struct.unpack("<B", self._read(1))[0]
    def u16(self): return struct.unpack("<H", self._read(2))[0]
    def u64(self): return struct.unpack("<Q", self._read(8))[0]
    def i64(self): return struct.unpack("<q", self._read(8))[0]

    def array(self) -> np.ndarray:
        code = self.u8()
        if code not in _DTYPES:
            raise FormatError(f"bad array dtype tag {code}")
        count = self.u64()
        dt = np.dtype(_DTYPES[code]).newbyteorder("<")
        raw = self._read(count * dt.itemsize)
        return np.frombuffer(raw, dtype=dt).astype(_DTYPES[code])


def _section(parts: _Writer) -> bytes:
    payload = parts.getvalue()
    return struct.pack("<Q", len(payload)) + payload


def _write_blockcode_payload(w: _Writer, bc) -> None:
    w.u64(bc.t)
    w.u64(bc.n)
    w.array(bc.code)
    w.array(bc.sa)
    w.array(bc.isa)
    w.array(bc.lcp)


def _read_blockcode(r: _Reader):
    from .blockcode import BlockCode
    from .diffcover import build_cover_index, build_difference_cover

    t = r.u64()
    n = r.u64()
    code = r.array().astype(np.int64)
    sa = r.array().astype(np.int64)
    isa = r.array().astype(np.int64)
    lcp = r.array().astype(np.int64)
    cover = build_cover_index(build_difference_cover(t), n)
    bc = BlockCode.__new__(BlockCode)
    bc.t, bc.n, bc.cover, bc.code = t, n, cover, code
    bc.sa, bc.isa, bc.lcp = sa, isa, lcp
    from .suffixes import SparseMin

    bc.rmq = SparseMin(lcp) if len(code) else None
    bc._isa_list = isa.tolist()
    bc._code_list = code.tolist()
    return bc


def dump_index(ix) -> bytes:
    """Serialize a built index to bytes."""
    flags = FLAG_PACKED if ix.packed is not None else 0
    out = io.BytesIO()
    out.write(MAGIC)
    out.write(struct.pack("<HH", VERSION, flags))

    w = _Writer()
    w.u64(ix.n)
    w.u64(ix.t)
    w.u64(ix.t_prime)
    w.u64(ix.sigma)
    w.u64(ix.sentinel)
    w.u8(1 if ix.nav.mode == "ladder" else 0)
    out.write(_section(w))

    tree = ix.tree
    w = _Writer()
    w.u64(tree.q)
    w.u64(tree.n)
    w.array(tree.parent)
    w.array(tree.sdepth)
    w.array(tree.estart)
    w.array(tree.elen)
    w.array(tree.leaves)
    w.array(tree.leaf_lcp)
    w.array(tree.tgram_rank if tree.tgram_rank is not None else [])
    w.i64(tree.tgram_depth if tree.tgram_depth is not None else -1)
    w.u64(tree.tgram_count)
    w.u64(tree.inserted_nodes)
    w.array(tree.ref)
    out.write(_section(w))

    nav = ix.nav
    w = _Writer()
    w.u64(nav.t)
    w.u64(nav.n)
    w.array([p if p >= 0 else nav.root for p in nav.parent])
    w.u64(nav.root)
    w.array(nav.sampled)
    out.write(_section(w))

    w = _Writer()
    _write_blockcode_payload(w, ix.bc)
    out.write(_section(w))

    st = ix.stats
    w = _Writer()
    for v in (st.tst_nodes, st.tst_ref_len, st.nav_nodes, st.sampled_count,
              st.code_len, st.estimated_words):
        w.u64(v)
    w.i64(st.z if st.z is not None else -1)
    w.u64(st.n)
    w.u64(st.t)
    w.u64(st.t_prime)
    out.write(_section(w))

    if ix.packed is not None:
        pk = ix.packed
        w = _Writer()
        w.u64(pk.pt.n)
        w.u64(pk.pt.b)
        w.u64(pk.pt.word_size)
        w.u64(pk.pt.nbits)
        w.array(np.frombuffer(pk.pt.bits, dtype=np.uint8))
        _write_blockcode_payload(w, pk.bc)
        out.write(_section(w))

    return out.getvalue()


def load_index(data: bytes):
    """Rebuild an index from container bytes."""
    from .lce import LceIndex, SpaceStats
    from .navtree import NavTree
    from .tst import TruncatedSuffixTree

    if data[:4] != MAGIC:
        raise FormatError("bad magic")
    version, flags = struct.unpack("<HH", data[4:8])
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    cursor = io.BytesIO(data[8:])

    def section() -> _Reader:
        hdr = cursor.read(8)
        if len(hdr) != 8:
            raise FormatError("missing section")
        (length,) = struct.unpack("<Q", hdr)
        return _Reader(cursor.read(length))

    r = section()
    n = r.u64()
    t = r.u64()
    t_prime = r.u64()
    sigma = r.u64()
    sentinel = r.u64()
    mode = "ladder" if r.u8() else "lifting"

    r = section()
    tree = TruncatedSuffixTree(q=r.u64(), n=r.u64())
    tree.parent = r.array().astype(np.int64).tolist()
    tree.parent[0] = -1
    tree.sdepth = r.array().astype(np.int64).tolist()
    tree.estart = r.array().astype(np.int64).tolist()
    tree.elen = r.array().astype(np.int64).tolist()
    tree.leaves = r.array().astype(np.int64).tolist()
    tree.leaf_lcp = r.array().astype(np.int64).tolist()
    tg = r.array().astype(np.int64).tolist()
    tgd = r.i64()
    tree.tgram_rank = tg if tg else None
    tree.tgram_depth = tgd if tgd >= 0 else None
    tree.tgram_count = r.u64()
    tree.inserted_nodes = r.u64()
    tree.ref = r.array()
    tree.ref_is_private = True
    tree.node_repr = [0] * len(tree.parent)
    tree._rebuild_children()
    tree._finalize_lca()

    r = section()
    nav_t = r.u64()
    nav_n = r.u64()
    parent = r.array().astype(np.int64).tolist()
    root = r.u64()
    parent[root] = -1
    sampled = r.array().astype(np.int64).tolist()
    nav = NavTree(t=nav_t, n=nav_n, parent=parent, root=root, sampled=sampled,
                  level_ancestor=mode)

    r = section()
    bc = _read_blockcode(r)

    r = section()
    vals = [r.u64() for _ in range(6)]
    z = r.i64()
    stats = SpaceStats(
        tst_nodes=vals[0], tst_ref_len=vals[1], nav_nodes=vals[2],
        sampled_count=vals[3], code_len=vals[4], estimated_words=vals[5],
        z=None if z < 0 else z, n=r.u64(), t=r.u64(), t_prime=r.u64(),
    )

    packed_obj = None
    if flags & FLAG_PACKED:
        from .packed import PackedLce, PackedText

        r = section()
        pn = r.u64()
        b = r.u64()
        word = r.u64()
        nbits = r.u64()
        bits = r.array().tobytes()
        pbc = _read_blockcode(r)
        pt = PackedText(bits=bits, b=b, n=pn, word_size=word, nbits=nbits)
        packed_obj = PackedLce(pt=pt, bc=pbc)

    return LceIndex(n=n, t=t, t_prime=t_prime, sigma=sigma, sentinel=sentinel,
                    tree=tree, nav=nav, bc=bc, stats=stats, packed=packed_obj)


def save_index(ix, path: str) -> int:
    blob = dump_index(ix)
    with open(path, "wb") as fh:
        fh.write(blob)
    return len(blob)


def load_index_file(path: str):
    with open(path, "rb") as fh:
        return load_index(fh.read())
