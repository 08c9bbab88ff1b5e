import struct

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lcex.container import dump_index, load_index, load_index_file, save_index
from lcex.errors import FormatError
from lcex.lce import build_index
from lcex.oracle import naive_lce_table
from lcex.textstore import load_text

from conftest import FIG_W, fib_word, random_text


def test_magic_and_version():
    text = load_text(FIG_W)
    blob = dump_index(build_index(text, 2))
    assert blob[:4] == b"LCEX"
    version, flags = struct.unpack("<HH", blob[4:8])
    assert version == 1
    assert flags == 0


def test_bad_magic_rejected():
    with pytest.raises(FormatError):
        load_index(b"XXXX" + b"\x00" * 64)


def test_bad_version_rejected():
    text = load_text(FIG_W)
    blob = bytearray(dump_index(build_index(text, 2)))
    blob[4:6] = struct.pack("<H", 999)
    with pytest.raises(FormatError):
        load_index(bytes(blob))


def test_truncated_rejected():
    text = load_text(FIG_W)
    blob = dump_index(build_index(text, 2))
    with pytest.raises(FormatError):
        load_index(blob[: len(blob) // 2])


def test_roundtrip_byte_identity():
    for raw, t, tp in [(FIG_W, 2, 2), (fib_word(800), 8, 8),
                       (random_text(300, 4, seed=0), 5, 2)]:
        text = load_text(raw)
        ix = build_index(text, t, tp)
        blob = dump_index(ix)
        assert dump_index(load_index(blob)) == blob


def test_reload_answers_identical():
    text = load_text(random_text(350, 2, seed=3))
    table = naive_lce_table(text)
    ix = build_index(text, 6)
    ix2 = load_index(dump_index(ix))
    for i in range(1, text.n + 1, 3):
        for j in range(1, text.n + 1, 5):
            assert ix2.lce(i, j) == int(table[i, j])


def test_packed_flag_roundtrip():
    text = load_text(b"ab" * 50)
    ix = build_index(text, 4, packed=True)
    blob = dump_index(ix)
    _, flags = struct.unpack("<HH", blob[4:8])
    assert flags & 1
    ix2 = load_index(blob)
    assert ix2.packed is not None
    for i in range(1, text.n + 1, 2):
        for j in range(1, text.n + 1, 3):
            assert ix2.packed.lce(i, j) == ix.packed.lce(i, j)
    assert dump_index(ix2) == blob


def test_ladder_mode_roundtrip():
    text = load_text(FIG_W)
    ix = build_index(text, 3, level_ancestor="ladder")
    ix2 = load_index(dump_index(ix))
    assert ix2.nav.mode == "ladder"
    table = naive_lce_table(text)
    for i in range(1, text.n + 1):
        for j in range(1, text.n + 1):
            assert ix2.lce(i, j) == int(table[i, j])


def test_file_roundtrip(tmp_path):
    text = load_text(FIG_W)
    ix = build_index(text, 2)
    path = tmp_path / "x.lcex"
    size = save_index(ix, str(path))
    assert path.stat().st_size == size
    ix2 = load_index_file(str(path))
    assert ix2.n == text.n


@settings(max_examples=20, deadline=None)
@given(st.binary(min_size=4, max_size=120), st.data())
def test_roundtrip_property(raw, data):
    text = load_text(raw)
    t = data.draw(st.integers(1, text.n))
    tp_hi = min(t, text.n // 2)
    if tp_hi < 1:
        return
    tp = data.draw(st.sampled_from([1, tp_hi]))
    ix = build_index(text, t, tp)
    blob = dump_index(ix)
    ix2 = load_index(blob)
    assert dump_index(ix2) == blob
    for _ in range(15):
        i = data.draw(st.integers(1, text.n))
        j = data.draw(st.integers(1, text.n))
        assert ix2.lce(i, j) == ix.lce(i, j)
