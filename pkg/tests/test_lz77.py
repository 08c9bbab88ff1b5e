import random

import pytest
from hypothesis import given, settings, strategies as st

from lcex.lz77 import Copy, Literal, decode_factors, lz77_factorize
from lcex.textstore import load_text

from conftest import EXAMPLE_W


def brute_lpf(s: bytes, i: int) -> int:
    """Longest prefix of s[i:] occurring at some earlier start (overlaps ok)."""
    best = 0
    for src in range(i):
        l = 0
        while i + l < len(s) and s[src + l] == s[i + l]:
            l += 1
        best = max(best, l)
    return best


def brute_factor_count(s: bytes) -> int:
    i, z = 0, 0
    while i < len(s):
        l = brute_lpf(s, i)
        i += max(1, l)
        z += 1
    return z


def test_example_factorization():
    t = load_text(EXAMPLE_W)
    f = lz77_factorize(t)
    assert f.z == 6
    assert f.z_total == 7
    strs = f.factor_strings(t)
    assert strs[:6] == [b"a", b"b", b"abab", b"c", b"abababcabababc", b"d"]
    assert isinstance(f.factors[-1], Literal)


def test_unary_run():
    t = load_text(b"a" * 64)
    f = lz77_factorize(t)
    assert f.z == 2
    assert f.factors[0] == Literal(symbol=int(t.arr[0]))
    assert f.factors[1] == Copy(src=1, length=63)


def test_random_matches_quadratic_scan():
    rng = random.Random(0)
    raw = bytes(rng.choice(b"abc") for _ in range(512))
    t = load_text(raw)
    f = lz77_factorize(t)
    s = bytes(t.symbols())
    pos = 0
    for fac in f.factors:
        l = brute_lpf(s, pos)
        if isinstance(fac, Literal):
            assert l == 0
            pos += 1
        else:
            assert fac.length == l, pos
            pos += fac.length
    assert pos == t.n


@settings(max_examples=40, deadline=None)
@given(st.binary(min_size=1, max_size=400))
def test_factors_reconstruct_text(raw):
    t = load_text(raw)
    f = lz77_factorize(t)
    assert decode_factors(f) == t.symbols()


@settings(max_examples=25, deadline=None)
@given(st.binary(min_size=1, max_size=200))
def test_greedy_maximality(raw):
    t = load_text(raw)
    f = lz77_factorize(t)
    s = bytes(t.symbols())
    pos = 0
    for fac in f.factors:
        if isinstance(fac, Copy):
            assert fac.length == brute_lpf(s, pos)
            assert fac.src <= pos  # 1-based src begins strictly earlier
            assert s[fac.src - 1 : fac.src - 1 + fac.length] == s[pos : pos + fac.length]
            pos += fac.length
        else:
            pos += 1


@settings(max_examples=30, deadline=None)
@given(st.binary(min_size=1, max_size=150))
def test_factor_count_matches_greedy_scan(raw):
    t = load_text(raw)
    s = bytes(t.symbols())
    assert lz77_factorize(t).z_total == brute_factor_count(s)


@pytest.mark.parametrize("raw", [b"abcab", b"aabbaabb", b"xyzzyx", b"a" * 17, b"ababab"])
def test_doubling_growth_bound(raw):
    z1 = lz77_factorize(load_text(raw)).z
    z2 = lz77_factorize(load_text(raw + raw)).z
    assert z2 <= z1 + 2
