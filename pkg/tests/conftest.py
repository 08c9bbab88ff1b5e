import itertools
import random

import pytest

from lcex.textstore import load_text

# the worked example string and the figure string used throughout
EXAMPLE_W = b"abababcabababcabababcd"
FIG_W = b"baabbaabbaaabbaabba"


def fib_word(n: int) -> bytes:
    """Prefix of the infinite Fibonacci word over {a, b}."""
    s, p = b"a", b"b"
    while len(s) < n:
        s, p = s + p, s
    return s[:n]


def thue_morse(n: int) -> bytes:
    s = bytearray(b"a")
    comp = {ord("a"): ord("b"), ord("b"): ord("a")}
    while len(s) < n:
        s += bytes(comp[c] for c in s)
    return bytes(s[:n])


def random_text(n: int, sigma: int, seed: int) -> bytes:
    rng = random.Random(seed)
    alphabet = bytes(range(97, 97 + sigma))
    return bytes(rng.choice(alphabet) for _ in range(n))


def all_binary_strings(max_len: int):
    for L in range(1, max_len + 1):
        for bits in itertools.product(b"ab", repeat=L):
            yield bytes(bits)


def decode_syms(text, syms) -> bytes:
    """Internal symbol list back to original bytes (sentinel renders as $)."""
    if text.remap is None:
        return bytes(syms)
    return bytes(int(text.remap[s]) for s in syms)


def naive_lce_py(s: bytes, i: int, j: int) -> int:
    """Reference scan on raw python bytes, 1-based, sentinel already present."""
    n = len(s)
    k = 0
    while i - 1 + k < n and j - 1 + k < n and s[i - 1 + k] == s[j - 1 + k]:
        k += 1
    return k


@pytest.fixture(scope="session")
def fig_text():
    return load_text(FIG_W)


@pytest.fixture(scope="session")
def example_text():
    return load_text(EXAMPLE_W)
