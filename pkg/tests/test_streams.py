import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streamdeg.piecewise import PiecewisePoly
from streamdeg.polynomials import Polynomial
from streamdeg.streams import (
    MalformedStreamError,
    parse_blocks,
    prefix_equal,
    ragged_equal,
    stream_prefix,
)

N = PiecewisePoly.from_poly(Polynomial((0, 1)))


def test_stream_of_identity():
    assert stream_prefix(N, 10) == "1101001000"


def test_stream_accepts_plain_callables():
    assert stream_prefix(lambda n: 2, 9) == "100100100"


def test_negative_size_rejected():
    with pytest.raises(MalformedStreamError):
        stream_prefix(lambda n: -1, 4)


def test_parse_blocks():
    seq = parse_blocks("1101001000")
    assert seq.sizes == (0, 1, 2)
    assert seq.trailing_partial == 3
    assert parse_blocks("").sizes == ()
    assert parse_blocks("").trailing_partial is None
    assert parse_blocks("1").trailing_partial == 0


def test_parse_blocks_rejects_bad_words():
    with pytest.raises(MalformedStreamError):
        parse_blocks("0101")
    with pytest.raises(MalformedStreamError):
        parse_blocks("1a0")


def test_prefix_equal_detects_late_divergence():
    f = lambda n: n
    g = lambda n: n if n < 5 else n + 1
    # streams diverge inside block 5, which starts at bit 15
    assert prefix_equal(f, g, 15)
    assert prefix_equal(f, g, 21)  # 1 0^5 vs 1 0^6: first mismatch at bit 21
    assert not prefix_equal(f, g, 22)


def test_ragged_equal():
    assert ragged_equal("10110", "101")
    assert not ragged_equal("10110", "100")
    assert ragged_equal("", "111")


sizes = st.lists(st.integers(0, 9), min_size=1, max_size=30)


@settings(deadline=None)
@given(sizes)
def test_parse_inverts_generation(vals):
    word = "".join("1" + "0" * v for v in vals)
    seq = parse_blocks(word)
    assert seq.sizes == tuple(vals[:-1])
    assert seq.trailing_partial == vals[-1]


@settings(deadline=None)
@given(sizes, st.integers(0, 40))
def test_stream_prefix_truncates(vals, bits):
    f = lambda n: vals[n % len(vals)]
    full = stream_prefix(f, bits)
    assert len(full) == bits
    assert full == stream_prefix(f, 40 + bits)[:bits]
