"""Compiled inner loops.

The generator and booster are byte-serial (each output feeds the next
input), so they cannot be vectorised; numba keeps them at native speed.

Dispatcher state is passed as a uint64 array ``[s0, s1, buffered_word,
buffered_count]`` so that partial words survive across calls.
"""

import numpy as np
from numba import njit

_U8 = np.uint64(8)
_U17 = np.uint64(17)
_U23 = np.uint64(23)
_U26 = np.uint64(26)
_FF = np.uint64(0xFF)
_ONE = np.uint64(1)


@njit(cache=True, inline="always")
def _step(st):
    x = st[0]
    y = st[1]
    st[0] = y
    x ^= x << _U23
    s1 = x ^ y ^ (x >> _U17) ^ (y >> _U26)
    st[1] = s1
    return s1 + y


@njit(cache=True, inline="always")
def _next_dispatch_byte(st):
    if st[3] == 0:
        st[2] = _step(st)
        st[3] = _U8
    b = st[2] & _FF
    st[2] >>= _U8
    st[3] -= _ONE
    return b


@njit(cache=True)
def xorshift_words(st, out):
    for i in range(out.shape[0]):
        out[i] = _step(st)


@njit(cache=True)
def xorshift_bytes(st, out):
    for i in range(out.shape[0]):
        out[i] = np.uint8(_next_dispatch_byte(st))


@njit(cache=True)
def pqrng_fill(table, st, counter, feedback, out):
    """Fill ``out`` in place; return the updated (counter, feedback)."""
    c = np.uint64(counter)
    fb = np.uint8(feedback)
    for i in range(out.shape[0]):
        x = _next_dispatch_byte(st)
        v = table[x >> np.uint64(2), np.uint8(c & _FF) ^ fb]
        out[i] = v
        fb = v
        c += _ONE
    return c, fb


@njit(cache=True)
def boost(table, st, counter, feedback, data, out):
    c = np.uint64(counter)
    fb = np.uint8(feedback)
    for i in range(data.shape[0]):
        x = _next_dispatch_byte(st)
        v = table[x >> np.uint64(2), data[i] ^ np.uint8(c & _FF) ^ fb]
        out[i] = v
        fb = v
        c += _ONE
    return c, fb


@njit(cache=True)
def unboost(inverse_table, st, counter, feedback, data, out):
    c = np.uint64(counter)
    fb = np.uint8(feedback)
    for i in range(data.shape[0]):
        x = _next_dispatch_byte(st)
        v = data[i]
        out[i] = inverse_table[x >> np.uint64(2), v] ^ np.uint8(c & _FF) ^ fb
        fb = v
        c += _ONE
    return c, fb


@njit(cache=True)
def serial_and_pi_sums(data, prev, carry, carry_len):
    """Partial sums for serial correlation and Monte Carlo pi over one chunk.

    ``prev`` is the last byte of the previous chunk (or -1 at the start);
    ``carry`` holds up to 5 leftover bytes of an incomplete 6-byte group.
    Returns (sum of x[i-1]*x[i], groups, inside, new carry length).
    """
    sxy = np.int64(0)
    p = np.int64(prev)
    for i in range(data.shape[0]):
        v = np.int64(data[i])
        if p >= 0:
            sxy += p * v
        p = v

    radius_sq = np.int64(0xFFFFFF) * np.int64(0xFFFFFF)
    groups = np.int64(0)
    inside = np.int64(0)
    buf = np.empty(6, np.int64)
    k = carry_len
    for j in range(k):
        buf[j] = carry[j]
    for i in range(data.shape[0]):
        buf[k] = data[i]
        k += 1
        if k == 6:
            x = (buf[0] << 16) | (buf[1] << 8) | buf[2]
            y = (buf[3] << 16) | (buf[4] << 8) | buf[5]
            groups += 1
            if x * x + y * y <= radius_sq:
                inside += 1
            k = 0
    for j in range(k):
        carry[j] = buf[j]
    return sxy, groups, inside, k
