"""Deterministic pad-based byte generator.

Each step XORs the low counter byte with the previous output, then
substitutes it through the pad entry chosen by the next dispatcher byte.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .baselines import MASK64, Xorshift128Plus
from .pad import QppPad, check_seed, pad_from_seed


def fold(seed: bytes, width: int) -> bytes:
    """XOR-fold ``seed`` into ``width`` bytes (lane i takes every byte j with j % width == i)."""
    a = np.frombuffer(seed, dtype=np.uint8)
    return np.bitwise_xor.reduce(a.reshape(-1, width), axis=0).tobytes()


def derive_dispatcher(seed: bytes) -> Xorshift128Plus:
    f = fold(seed, 16)
    s0 = int.from_bytes(f[:8], "little")
    s1 = int.from_bytes(f[8:], "little")
    if s0 == 0 and s1 == 0:
        s0 = 1
    return Xorshift128Plus(s0, s1)


def derive_counter(seed: bytes) -> int:
    return int.from_bytes(fold(seed, 8), "little")


def derive_feedback(seed: bytes) -> int:
    return int(np.bitwise_xor.reduce(np.frombuffer(seed, dtype=np.uint8)))


class Pqrng:
    """Byte stream generator keyed by a 16384-byte seed.

    Not thread-safe; use one instance per thread (distinct seeds for
    parallel streams).
    """

    def __init__(self, seed: bytes):
        seed = check_seed(seed)
        self.pad: QppPad = pad_from_seed(seed)
        self.dispatcher = derive_dispatcher(seed)
        self.counter = derive_counter(seed)
        self.feedback = derive_feedback(seed)

    @classmethod
    def from_parts(cls, pad: QppPad, dispatcher: Xorshift128Plus, counter: int, feedback: int) -> Pqrng:
        self = cls.__new__(cls)
        self.pad = pad
        self.dispatcher = dispatcher
        self.counter = counter & MASK64
        self.feedback = feedback & 0xFF
        return self

    def snapshot(self) -> Pqrng:
        return Pqrng.from_parts(self.pad, self.dispatcher.copy(), self.counter, self.feedback)

    def next_byte(self) -> int:
        return self.fill(1)[0]

    def fill_into(self, out: np.ndarray) -> None:
        c, fb = _kernels.pqrng_fill(self.pad.table, self.dispatcher._st, np.uint64(self.counter),
                                    np.uint8(self.feedback), out)
        self.counter = int(c)
        self.feedback = int(fb)

    def fill(self, length: int) -> bytes:
        if length < 0:
            raise ValueError("length must be non-negative")
        out = np.empty(length, dtype=np.uint8)
        self.fill_into(out)
        return out.tobytes()


def pqrng_new(seed: bytes) -> Pqrng:
    return Pqrng(seed)


def pqrng_next_byte(state: Pqrng) -> int:
    return state.next_byte()


def pqrng_fill(state: Pqrng, length: int) -> bytes:
    return state.fill(length)
