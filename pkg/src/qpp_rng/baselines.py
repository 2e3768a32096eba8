"""Reference generators: xorshift128+ (also the pad dispatcher) and a 64-bit LCG."""

from __future__ import annotations

import numpy as np

from . import _kernels

MASK64 = (1 << 64) - 1


class Xorshift128Plus:
    """Vigna's xorshift128+ with shift triple (23, 17, 26).

    ``next_u64`` steps the generator. ``bytes`` hands out each word's bytes
    lowest first and buffers the unused tail, so successive byte requests
    concatenate into one stream. The two views share the step function but
    not the byte buffer: ``next_u64`` never consumes buffered bytes.
    """

    def __init__(self, s0: int, s1: int):
        s0 &= MASK64
        s1 &= MASK64
        if s0 == 0 and s1 == 0:
            raise ValueError("xorshift128+ state must not be all zero")
        # [s0, s1, buffered word, buffered byte count]
        self._st = np.array([s0, s1, 0, 0], dtype=np.uint64)

    @property
    def state(self) -> tuple[int, int]:
        return int(self._st[0]), int(self._st[1])

    def copy(self) -> Xorshift128Plus:
        other = Xorshift128Plus(1, 0)
        other._st[:] = self._st
        return other

    def __eq__(self, other):
        if not isinstance(other, Xorshift128Plus):
            return NotImplemented
        return bool(np.array_equal(self._st, other._st))

    def __repr__(self):
        s0, s1 = self.state
        return f"Xorshift128Plus(s0={s0:#018x}, s1={s1:#018x})"

    def next_u64(self) -> int:
        out = np.empty(1, dtype=np.uint64)
        _kernels.xorshift_words(self._st, out)
        return int(out[0])

    def words(self, count: int) -> np.ndarray:
        out = np.empty(count, dtype=np.uint64)
        _kernels.xorshift_words(self._st, out)
        return out

    def bytes(self, count: int) -> bytes:
        if count < 0:
            raise ValueError("count must be non-negative")
        out = np.empty(count, dtype=np.uint8)
        _kernels.xorshift_bytes(self._st, out)
        return out.tobytes()


class Lcg:
    """64-bit LCG (Knuth's MMIX constants); output byte is state bits 32..39.

    Stands in for the platform C ``rand()`` as a weak but reproducible
    baseline.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_byte(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & MASK64
        return (self.state >> 32) & 0xFF

    def bytes(self, count: int) -> bytes:
        # Vectorised by squaring the affine map: lanes advance in parallel
        # with stride `lanes`, which reproduces the serial sequence exactly.
        if count <= 0:
            return b""
        if count < 4096:
            return bytes(self.next_byte() for _ in range(count))
        lanes = 4096
        start = np.empty(lanes, dtype=np.uint64)
        s = self.state
        for i in range(lanes):
            s = (s * self.MULTIPLIER + self.INCREMENT) & MASK64
            start[i] = s
        # affine map x -> a*x + c composed `lanes` times
        a, c = 1, 0
        for _ in range(lanes):
            a, c = (a * self.MULTIPLIER) & MASK64, (c * self.MULTIPLIER + self.INCREMENT) & MASK64
        rows = -(-count // lanes)
        out = np.empty((rows, lanes), dtype=np.uint8)
        cur = start
        am, cm = np.uint64(a), np.uint64(c)
        with np.errstate(over="ignore"):
            for r in range(rows):
                out[r] = (cur >> np.uint64(32)).astype(np.uint8)
                last = cur
                cur = cur * am + cm
        flat = out.reshape(-1)[:count]
        idx = count - 1 - (rows - 1) * lanes
        self.state = int(last[idx])
        return flat.tobytes()
