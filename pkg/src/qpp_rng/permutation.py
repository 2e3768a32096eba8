"""Byte permutations: the classical form of an 8-bit permutation gate.

A permutation is stored as a 256-entry substitution table ``map`` where
``map[i]`` is the image of byte ``i``. The matrix view ``P[i][map[i]] = 1``
is never materialised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

KEY_SIZE = 256


@dataclass(frozen=True)
class Permutation:
    map: bytes

    def __post_init__(self):
        m = bytes(self.map)
        if len(m) != KEY_SIZE or len(set(m)) != KEY_SIZE:
            raise ValueError("permutation map must be a bijection on 0..255")
        object.__setattr__(self, "map", m)

    @classmethod
    def identity(cls) -> Permutation:
        return cls(bytes(range(KEY_SIZE)))

    def __call__(self, b: int) -> int:
        return self.map[b]

    def inverse(self) -> Permutation:
        return inverse(self)


def permutation_from_key(key: bytes) -> Permutation:
    """Shuffle the identity with a 256-byte key, swapping S[k[i]] and S[i].

    The swap index is the key byte itself for every i from 255 down to 1,
    with no reduction modulo i + 1. That is not uniform Fisher-Yates, but
    every swap sequence still yields a bijection.
    """
    key = bytes(key)
    if len(key) != KEY_SIZE:
        raise ValueError(f"permutation key must be {KEY_SIZE} bytes, got {len(key)}")
    s = list(range(KEY_SIZE))
    for i in range(KEY_SIZE - 1, 0, -1):
        j = key[i]
        s[i], s[j] = s[j], s[i]
    return Permutation(bytes(s))


def apply(perm: Permutation, b: int) -> int:
    return perm.map[b]


def inverse(perm: Permutation) -> Permutation:
    inv = bytearray(KEY_SIZE)
    for i, v in enumerate(perm.map):
        inv[v] = i
    return Permutation(bytes(inv))


def permutation_entropy_bits(n: int) -> float:
    """log2((2**n)!) summed term by term, for bit widths 1..16."""
    if not 1 <= n <= 16:
        raise ValueError(f"bit width must be in 1..16, got {n}")
    return math.fsum(math.log2(k) for k in range(1, (1 << n) + 1))
