"""The 64-entry permutation pad built from a 16 KB seed."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .permutation import KEY_SIZE, Permutation, inverse, permutation_entropy_bits, permutation_from_key

PAD_SIZE = 64
SEED_SIZE = PAD_SIZE * KEY_SIZE  # 16384


def check_seed(seed: bytes) -> bytes:
    seed = bytes(seed)
    if len(seed) != SEED_SIZE:
        raise ValueError(f"seed must be exactly {SEED_SIZE} bytes, got {len(seed)}")
    return seed


@dataclass(frozen=True)
class QppPad:
    perms: tuple[Permutation, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        perms = tuple(self.perms)
        if not perms:
            raise ValueError("pad must hold at least one permutation")
        object.__setattr__(self, "perms", perms)

    def __len__(self):
        return len(self.perms)

    def __getitem__(self, index: int) -> Permutation:
        return self.perms[index]

    @property
    def table(self) -> np.ndarray:
        """(M, 256) uint8 lookup table, read-only."""
        if "table" not in self._cache:
            t = np.frombuffer(b"".join(p.map for p in self.perms), dtype=np.uint8)
            self._cache["table"] = t.reshape(len(self.perms), KEY_SIZE)
        return self._cache["table"]

    @property
    def inverse_table(self) -> np.ndarray:
        if "inverse_table" not in self._cache:
            t = np.frombuffer(b"".join(inverse(p).map for p in self.perms), dtype=np.uint8)
            self._cache["inverse_table"] = t.reshape(len(self.perms), KEY_SIZE)
        return self._cache["inverse_table"]


def pad_from_seed(seed: bytes) -> QppPad:
    seed = check_seed(seed)
    return QppPad(tuple(
        permutation_from_key(seed[m * KEY_SIZE:(m + 1) * KEY_SIZE]) for m in range(PAD_SIZE)
    ))


def dispatch_index(x: int) -> int:
    return (x & 0xFF) >> 2


def pad_entropy_bits(pad: QppPad) -> float:
    return len(pad) * permutation_entropy_bits(8)
