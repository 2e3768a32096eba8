"""Pseudo-random byte generation and entropy boosting with a 64-entry permutation pad."""

from .baselines import Lcg, Xorshift128Plus
from .booster import Booster
from .generator import Pqrng
from .pad import PAD_SIZE, SEED_SIZE, QppPad, dispatch_index, pad_entropy_bits, pad_from_seed
from .permutation import Permutation, apply, inverse, permutation_entropy_bits, permutation_from_key
from .stats import EntAccumulator, EntReport, ent_report

__all__ = [
    "Booster", "EntAccumulator", "EntReport", "Lcg", "PAD_SIZE", "Permutation", "Pqrng",
    "QppPad", "SEED_SIZE", "Xorshift128Plus", "apply", "dispatch_index", "ent_report",
    "inverse", "pad_entropy_bits", "pad_from_seed", "permutation_entropy_bits",
    "permutation_from_key",
]
