"""Side-by-side ENT battery for the pad generator and the two baselines.

    python scripts/ent_comparison.py --size 100M

The LCG low-byte column takes bits 0..7 of the state, which cycle with
period 256; it shows the chi-square p = 1.0 "too uniform" failure.
"""

import argparse
import os

import numpy as np

from qpp_rng import Lcg, Pqrng, Xorshift128Plus
from qpp_rng.cli import parse_length
from qpp_rng.stats import EntAccumulator, monobit_frequency

CHUNK = 1 << 22


def lcg_low_bytes(seed, n):
    out = np.empty(n, dtype=np.uint8)
    s = seed
    # the low byte of an LCG mod 2^64 depends only on the low byte of the state
    a, c = Lcg.MULTIPLIER & 0xFF, Lcg.INCREMENT & 0xFF
    cycle = np.empty(256, dtype=np.uint8)
    for i in range(256):
        s = (s * a + c) & 0xFF
        cycle[i] = s
    reps = -(-n // 256)
    out[:] = np.tile(cycle, reps)[:n]
    return out


def run(source, size):
    acc = EntAccumulator()
    ones_p = None
    left = size
    while left:
        block = source(min(left, CHUNK))
        if ones_p is None:
            ones_p = monobit_frequency(block)
        acc.update(block)
        left -= len(block)
    return acc.report(), ones_p


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=parse_length, default=parse_length("100M"))
    args = ap.parse_args()

    gen = Pqrng(os.urandom(16384))
    xs = Xorshift128Plus(int.from_bytes(os.urandom(8), "little") | 1, int.from_bytes(os.urandom(8), "little"))
    lcg = Lcg(int.from_bytes(os.urandom(8), "little"))
    low_state = [0]

    def low(n):
        block = lcg_low_bytes(low_state[0], n)
        low_state[0] = int(block[-1])
        return block

    columns = {
        "LCG (bits 32-39)": lcg.bytes,
        "LCG (low byte)": low,
        "xorshift128+": xs.bytes,
        "pad generator": gen.fill,
    }
    results = {name: run(src, args.size) for name, src in columns.items()}

    rows = [
        ("Entropy (bits)", lambda r: f"{r.entropy_bits_per_byte:.6f}"),
        ("Chi Square", lambda r: f"{r.chi_square:.2f}"),
        ("p-Value", lambda r: f"{r.chi_p_value:.2f}"),
        ("Arith. Mean", lambda r: f"{r.arithmetic_mean:.4f}"),
        ("Monte Carlo π", lambda r: f"{r.monte_carlo_pi:.9f}"),
        ("Serial Correlation", lambda r: f"{r.serial_correlation:.6f}"),
    ]
    print(f"{args.size} bytes per column\n")
    print(f"{'ENT':<20}" + "".join(f"{n:>20}" for n in columns))
    for label, fmt in rows:
        print(f"{label:<20}" + "".join(f"{fmt(results[n][0]):>20}" for n in columns))
    print(f"{'Monobit p (4 MiB)':<20}" + "".join(f"{results[n][1]:>20.4f}" for n in columns))
    print(f"{'chi p in [.01,.99]':<20}" + "".join(
        f"{'pass' if results[n][0].passes_chi_square() else 'FAIL':>20}" for n in columns))


if __name__ == "__main__":
    main()
