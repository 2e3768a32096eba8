"""Boost biased streams and compare ENT reports before and after.

    python scripts/booster_demo.py --size 10M [--text FILE]

Inputs: English text (the bundled sample, repeated, unless --text is
given) and the low byte of the LCG, which alone fails chi-square badly.
"""

import argparse
import os
import pathlib

from qpp_rng import Booster
from qpp_rng.cli import parse_length
from qpp_rng.stats import ent_report

from ent_comparison import lcg_low_bytes

SAMPLE = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "english.txt"


def table(title, before, after):
    print(f"\n{title}")
    print(f"{'ENT':<20}{'input':>18}{'+ booster':>18}")
    for label, attr, fmt in [
        ("Entropy (bits)", "entropy_bits_per_byte", "{:.6f}"),
        ("Chi Square", "chi_square", "{:.2f}"),
        ("p-Value", "chi_p_value", "{:.4f}"),
        ("Arith. Mean", "arithmetic_mean", "{:.4f}"),
        ("Monte Carlo π", "monte_carlo_pi", "{:.9f}"),
        ("Serial Corr.", "serial_correlation", "{:.6f}"),
    ]:
        b, a = getattr(before, attr), getattr(after, attr)
        print(f"{label:<20}{fmt.format(b):>18}{fmt.format(a):>18}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=parse_length, default=parse_length("10M"))
    ap.add_argument("--text", type=pathlib.Path, default=SAMPLE)
    args = ap.parse_args()

    seed = os.urandom(16384)
    text = args.text.read_bytes()
    text = (text * (-(-args.size // len(text))))[:args.size]
    boosted = Booster(seed).boost(text)
    assert Booster(seed).unboost(boosted) == text
    table(f"English text, {len(text)} bytes", ent_report(text), ent_report(boosted))

    weak = lcg_low_bytes(12345, args.size).tobytes()
    table(f"LCG low byte, {len(weak)} bytes", ent_report(weak), ent_report(Booster(seed).boost(weak)))


if __name__ == "__main__":
    main()
