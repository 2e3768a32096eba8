"""Single-threaded generation and boosting throughput."""

import argparse
import os
import time

import numpy as np

from qpp_rng import Booster, Pqrng


def rate(fn, buf, rounds):
    fn(buf)  # JIT warm-up
    t0 = time.perf_counter()
    for _ in range(rounds):
        fn(buf)
    return rounds * buf.size / (time.perf_counter() - t0) / 1e6


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rounds", type=int, default=100)
    args = ap.parse_args()
    seed = os.urandom(16384)
    buf = np.empty(1 << 20, dtype=np.uint8)
    out = np.empty_like(buf)

    t0 = time.perf_counter()
    gen = Pqrng(seed)
    setup = time.perf_counter() - t0
    booster = Booster(seed)
    src = np.frombuffer(os.urandom(buf.size), dtype=np.uint8)

    print(f"pad construction: {setup * 1e3:.1f} ms")
    print(f"generate: {rate(gen.fill_into, buf, args.rounds):.0f} MB/s")
    print(f"boost:    {rate(lambda b: booster.boost_into(src, out), buf, args.rounds):.0f} MB/s")
    print(f"unboost:  {rate(lambda b: booster.unboost_into(src, out), buf, args.rounds):.0f} MB/s")


if __name__ == "__main__":
    main()
