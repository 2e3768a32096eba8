"""Command-line interface: seed, gen, boost, unboost, test.

Exit codes: 0 success (``test``: chi-square p-value in [0.01, 0.99]),
2 statistical failure (``test`` only), 1 operational error.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import re
import sys
import tempfile

import numpy as np

from .booster import Booster
from .generator import Pqrng
from .pad import SEED_SIZE
from .stats import EntAccumulator

CHUNK = 1 << 20
EXIT_OK, EXIT_ERROR, EXIT_STAT_FAIL = 0, 1, 2

_SUFFIXES = {"": 1, "K": 1 << 10, "M": 1 << 20, "G": 1 << 30}


class CliError(Exception):
    pass


def parse_length(text: str) -> int:
    """Byte count with optional binary K/M/G suffix: '4K' == 4096."""
    m = re.fullmatch(r"\s*(\d+)\s*([kKmMgG]?)(?:i?[bB])?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"invalid length: {text!r}")
    return int(m.group(1)) * _SUFFIXES[m.group(2).upper()]


def load_seed(path: str) -> bytes:
    try:
        with open(path, "rb") as f:
            raw = f.read(4 * SEED_SIZE)
    except OSError as e:
        raise CliError(f"cannot read seed file {path}: {e.strerror}") from None
    if len(raw) == SEED_SIZE:
        return raw
    text = raw.strip()
    if len(text) == 2 * SEED_SIZE:
        try:
            return bytes.fromhex(text.decode("ascii"))
        except ValueError:
            pass
    raise CliError(f"seed file {path} must hold exactly {SEED_SIZE} raw bytes "
                   f"or {2 * SEED_SIZE} hex characters (got {len(raw)} bytes)")


def _read_chunks(path: str):
    if path == "-":
        f = sys.stdin.buffer
        close = False
    else:
        try:
            f = open(path, "rb")
        except OSError as e:
            raise CliError(f"cannot read input {path}: {e.strerror}") from None
        close = True
    try:
        while True:
            block = f.read(CHUNK)
            if not block:
                break
            yield np.frombuffer(block, dtype=np.uint8)
    finally:
        if close:
            f.close()


@contextlib.contextmanager
def _atomic_output(path: str):
    """Yield a writable binary file; a named file only appears on success."""
    if path == "-":
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qpp-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as f:
            yield f
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise


def cmd_seed(out: str) -> int:
    seed = os.urandom(SEED_SIZE)
    if len(seed) != SEED_SIZE:
        raise CliError("short read from the OS entropy source")
    with _atomic_output(out) as f:
        f.write(seed)
    return EXIT_OK


def cmd_gen(seed_path: str, length: int, out: str) -> int:
    gen = Pqrng(load_seed(seed_path))
    buf = np.empty(min(length, CHUNK), dtype=np.uint8)
    with _atomic_output(out) as f:
        remaining = length
        while remaining:
            view = buf[:min(remaining, CHUNK)]
            gen.fill_into(view)
            f.write(view.tobytes())
            remaining -= view.size
    return EXIT_OK


def _transform(seed_path: str, in_path: str, out: str, inverse: bool) -> int:
    booster = Booster(load_seed(seed_path))
    step = booster.unboost_into if inverse else booster.boost_into
    with _atomic_output(out) as f:
        for block in _read_chunks(in_path):
            result = np.empty_like(block)
            step(block, result)
            f.write(result.tobytes())
    return EXIT_OK


def cmd_boost(seed_path: str, in_path: str, out: str) -> int:
    return _transform(seed_path, in_path, out, inverse=False)


def cmd_unboost(seed_path: str, in_path: str, out: str) -> int:
    return _transform(seed_path, in_path, out, inverse=True)


def cmd_test(in_path: str, fmt: str = "text") -> int:
    acc = EntAccumulator()
    for block in _read_chunks(in_path):
        acc.update(block)
    if acc.n < 6:
        raise CliError(f"test needs at least 6 bytes of input, got {acc.n}")
    report = acc.report()
    print(report.to_json() if fmt == "machine" else report.to_text())
    return EXIT_OK if report.passes_chi_square() else EXIT_STAT_FAIL


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for statistical failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qpp-rng", description="Permutation-pad random byte generator")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seed", help="write a fresh 16384-byte seed from the OS entropy source")
    s.add_argument("--out", required=True, help="output path or - for stdout")

    g = sub.add_parser("gen", help="generate a raw pseudo-random byte stream")
    g.add_argument("--seed", required=True)
    g.add_argument("--length", required=True, type=parse_length, help="bytes; K/M/G suffixes allowed")
    g.add_argument("--out", default="-")

    for name, text in (("boost", "boost/whiten an input stream"), ("unboost", "invert a boosted stream")):
        b = sub.add_parser(name, help=text)
        b.add_argument("--seed", required=True)
        b.add_argument("--in", dest="input", default="-")
        b.add_argument("--out", default="-")

    t = sub.add_parser("test", help="run the ENT-style battery on a byte stream")
    t.add_argument("--in", dest="input", default="-")
    t.add_argument("--format", choices=("text", "machine"), default="text")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "seed":
            return cmd_seed(args.out)
        if args.command == "gen":
            return cmd_gen(args.seed, args.length, args.out)
        if args.command == "boost":
            return cmd_boost(args.seed, args.input, args.out)
        if args.command == "unboost":
            return cmd_unboost(args.seed, args.input, args.out)
        return cmd_test(args.input, args.format)
    except (CliError, OSError) as e:
        print(f"qpp-rng: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
