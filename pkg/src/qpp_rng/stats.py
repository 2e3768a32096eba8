"""Byte-level randomness battery in the style of Walker's ENT.

All accumulation is integer-exact; floats appear only when the final
statistics are formed, so chunked and one-shot runs agree bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _kernels

_POPCOUNT = np.array([bin(b).count("1") for b in range(256)], dtype=np.int64)


def _as_array(data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        return data.astype(np.uint8, copy=False).reshape(-1)
    return np.frombuffer(bytes(data), dtype=np.uint8)


def _histogram(a: np.ndarray) -> np.ndarray:
    return np.bincount(a, minlength=256).astype(np.int64)


# -- histogram statistics ------------------------------------------------

def _entropy_from_hist(hist, n: int) -> float:
    return -math.fsum((c / n) * math.log2(c / n) for c in hist if c)


def _chi_square_from_hist(hist, n: int) -> float:
    # sum (O - n/256)^2 / (n/256) == (256 * sum O^2 - n^2) / n, exact in ints
    sq = sum(int(c) * int(c) for c in hist)
    return (256 * sq - n * n) / n


def byte_entropy(data) -> float:
    """Shannon entropy of the byte histogram, in bits per byte."""
    a = _as_array(data)
    if a.size == 0:
        raise ValueError("byte_entropy needs at least one byte")
    return _entropy_from_hist(_histogram(a), a.size)


def chi_square_statistic(data) -> float:
    a = _as_array(data)
    if a.size == 0:
        raise ValueError("chi_square_statistic needs at least one byte")
    return _chi_square_from_hist(_histogram(a), a.size)


def arithmetic_mean(data) -> float:
    a = _as_array(data)
    if a.size == 0:
        raise ValueError("arithmetic_mean needs at least one byte")
    return int(a.sum(dtype=np.int64)) / a.size


# -- chi-square upper tail ---------------------------------------------------

_EPS = 1e-16
_TINY = 1e-300
_MAX_ITER = 100_000


def _gamma_p_series(a: float, x: float) -> float:
    term = total = 1.0 / a
    ap = a
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    else:
        raise ArithmeticError("incomplete gamma series did not converge")
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_q_continued_fraction(a: float, x: float) -> float:
    # modified Lentz evaluation
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    else:
        raise ArithmeticError("incomplete gamma continued fraction did not converge")
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def regularized_gamma_q(a: float, x: float) -> float:
    """Upper regularized incomplete gamma Q(a, x)."""
    if a <= 0:
        raise ValueError("a must be positive")
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return 1.0
    if x < a + 1.0:
        return max(0.0, 1.0 - _gamma_p_series(a, x))
    return min(1.0, _gamma_q_continued_fraction(a, x))


def chi_square_p_value(statistic: float, degrees_of_freedom: int = 255) -> float:
    if statistic < 0:
        raise ValueError("chi-square statistic must be non-negative")
    if degrees_of_freedom < 1:
        raise ValueError("degrees of freedom must be >= 1")
    return regularized_gamma_q(degrees_of_freedom / 2.0, statistic / 2.0)


# -- sequential statistics ---------------------------------------------------

def monte_carlo_pi(data) -> float:
    """4 * fraction of 6-byte groups whose (X, Y) 24-bit point lies in the quarter circle."""
    a = _as_array(data)
    if a.size < 6:
        raise ValueError("monte_carlo_pi needs at least 6 bytes")
    acc = EntAccumulator()
    acc.update(a)
    return 4.0 * acc.inside / acc.groups


def serial_correlation(data) -> float:
    """Lag-1 circular Pearson coefficient; 0.0 for constant data."""
    a = _as_array(data)
    if a.size < 2:
        raise ValueError("serial_correlation needs at least 2 bytes")
    acc = EntAccumulator()
    acc.update(a)
    return acc.serial_correlation()[0]


def monobit_frequency(data) -> float:
    """Frequency (monobit) test p-value: erfc(|#1 - #0| / sqrt(2n))."""
    a = _as_array(data)
    n = 8 * a.size
    if n < 100:
        raise ValueError("monobit_frequency needs at least 100 bits")
    ones = int(_histogram(a) @ _POPCOUNT)
    s = abs(2 * ones - n) / math.sqrt(n)
    return math.erfc(s / math.sqrt(2))


# -- report --------------------------------------------------------------------

REPORT_FIELDS = (
    "sample_bytes",
    "entropy_bits_per_byte",
    "chi_square",
    "chi_p_value",
    "arithmetic_mean",
    "monte_carlo_pi",
    "serial_correlation",
)


@dataclass(frozen=True)
class EntReport:
    sample_bytes: int
    entropy_bits_per_byte: float
    chi_square: float
    chi_p_value: float
    arithmetic_mean: float
    monte_carlo_pi: float
    serial_correlation: float
    # constant input: the correlation is undefined and reported as 0
    serial_degenerate: bool = field(default=False, compare=False)

    def passes_chi_square(self, lo: float = 0.01, hi: float = 0.99) -> bool:
        return lo <= self.chi_p_value <= hi

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in REPORT_FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> EntReport:
        return cls(**{k: d[k] for k in REPORT_FIELDS})

    def to_text(self) -> str:
        rows = [
            ("Sample (bytes)", f"{self.sample_bytes}"),
            ("Entropy (bits)", f"{self.entropy_bits_per_byte:.6f}"),
            ("Chi Square", f"{self.chi_square:.2f}"),
            ("p-Value", f"{self.chi_p_value:.2f}"),
            ("Arith. Mean", f"{self.arithmetic_mean:.4f}"),
            ("Monte Carlo π", f"{self.monte_carlo_pi:.9f}"),
            ("Serial Correlation", f"{self.serial_correlation:.6f}"
             + (" (undefined: constant input)" if self.serial_degenerate else "")),
        ]
        return "\n".join(f"{k:<20}{v}" for k, v in rows)


class EntAccumulator:
    """Streaming ENT statistics; feed chunks with ``update`` then call ``report``."""

    def __init__(self):
        self.n = 0
        self.hist = np.zeros(256, dtype=np.int64)
        self.first = -1
        self.last = -1
        self.sxy = 0
        self.groups = 0
        self.inside = 0
        self._carry = np.zeros(6, dtype=np.int64)
        self._carry_len = 0

    def update(self, data) -> None:
        a = _as_array(data)
        if a.size == 0:
            return
        if self.first < 0:
            self.first = int(a[0])
        self.hist += _histogram(a)
        sxy, groups, inside, self._carry_len = _kernels.serial_and_pi_sums(
            a, self.last, self._carry, self._carry_len)
        self.sxy += int(sxy)
        self.groups += int(groups)
        self.inside += int(inside)
        self.last = int(a[-1])
        self.n += a.size

    def serial_correlation(self) -> tuple[float, bool]:
        n = self.n
        values = np.arange(256, dtype=np.int64)
        s1 = int(self.hist @ values)
        s2 = int(self.hist @ (values * values))
        sxy = self.sxy + self.last * self.first
        den = n * s2 - s1 * s1
        if den == 0:
            return 0.0, True
        return (n * sxy - s1 * s1) / den, False

    def report(self) -> EntReport:
        n = self.n
        if n < 6:
            raise ValueError("ENT report needs at least 6 bytes")
        chi = _chi_square_from_hist(self.hist, n)
        scc, degenerate = self.serial_correlation()
        return EntReport(
            sample_bytes=n,
            entropy_bits_per_byte=_entropy_from_hist(self.hist, n),
            chi_square=chi,
            chi_p_value=chi_square_p_value(chi, 255),
            arithmetic_mean=int(self.hist @ np.arange(256, dtype=np.int64)) / n,
            monte_carlo_pi=4.0 * self.inside / self.groups,
            serial_correlation=scc,
            serial_degenerate=degenerate,
        )


def ent_report(data) -> EntReport:
    acc = EntAccumulator()
    acc.update(data)
    return acc.report()
