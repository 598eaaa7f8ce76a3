"""Quantum arithmetic at the root of unity q = e^{2*pi*i/r}, r odd.

Quantum integers are evaluated as sine ratios,

    [n] = sin(2*pi*n/r) / sin(2*pi/r),

never as differences of q-powers, which cancel catastrophically for
n near r/2.  Everything downstream (quantum factorials, the brace
factorials {n}! = prod (q^k - q^{-k}), 6j-symbol terms) lives in a
log-magnitude representation because the factorials span hundreds of
orders of magnitude already at r ~ 1000.

Values that carry a sign or a factor of i are represented as
`QuarterPhaseLog`: a log-magnitude plus a phase in Z/4, so that the
i^{-sum(a)} prefactor and square roots of negative reals compose
exactly, with floating point confined to magnitudes.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

_NEG_INF = float("-inf")


@dataclass(frozen=True)
class OddLevel:
    """The level r of the root of unity q = e^{2*pi*i/r}; r odd, r >= 3."""

    r: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, (int, np.integer)):
            raise TypeError(f"level must be an integer, got {self.r!r}")
        if self.r < 3 or self.r % 2 == 0:
            raise ValueError(f"level must be odd and >= 3, got {self.r}")


def _level(level) -> OddLevel:
    """Coerce an int (or OddLevel) to OddLevel."""
    if isinstance(level, OddLevel):
        return level
    return OddLevel(int(level))


@dataclass(frozen=True)
class QuarterPhaseLog:
    """A number e^{log_mag} * i^{phase}, with phase in {0,1,2,3}.

    log_mag = -inf encodes exactly zero (phase normalized to 0).
    Multiplication adds log-magnitudes and adds phases mod 4.
    """

    log_mag: float
    phase: int

    def __post_init__(self) -> None:
        if self.log_mag == _NEG_INF:
            object.__setattr__(self, "phase", 0)
        else:
            object.__setattr__(self, "phase", self.phase % 4)

    @staticmethod
    def one() -> "QuarterPhaseLog":
        return QuarterPhaseLog(0.0, 0)

    @staticmethod
    def zero() -> "QuarterPhaseLog":
        return QuarterPhaseLog(_NEG_INF, 0)

    @staticmethod
    def from_real(x: float) -> "QuarterPhaseLog":
        if x == 0.0:
            return QuarterPhaseLog.zero()
        return QuarterPhaseLog(math.log(abs(x)), 0 if x > 0 else 2)

    def __mul__(self, other: "QuarterPhaseLog") -> "QuarterPhaseLog":
        if self.log_mag == _NEG_INF or other.log_mag == _NEG_INF:
            return QuarterPhaseLog.zero()
        return QuarterPhaseLog(self.log_mag + other.log_mag,
                               (self.phase + other.phase) % 4)

    @property
    def is_zero(self) -> bool:
        return self.log_mag == _NEG_INF

    def value(self) -> complex:
        """The represented complex number (overflows for large log_mag)."""
        if self.is_zero:
            return 0.0 + 0.0j
        return math.exp(self.log_mag) * (1j ** self.phase)

    def real_sign(self) -> int:
        """+1/-1/0 for a real-phased value; raises if the phase is odd."""
        if self.is_zero:
            return 0
        if self.phase == 0:
            return 1
        if self.phase == 2:
            return -1
        raise ValueError(f"value has imaginary phase {self.phase}")


class LevelTables:
    """Per-level prefix-sum caches, built once and then read-only.

    Arrays are indexed by n = 0 .. r-1:

      brace_prefix[n] = sum_{k=1..n} log|2 sin(2 pi k / r)|   (= log|{n}!|)
      logfact[n]      = sum_{k=1..n} log|[k]|                 (= log|[n]!|)
      negcount[n]     = #{k <= n : [k] < 0}

    [k] < 0 exactly for k > r/2 (r odd, so never equality); the n = r-1
    slot exists because Delta denominators reach [T+1]! with T+1 = r-1
    and the 6j z-sum queries [z+1]! at z = r-2.
    """

    def __init__(self, level: OddLevel):
        r = level.r
        self.level = level
        k = np.arange(0, r, dtype=np.float64)  # 0..r-1
        with np.errstate(divide="ignore"):
            log2sin = np.log(np.abs(2.0 * np.sin(TWO_PI * k / r)))
        log2sin[0] = 0.0  # unused slot; keeps cumsum aligned
        self.brace_prefix = np.cumsum(log2sin)
        log_sin1 = math.log(2.0 * math.sin(TWO_PI / r))
        self.logfact = self.brace_prefix - k * log_sin1
        self.negcount = np.cumsum(np.arange(0, r) > r / 2).astype(np.int64)

    def fact(self, n: int) -> tuple[float, int]:
        """(log|[n]!|, sign parity) for 0 <= n <= r-1."""
        return float(self.logfact[n]), int(self.negcount[n]) & 1


_tables: dict[int, LevelTables] = {}
_tables_lock = threading.Lock()


def level_tables(level) -> LevelTables:
    """Shared per-level cache; safe for concurrent readers."""
    lv = _level(level)
    tab = _tables.get(lv.r)
    if tab is None:
        with _tables_lock:
            tab = _tables.get(lv.r)
            if tab is None:
                tab = LevelTables(lv)
                _tables[lv.r] = tab
    return tab


def quantum_integer(level, n: int) -> float:
    """[n] = sin(2 pi n / r) / sin(2 pi / r), any integer n."""
    r = _level(level).r
    m = n % r  # range-reduce before sin; [n] is r-periodic in n
    return math.sin(TWO_PI * m / r) / math.sin(TWO_PI / r)


def log_quantum_factorial(level, n: int) -> QuarterPhaseLog:
    """[n]! = prod_{k=1..n} [k] as a QuarterPhaseLog (phase 0 or 2).

    The factors [k] with k > r/2 are negative; the phase doubles the
    parity of their count into quarter turns.
    """
    lv = _level(level)
    if not 0 <= n <= lv.r - 2:
        raise ValueError(f"color out of range: n={n} not in [0, {lv.r - 2}]")
    tab = level_tables(lv)
    log_mag, parity = tab.fact(n)
    return QuarterPhaseLog(log_mag, 2 * parity)


def log_brace_factorial(level, n: int) -> float:
    """log|{n}!| where {k} = q^k - q^{-k}; equals sum log|2 sin(2 pi k/r)|."""
    lv = _level(level)
    if not 0 < n < lv.r:
        raise ValueError(f"brace factorial argument out of range: n={n}"
                         f" not in (0, {lv.r})")
    tab = level_tables(lv)
    return float(tab.brace_prefix[n])
