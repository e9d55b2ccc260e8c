"""Deterministic splittable 64-bit random stream (splitmix64).

Randomized checks derive one child stream per trial index from a single
seed, so trials are order-independent, reproducible across platforms, and
every reported failure can be replayed from (seed, trial).
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def derive(self, index: int) -> "SplitMix64":
        """Independent child stream for a trial index."""
        return SplitMix64(_mix(self.state ^ _mix((index + 1) * _GAMMA & _MASK)))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def fraction(self, bound: int = 9, nonzero: bool = False) -> Fraction:
        """Random rational with |numerator| <= bound, 1 <= denominator <= bound."""
        while True:
            num = self.randint(-bound, bound)
            den = self.randint(1, bound)
            f = Fraction(num, den)
            if not nonzero or f != 0:
                return f
