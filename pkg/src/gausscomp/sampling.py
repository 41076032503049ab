"""Deterministic pseudo-random draws for fuzzing.

Generator (SplitMix64, all arithmetic mod 2**64):

    mix(z):  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
             return z ^ (z >> 31)

    start state for (seed, index):  mix(seed mod 2**64) ^ index
    each draw:  state += 0x9E3779B97F4A7C15; output mix(state)
    integer in [lo, hi]:  lo + output % (hi - lo + 1)

The modulo bias is below 2**-59 for the small ranges used here.
"""

from __future__ import annotations

from .core import Mat2, Vec2
from .forms import Form

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
COEFF_RANGE = 9


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class Sampler:
    def __init__(self, seed: int, index: int):
        self.state = mix64(seed) ^ (index & MASK)

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def integer(self, lo: int, hi: int) -> int:
        return lo + self.next_u64() % (hi - lo + 1)

    def vec(self, r: int = COEFF_RANGE) -> Vec2:
        return Vec2(self.integer(-r, r), self.integer(-r, r))

    def mat(self, r: int = COEFF_RANGE) -> Mat2:
        return Mat2(*(self.integer(-r, r) for _ in range(4)))

    def form(self, r: int = COEFF_RANGE) -> Form | None:
        """A form with coefficients in [-r, r], or None for the zero form."""
        a, b, c = (self.integer(-r, r) for _ in range(3))
        if a == b == c == 0:
            return None
        return Form(a, b, c)

    def nondegenerate_form(self, r: int = COEFF_RANGE) -> Form | None:
        f = self.form(r)
        if f is None or f.disc == 0:
            return None
        return f


def seeded_sampler(seed: int, trial_index: int) -> Sampler:
    return Sampler(seed, trial_index)
