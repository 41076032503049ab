"""Exact integer/rational helpers: 2-vectors, 2x2 matrices, gcds and a
two-row Hermite normal form."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Sequence

from .errors import RankError, UsageError


class Vec2(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def scale(self, k):
        return Vec2(k * self.x, k * self.y)


class QVec2(NamedTuple):
    x: Fraction
    y: Fraction


def qvec(x, y) -> QVec2:
    return QVec2(Fraction(x), Fraction(y))


E1 = Vec2(1, 0)
E2 = Vec2(0, 1)


class Mat2(NamedTuple):
    """Row-major storage of [[a, b], [c, d]].

    Acts on column vectors, so the columns (a, c) and (b, d) are the images
    of the basis vectors.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_columns(cls, col1, col2) -> "Mat2":
        return cls(col1[0], col2[0], col1[1], col2[1])

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @property
    def columns(self) -> tuple[Vec2, Vec2]:
        return Vec2(self.a, self.c), Vec2(self.b, self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        x, y = other
        return Vec2(self.a * x + self.b * y, self.c * x + self.d * y)

    def inverse_unimodular(self) -> "Mat2":
        det = self.det()
        if det not in (1, -1):
            raise UsageError(f"matrix is not unimodular (det={det})")
        return Mat2(det * self.d, -det * self.b, -det * self.c, det * self.a)


def gcd_list(values: Sequence[int]) -> int:
    values = list(values)
    if not values:
        raise UsageError("gcd of an empty sequence")
    return reduce(math.gcd, (int(v) for v in values), 0)


def det2(v, w):
    return v[0] * w[1] - v[1] * w[0]


def is_rational_square(q) -> Fraction | None:
    q = Fraction(q)
    if q <= 0:
        raise UsageError(f"expected a positive rational, got {q}")
    n, m = q.numerator, q.denominator
    rn, rm = math.isqrt(n), math.isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _hnf_integer(cols: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    # Column HNF of a 2 x n integer matrix: lower triangular basis
    # (h11, h21), (0, h22) with h11 > 0, h22 > 0 and 0 <= h21 < h22.
    # First build a lattice vector w = (g1, t) whose first coordinate is the
    # gcd of all first coordinates.
    g1, t = 0, 0
    for a, b in cols:
        g, s, u = _xgcd(g1, a)
        g1, t = g, s * t + u * b
    if g1 == 0:
        rank = 0 if all(b == 0 for _, b in cols) else 1
        raise RankError(rank)
    # Vectors with vanishing first coordinate are generated by v - (a/g1) w.
    h22 = 0
    for a, b in cols:
        h22 = math.gcd(h22, b - (a // g1) * t)
    if h22 == 0:
        raise RankError(1)
    return (g1, t % h22), (0, h22)


def hnf_basis(generators: Sequence[QVec2]) -> tuple[QVec2, QVec2]:
    """Basis of the additive group generated by rational 2-vectors.

    Clears the common denominator, takes the column Hermite normal form of
    the integer matrix and rescales.  The basis is lower triangular,
    ``m1 = (h11, h21)``, ``m2 = (0, h22)`` with positive diagonal and
    ``0 <= h21 < h22``.
    """
    gens = [qvec(*g) for g in generators]
    if not gens:
        raise UsageError("hnf_basis needs at least one generator")
    den = reduce(math.lcm, (c.denominator for g in gens for c in g), 1)
    cols = [(int(g.x * den), int(g.y * den)) for g in gens]
    (h11, h21), (_, h22) = _hnf_integer(cols)
    return qvec(Fraction(h11, den), Fraction(h21, den)), qvec(0, Fraction(h22, den))


def solve2(col1, col2, rhs) -> tuple[Fraction, Fraction]:
    """Exact solution (z1, z2) of z1*col1 + z2*col2 == rhs."""
    det = Fraction(det2(col1, col2))
    if det == 0:
        raise UsageError("singular 2x2 system")
    z1 = det2(rhs, col2) / det
    z2 = det2(col1, rhs) / det
    return z1, z2


def as_int(q) -> int | None:
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else None
