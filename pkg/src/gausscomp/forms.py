"""Integer binary quadratic forms ax^2 + bxy + cy^2.

Functions here are written against plain arithmetic, so they evaluate the
same way on integers, Fractions and symbolic ``Poly`` vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .core import Mat2, Vec2, as_int, det2, gcd_list
from .errors import NotPositiveDefinite, UsageError, ZeroForm


@dataclass(frozen=True)
class Form:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise UsageError(f"form coefficient {name}={v!r} is not an integer")
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ZeroForm()

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def coeffs(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __neg__(self):
        return Form(-self.a, -self.b, -self.c)

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y


@dataclass(frozen=True)
class RatForm:
    """A form with rational coefficients; used before integrality is known."""

    a: Fraction
    b: Fraction
    c: Fraction

    @property
    def disc(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def coeffs(self):
        return (self.a, self.b, self.c)

    def is_integer(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.coeffs())

    def to_form(self) -> Form:
        ints = [as_int(v) for v in self.coeffs()]
        if None in ints:
            raise UsageError(f"form {self.coeffs()} has non-integer coefficients")
        return Form(*ints)


@dataclass(frozen=True)
class InvariantRecord:
    delta: int
    delta_prime: int
    sigma: int
    disc: int
    theta: int


def disc(f) -> int:
    return f.b * f.b - 4 * f.a * f.c


def value(f, v):
    x, y = v
    return f.a * x * x + f.b * x * y + f.c * y * y


def polar(f, v, w):
    """Symmetric bilinear polarization; polar(f, v, v) == value(f, v)."""
    return (
        f.a * v[0] * w[0]
        + Fraction(f.b, 2) * (v[0] * w[1] + v[1] * w[0])
        + f.c * v[1] * w[1]
    )


def invariants(f: Form) -> InvariantRecord:
    delta = gcd_list([f.a, f.b, f.c])
    delta_prime = gcd_list([2 * f.a, f.b, 2 * f.c])
    d = f.disc
    return InvariantRecord(delta, delta_prime, delta_prime // delta, d, d // (delta * delta))


def act(f, A: Mat2) -> Form:
    """The form x -> f(Ax)."""
    p, r = A.a, A.c
    q, s = A.b, A.d
    a = f.a * p * p + f.b * p * r + f.c * r * r
    c = f.a * q * q + f.b * q * s + f.c * s * s
    b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s
    return Form(a, b, c)


def det_identity_check(f, v, w) -> bool:
    """4(f(v,w)^2 - f(v)f(w)) == d(f) det(v,w)^2."""
    return 4 * (polar(f, v, w) ** 2 - value(f, v) * value(f, w)) == disc(f) * det2(v, w) ** 2


def lagrange_check(F, a, b, c, d) -> bool:
    lhs = 4 * (polar(F, a, c) * polar(F, b, d) - polar(F, a, d) * polar(F, b, c))
    return lhs == -disc(F) * det2(a, b) * det2(c, d)


def _require_positive_definite(f: Form):
    if not (f.disc < 0 and f.a > 0):
        raise NotPositiveDefinite(f"{f} is not positive definite")


def _translate(f: Form, k: int) -> Form:
    # x -> x + k y
    return Form(f.a, 2 * f.a * k + f.b, f.a * k * k + f.b * k + f.c)


def reduce_definite(f: Form) -> tuple[Form, Mat2]:
    """Reduce a positive definite form; returns (g, A) with det A = 1 and
    g = act(f, A) satisfying |b| <= a <= c, b >= 0 if |b| == a or a == c."""
    _require_positive_definite(f)
    g, A = f, Mat2.identity()
    swap = Mat2(0, -1, 1, 0)
    while True:
        k = (g.a - g.b) // (2 * g.a)
        if k:
            g, A = _translate(g, k), A @ Mat2(1, k, 0, 1)
        if g.a > g.c or (g.a == g.c and g.b < 0):
            g, A = Form(g.c, -g.b, g.a), A @ swap
            continue
        return g, A


def properly_equivalent_definite(f: Form, g: Form) -> bool:
    return reduce_definite(f)[0] == reduce_definite(g)[0]


def _signed_order(bound: int):
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def _solve_y(f: Form, x: int, m: int, bound: int) -> int | None:
    # smallest |y| (positive first) with f(x, y) == m and |y| <= bound
    a, b, c = f.a, f.b, f.c
    rest = a * x * x - m
    bx = b * x
    if c == 0:
        if bx == 0:
            return 0 if rest == 0 else None
        if rest % bx:
            return None
        roots = [-rest // bx]
    else:
        disc_y = bx * bx - 4 * c * rest
        if disc_y < 0:
            return None
        s = math.isqrt(disc_y)
        if s * s != disc_y:
            return None
        roots = [(-bx + t) // (2 * c) for t in (s, -s) if (-bx + t) % (2 * c) == 0]
    roots = [y for y in roots if abs(y) <= bound]
    if not roots:
        return None
    return min(roots, key=lambda y: (abs(y), y < 0))


def represent_search(f: Form, m: int, bound: int) -> Vec2 | None:
    """First (x, y) with |x|, |y| <= bound and f(x, y) == m.

    Each coordinate runs through 0, 1, -1, 2, -2, ... and x varies slowest.
    """
    for x in _signed_order(bound):
        y = _solve_y(f, x, m, bound)
        if y is not None:
            return Vec2(x, y)
    return None


def representable_values(f: Form, limit: int) -> list[int]:
    """All positive values <= limit of a positive definite form."""
    _require_positive_definite(f)
    dd = -f.disc
    xmax = math.isqrt(4 * f.c * limit // dd)
    ymax = math.isqrt(4 * f.a * limit // dd)
    found = set()
    for x in range(-xmax, xmax + 1):
        for y in range(-ymax, ymax + 1):
            v = f(x, y)
            if 0 < v <= limit:
                found.add(v)
    return sorted(found)


def trigroup_check(f: Form, value_bound: int, search_bound: int) -> list[tuple[int, int, int]]:
    """Triples of representable values whose product was not found
    representable within the search box."""
    values = representable_values(f, value_bound)
    failing = []
    for triple in combinations_with_replacement(values, 3):
        m = triple[0] * triple[1] * triple[2]
        if represent_search(f, m, search_bound) is None:
            failing.append(triple)
    return failing
