"""Sparse exact polynomials in four variables x, y, x', y'.

Just enough arithmetic to substitute symbolic vectors into the same
functions that evaluate forms and laws on integers, then compare
coefficients.
"""

from __future__ import annotations

from fractions import Fraction

NVARS = 4


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(0,) * NVARS: c})

    @classmethod
    def var(cls, i: int) -> "Poly":
        exps = [0] * NVARS
        exps[i] = 1
        return cls({tuple(exps): 1})

    @staticmethod
    def _lift(other):
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = Fraction(k)
        return Poly({m: c / k for m, c in self.terms.items()})

    def __pow__(self, n: int):
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self.terms!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, monomial) -> Fraction:
        return self.terms.get(tuple(monomial), Fraction(0))


X, Y, XP, YP = (Poly.var(i) for i in range(NVARS))


def quadratic_coeffs(p: Poly, first: bool = True) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (x^2, xy, y^2) of a binary quadratic in (x, y) or (x', y')."""
    if first:
        mons = [(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0)]
    else:
        mons = [(0, 0, 2, 0), (0, 0, 1, 1), (0, 0, 0, 2)]
    if set(p.terms) - set(mons):
        raise ValueError(f"not a binary quadratic: {p!r}")
    return tuple(p.coeff(m) for m in mons)
