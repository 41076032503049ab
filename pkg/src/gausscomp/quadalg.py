"""Arithmetic in Q[t]/(t^2 - d): elements u + v*eps, norms, lattices.

Only rational points are ever built, so the whole construction stays
exact even when d is a perfect square and the algebra has zero divisors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import QVec2, Vec2, as_int, det2, hnf_basis, solve2
from .errors import (
    AmbientMismatch,
    DegenerateForm,
    InternalBug,
    NonzeroLeadRequired,
    NotInLattice,
    RatioMismatch,
    UsageError,
)
from .forms import Form, RatForm


@dataclass(frozen=True)
class AlgebraElement:
    u: Fraction
    v: Fraction
    d: int

    def __post_init__(self):
        if self.d == 0:
            raise UsageError("ambient d must be nonzero")
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    def _check(self, other):
        if other.d != self.d:
            raise AmbientMismatch(f"eps^2={self.d} mixed with eps^2={other.d}")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.u + other.u, self.v + other.v, self.d)

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.u - other.u, self.v - other.v, self.d)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        return AlgebraElement(self.u * other, self.v * other, self.d)

    __rmul__ = __mul__

    def coords(self) -> QVec2:
        return QVec2(self.u, self.v)

    def __str__(self):
        return f"{self.u} + {self.v}*eps (eps^2={self.d})"


def alg_mul(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    p._check(q)
    return AlgebraElement(p.u * q.u + p.d * p.v * q.v, p.u * q.v + p.v * q.u, p.d)


def conj(p: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(p.u, -p.v, p.d)


def norm(p: AlgebraElement) -> Fraction:
    return p.u * p.u - p.d * p.v * p.v


@dataclass(frozen=True)
class Embedding:
    """A rational linear map phi: Q^2 -> A with lead * N(phi(x, y)) == f(x, y).

    ``phi`` is stored by rows: ((p, q), (r, s)) means
    phi(x, y) = (p x + q y) + (r x + s y) eps.
    """

    phi: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    d: int
    lead: int
    form: Form

    def __call__(self, v) -> AlgebraElement:
        (p, q), (r, s) = self.phi
        x, y = v
        return AlgebraElement(p * x + q * y, r * x + s * y, self.d)

    def det(self) -> Fraction:
        (p, q), (r, s) = self.phi
        return p * s - q * r

    def conjugate(self) -> "Embedding":
        (p, q), (r, s) = self.phi
        return _checked(((p, q), (-r, -s)), self.d, self.lead, self.form)


def _checked(phi, d, lead, f) -> Embedding:
    (p, q), (r, s) = phi
    # lead * N(phi(x, y)) expanded as a quadratic form in (x, y)
    got = (
        lead * (p * p - d * r * r),
        lead * 2 * (p * q - d * r * s),
        lead * (q * q - d * s * s),
    )
    if got != f.coeffs():
        raise InternalBug(f"embedding identity fails: {got} != {f.coeffs()}")
    return Embedding(phi, d, lead, f)


def scaled_embedding(f: Form, d_target: int, r) -> Embedding:
    """Embed f into the algebra with eps^2 = d_target, where d(f) = d_target r^2."""
    r = Fraction(r)
    a, b = f.a, f.b
    if f.disc == 0:
        raise DegenerateForm(f"{f} has zero discriminant")
    if a == 0:
        raise NonzeroLeadRequired(f"{f} has zero leading coefficient")
    if f.disc != d_target * r * r:
        raise RatioMismatch(f"d({f})={f.disc} != {d_target}*({r})^2")
    phi = ((Fraction(1), Fraction(b, 2 * a)), (Fraction(0), r / (2 * a)))
    return _checked(phi, d_target, a, f)


def embedding(f: Form) -> Embedding:
    if f.a == 0:
        raise NonzeroLeadRequired(f"{f} has zero leading coefficient")
    if f.disc == 0:
        raise DegenerateForm(f"{f} has zero discriminant")
    return scaled_embedding(f, f.disc, 1)


@dataclass(frozen=True)
class QLattice:
    m1: AlgebraElement
    m2: AlgebraElement
    d: int

    def __post_init__(self):
        if det2(self.m1.coords(), self.m2.coords()) == 0:
            raise UsageError("lattice basis is not independent")

    def basis(self) -> tuple[AlgebraElement, AlgebraElement]:
        return (self.m1, self.m2)

    def covolume(self) -> Fraction:
        return det2(self.m1.coords(), self.m2.coords())


def product_lattice(gens: Sequence[AlgebraElement]) -> QLattice:
    ds = {g.d for g in gens}
    if len(ds) > 1:
        raise AmbientMismatch(f"generators live in different algebras: {sorted(ds)}")
    (d,) = ds
    m1, m2 = hnf_basis([g.coords() for g in gens])
    return QLattice(AlgebraElement(m1.x, m1.y, d), AlgebraElement(m2.x, m2.y, d), d)


def norm_form(L: QLattice, scale: int) -> RatForm:
    """Coefficients of z -> scale * N(z1 m1 + z2 m2)."""
    u1, v1 = L.m1.u, L.m1.v
    u2, v2 = L.m2.u, L.m2.v
    d = L.d
    return RatForm(
        scale * (u1 * u1 - d * v1 * v1),
        scale * 2 * (u1 * u2 - d * v1 * v2),
        scale * (u2 * u2 - d * v2 * v2),
    )


def coords(L: QLattice, p: AlgebraElement) -> Vec2:
    if p.d != L.d:
        raise AmbientMismatch(f"eps^2={p.d} element in an eps^2={L.d} lattice")
    z1, z2 = solve2(L.m1.coords(), L.m2.coords(), p.coords())
    i1, i2 = as_int(z1), as_int(z2)
    if i1 is None or i2 is None:
        raise NotInLattice(f"{p} has coordinates ({z1}, {z2}) in the lattice basis")
    return Vec2(i1, i2)


def element(u, v, d) -> AlgebraElement:
    return AlgebraElement(Fraction(u), Fraction(v), d)

