"""Composition laws as bilinear maps Z^2 x Z^2 -> Z^2 and their verification.

Every identity is checked symbolically: forms and laws are evaluated on
vectors of ``Poly`` variables and the resulting coefficient tables compared.
Sampling would miss failures on the isotropic lines of indefinite forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import E1, E2, Mat2, Vec2, as_int, det2, gcd_list
from .errors import (
    Eq1Violation,
    LemmaViolation,
    NotProportional,
    SpanViolation,
    TheoremAViolation,
    ZeroDiscriminant,
)
from .forms import Form, disc, invariants, polar, value
from .poly import XP, YP, Poly, X, Y, quadratic_coeffs

SYM = Vec2(X, Y)
SYM_P = Vec2(XP, YP)


@dataclass(frozen=True)
class BilinearLaw:
    """Images e_ij = e_i o e_j of the basis pairs."""

    e11: Vec2
    e12: Vec2
    e21: Vec2
    e22: Vec2

    def __post_init__(self):
        for name in ("e11", "e12", "e21", "e22"):
            object.__setattr__(self, name, Vec2(*getattr(self, name)))

    @classmethod
    def from_list(cls, e) -> "BilinearLaw":
        return cls(*(Vec2(*v) for v in e))

    def images(self) -> tuple[Vec2, Vec2, Vec2, Vec2]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __call__(self, x, xp):
        return apply(self, x, xp)


@dataclass(frozen=True)
class BiQuadratic:
    """Entry (i, j) is the coefficient of x^i y^(2-i) x'^j y'^(2-j)."""

    table: tuple

    @classmethod
    def from_poly(cls, p: Poly) -> "BiQuadratic":
        mons = {(i, 2 - i, j, 2 - j) for i in range(3) for j in range(3)}
        extra = set(p.terms) - mons
        if extra:
            raise ValueError(f"not bi-quadratic, stray monomials {sorted(extra)}")
        return cls(tuple(
            tuple(p.coeff((i, 2 - i, j, 2 - j)) for j in range(3)) for i in range(3)
        ))

    def __getitem__(self, ij):
        i, j = ij
        return self.table[i][j]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.table for c in row)


@dataclass(frozen=True)
class VerifiedComposition:
    f: Form
    fprime: Form
    F: Form
    law: BilinearLaw
    nu: Fraction
    nuprime: Fraction
    delta_cap: Fraction
    direct: bool
    clauses: dict = field(default_factory=dict, compare=False)


def apply(law: BilinearLaw, x, xp):
    x1, x2 = x
    y1, y2 = xp
    terms = [
        (x1 * y1, law.e11),
        (x1 * y2, law.e12),
        (x2 * y1, law.e21),
        (x2 * y2, law.e22),
    ]
    return Vec2(sum(k * e.x for k, e in terms), sum(k * e.y for k, e in terms))


def spans(law: BilinearLaw) -> bool:
    imgs = law.images()
    minors = [det2(imgs[i], imgs[j]) for i in range(4) for j in range(i + 1, 4)]
    return gcd_list(minors) == 1


def left_map(law: BilinearLaw, x) -> Mat2:
    """Matrix of x' -> x o x'."""
    return Mat2.from_columns(apply(law, x, E1), apply(law, x, E2))


def right_map(law: BilinearLaw, xp) -> Mat2:
    """Matrix of x -> x o x'."""
    return Mat2.from_columns(apply(law, E1, xp), apply(law, E2, xp))


def eq1_residual(f, fp, F, law: BilinearLaw) -> BiQuadratic:
    """Coefficients of F(x o x') - f(x) f'(x')."""
    p = value(F, apply(law, SYM, SYM_P)) - value(f, SYM) * value(fp, SYM_P)
    return BiQuadratic.from_poly(Poly._lift(p))


def left_det_coeffs(law: BilinearLaw) -> tuple[Fraction, Fraction, Fraction]:
    """det(x o) as a quadratic form in x."""
    return quadratic_coeffs(Poly._lift(left_map(law, SYM).det()), first=True)


def right_det_coeffs(law: BilinearLaw) -> tuple[Fraction, Fraction, Fraction]:
    """det(o x') as a quadratic form in x'."""
    return quadratic_coeffs(Poly._lift(right_map(law, SYM_P).det()), first=False)


def proportionality(q, f) -> Fraction | None:
    """The nu with q == nu * f coefficientwise, or None."""
    fc = f.coeffs() if hasattr(f, "coeffs") else tuple(f)
    q = tuple(Fraction(v) for v in q)
    k = next(i for i, v in enumerate(fc) if v != 0)
    nu = q[k] / fc[k]
    if all(qi == nu * fi for qi, fi in zip(q, fc)):
        return nu
    return None


def _q_poly(F, law):
    # Q(x, y) = 1/2 (F(x o x, y o y) - F(x o y, y o x)), with y in the primed slots
    xx = apply(law, SYM, SYM)
    yy = apply(law, SYM_P, SYM_P)
    xy = apply(law, SYM, SYM_P)
    yx = apply(law, SYM_P, SYM)
    return (polar(F, xx, yy) - polar(F, xy, yx)) / 2


def delta_of_law(F, law: BilinearLaw) -> Fraction:
    """The constant with Q(x, y) == Delta det(x, y)^2."""
    delta = (polar(F, law.e11, law.e22) - polar(F, law.e12, law.e21)) / Fraction(2)
    residual = _q_poly(F, law) - delta * det2(SYM, SYM_P) ** 2
    if not Poly._lift(residual).is_zero():
        raise LemmaViolation(
            "Q - Delta det^2 is not identically zero; internal arithmetic bug"
        )
    return delta


def mix_check(f, fp, F, law, x, xp, y, yp) -> bool:
    """F(x o y, x' o y') + F(x o y', x' o y) == 2 f(x, x') f'(y, y')."""
    lhs = polar(F, apply(law, x, y), apply(law, xp, yp)) + polar(
        F, apply(law, x, yp), apply(law, xp, y)
    )
    return lhs == 2 * polar(f, x, xp) * polar(fp, y, yp)


def discriminant_quartic_residuals(f, fp, F, law) -> tuple[Poly, Poly]:
    """Residuals of d(F) det(o x')^2 = d(f) f'(x')^2 and
    d(F) det(x o)^2 = d(f') f(x)^2, as quartics."""
    right = Poly._lift(right_map(law, SYM_P).det())
    left = Poly._lift(left_map(law, SYM).det())
    r2 = disc(F) * right * right - disc(f) * Poly._lift(value(fp, SYM_P)) ** 2
    r3 = disc(F) * left * left - disc(fp) * Poly._lift(value(f, SYM)) ** 2
    return Poly._lift(r2), Poly._lift(r3)


def delta_formula_residuals(f, fp, F, law, delta) -> tuple[BiQuadratic, BiQuadratic]:
    """Residuals of
    F(x o x, y o y) = f(x,y) f'(x,y) + Delta det(x,y)^2 and
    F(x o y, y o x) = f(x,y) f'(x,y) - Delta det(x,y)^2,
    with y carried by the primed variables."""
    base = polar(f, SYM, SYM_P) * polar(fp, SYM, SYM_P)
    dd = delta * det2(SYM, SYM_P) ** 2
    r7 = polar(F, apply(law, SYM, SYM), apply(law, SYM_P, SYM_P)) - base - dd
    r8 = polar(F, apply(law, SYM, SYM_P), apply(law, SYM_P, SYM)) - base + dd
    return BiQuadratic.from_poly(Poly._lift(r7)), BiQuadratic.from_poly(Poly._lift(r8))


def _abs_int(q) -> int | None:
    v = as_int(q)
    return None if v is None else abs(v)


def theorem_clauses(f: Form, fp: Form, F: Form, nu, nup, delta) -> dict[str, bool]:
    """Every post-composition assertion, in reporting order."""
    inv, invp, invF = invariants(f), invariants(fp), invariants(F)
    d, dp, D = inv.disc, invp.disc, invF.disc
    gd = _abs_int(abs(nu) * inv.delta)
    gdp = _abs_int(abs(nup) * invp.delta)
    thetas = (inv.theta, invp.theta, invF.theta)
    signs_match = len({(t > 0) - (t < 0) for t in thetas}) == 1
    return {
        "integer": isinstance(F, Form),
        "disc_fprime": dp == nu * nu * D,
        "disc_f": d == nup * nup * D,
        "delta_cap": 4 * delta == D * nu * nup,
        "delta_cap_squared": 16 * delta * delta == d * dp,
        "delta": invF.delta == inv.delta * invp.delta,
        "sigma": invF.sigma == min(inv.sigma, invp.sigma),
        "theta": signs_match
        and abs(invF.theta) == math.gcd(abs(inv.theta), abs(invp.theta)),
        "gcd": gd is not None and gdp is not None and math.gcd(gd, gdp) == 1,
        "gcd_squared": math.gcd(abs(d) * invp.delta ** 2, abs(dp) * inv.delta ** 2)
        == abs(D),
    }


def measure(f: Form, fp: Form, F: Form, law: BilinearLaw):
    """Run the structural checks and extract (nu, nu', Delta).

    Raises on the first failure that shows the inputs are not a composition.
    """
    if f.disc == 0 or fp.disc == 0:
        raise ZeroDiscriminant("forms with zero discriminant cannot be verified")
    residual = eq1_residual(f, fp, F, law)
    if not residual.is_zero():
        raise Eq1Violation(f"F(x o x') != f(x) f'(x'); residual table {residual.table}")
    if not spans(law):
        raise SpanViolation("the products x o x' do not span Z^2")
    nu = proportionality(left_det_coeffs(law), f)
    if nu is None:
        raise NotProportional("det(x o) is not proportional to f")
    nup = proportionality(right_det_coeffs(law), fp)
    if nup is None:
        raise NotProportional("det(o x') is not proportional to f'")
    delta = delta_of_law(F, law)
    return nu, nup, delta


def verify(f: Form, fp: Form, F: Form, law: BilinearLaw) -> VerifiedComposition:
    nu, nup, delta = measure(f, fp, F, law)
    clauses = theorem_clauses(f, fp, F, nu, nup, delta)
    for name, ok in clauses.items():
        if not ok:
            raise TheoremAViolation(
                name, "inputs satisfy F(x o x') = f(x) f'(x') and span, so this is an internal bug"
            )
    return VerifiedComposition(
        f, fp, F, law, nu, nup, delta, nu > 0 and nup > 0, clauses
    )
