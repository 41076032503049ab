"""Constructive composition of two integer forms with square discriminant ratio.

Both forms are embedded in the algebra Q[t]/(t^2 - d) with d = d(f); the
product of their image lattices, read in a Hermite-normal-form basis, gives
the composed form and the law.  The irrational scale sqrt(a a') that would
make the images genuine lattices is carried as the integer factor a a' on
the norm instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bilinear import (
    BilinearLaw,
    VerifiedComposition,
    apply,
    left_det_coeffs,
    proportionality,
    right_det_coeffs,
    verify,
)
from .core import E1, E2, Mat2, is_rational_square
from .errors import CompositionError, InternalBug, NonSquareRatio, ZeroDiscriminant
from .forms import Form, act
from .quadalg import QLattice, coords, embedding, norm_form, product_lattice, scaled_embedding

# probe vector -> determinant-one matrix whose first column is the probe
_PROBES = (
    Mat2.identity(),
    Mat2(0, -1, 1, 0),
    Mat2(1, 0, 1, 1),
)


@dataclass(frozen=True)
class Transforms:
    pre_f: Mat2
    pre_fprime: Mat2
    orientation_flipped: bool = False
    conjugated_phi: bool = False
    conjugated_phi_prime: bool = False


@dataclass(frozen=True)
class ComposeReport:
    result: VerifiedComposition
    r: Fraction
    transforms: Transforms


def square_ratio(d: int, dp: int) -> Fraction:
    """Positive r with dp == d r^2."""
    if d == 0 or dp == 0:
        raise ZeroDiscriminant("discriminants must be nonzero")
    ratio = Fraction(dp, d)
    if ratio < 0:
        raise NonSquareRatio(
            ratio,
            f"discriminants {d} and {dp} have opposite signs, so their ratio "
            "cannot be a rational square",
        )
    r = is_rational_square(ratio)
    if r is None:
        raise NonSquareRatio(ratio)
    return r


def normalize_rep(f: Form) -> tuple[Form, Mat2]:
    """(g, A) with det A = 1, g = act(f, A) and g.a != 0."""
    for A in _PROBES:
        g = act(f, A)
        if g.a != 0:
            return g, A
    raise InternalBug(f"{f} vanishes at (1,0), (0,1) and (1,1)")


def construct(f: Form, fp: Form, transforms: Transforms):
    """Replay the lattice construction for fixed normalization choices.

    Returns (F, law, r) with the law already pulled back to the original
    f and fp.
    """
    d = f.disc
    r = square_ratio(d, fp.disc)
    A, Ap = transforms.pre_f, transforms.pre_fprime
    g, gp = act(f, A), act(fp, Ap)
    if g.a == 0 or gp.a == 0:
        raise InternalBug("pre-transforms must give nonzero leading coefficients")
    phi = embedding(g)
    phip = scaled_embedding(gp, d, r)
    if transforms.conjugated_phi:
        phi = phi.conjugate()
    if transforms.conjugated_phi_prime:
        phip = phip.conjugate()

    psi = [phi(ei) * phip(ej) for ei in (E1, E2) for ej in (E1, E2)]
    L = product_lattice(psi)
    if transforms.orientation_flipped:
        L = QLattice(L.m1, -1 * L.m2, L.d)
    ratF = norm_form(L, g.a * gp.a)
    if not ratF.is_integer():
        raise InternalBug(f"constructed form {ratF.coeffs()} is not integer")
    F = ratF.to_form()

    law_g = BilinearLaw(*(coords(L, p) for p in psi))
    # x o x' := (A^-1 x) o_g (A'^-1 x'), so F(x o x') = g(A^-1 x) g'(A'^-1 x') = f(x) f'(x')
    Ainv, Apinv = A.inverse_unimodular(), Ap.inverse_unimodular()
    law = BilinearLaw(*(
        apply(law_g, Ainv @ ei, Apinv @ ej) for ei in (E1, E2) for ej in (E1, E2)
    ))
    return F, law, r


def compose(f: Form, fp: Form) -> ComposeReport:
    """A direct composition law for f and fp, verified end to end."""
    square_ratio(f.disc, fp.disc)
    _, A = normalize_rep(f)
    _, Ap = normalize_rep(fp)
    t = Transforms(A, Ap)
    # orientation flips both signs; conjugating one embedding flips one sign
    for _ in range(3):
        F, law, r = construct(f, fp, t)
        nu = proportionality(left_det_coeffs(law), f)
        nup = proportionality(right_det_coeffs(law), fp)
        if nu is None or nup is None or nu == 0 or nup == 0:
            raise InternalBug("constructed law has non-proportional determinants")
        if nu > 0 and nup > 0:
            break
        if nu < 0 and nup < 0:
            t = Transforms(A, Ap, not t.orientation_flipped,
                           t.conjugated_phi, t.conjugated_phi_prime)
        elif nu < 0:
            t = Transforms(A, Ap, t.orientation_flipped,
                           t.conjugated_phi, not t.conjugated_phi_prime)
        else:
            t = Transforms(A, Ap, t.orientation_flipped,
                           not t.conjugated_phi, t.conjugated_phi_prime)
    else:
        raise InternalBug("directness normalization did not converge")
    try:
        result = verify(f, fp, F, law)
    except CompositionError as exc:
        raise InternalBug(f"constructed composition failed verification: {exc}") from exc
    if not result.direct:
        raise InternalBug("constructed composition is not direct")
    return ComposeReport(result, r, t)
