"""Seeded identity fuzzing and generators of form pairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bilinear import mix_check
from .compose import compose
from .core import is_rational_square
from .errors import ZeroForm
from .forms import Form, act, det_identity_check, disc, lagrange_check
from .sampling import COEFF_RANGE, Sampler

# trial streams of different families never share a sampler index
_FAMILY_OFFSET = 1 << 40
FAMILIES = ("det_identity", "lagrange", "det_invariance", "mix")
_MAX_TRIES = 400


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0


def _square_ratio(d: int, dp: int) -> bool:
    if d == 0 or dp == 0:
        return False
    q = Fraction(dp, d)
    return q > 0 and is_rational_square(q) is not None


def _small(f: Form, r: int) -> bool:
    return max(abs(v) for v in f.coeffs()) <= r


def composable_pair(s: Sampler, r: int = COEFF_RANGE) -> tuple[Form, Form] | None:
    """A pair with nonzero discriminants whose ratio is a rational square.

    Odd attempts transform f (scaling and a small integer substitution),
    even attempts draw f' independently and keep it if the ratio works out.
    """
    f = s.nondegenerate_form(r)
    if f is None:
        return None
    for attempt in range(_MAX_TRIES):
        if attempt % 2 == 0:
            M = s.mat(2)
            if M.det() == 0:
                continue
            k = s.integer(1, 3) * (1 if s.integer(0, 1) else -1)
            g = act(f, M)
            fp = Form(k * g.a, k * g.b, k * g.c)
        else:
            fp = s.nondegenerate_form(r)
            if fp is None:
                continue
        if _small(fp, r) and _square_ratio(f.disc, fp.disc):
            return f, fp
    return None


def non_square_pair(s: Sampler, r: int = COEFF_RANGE) -> tuple[Form, Form] | None:
    f = s.nondegenerate_form(r)
    fp = s.nondegenerate_form(r)
    if f is None or fp is None or _square_ratio(f.disc, fp.disc):
        return None
    return f, fp


def _trial(family: str, s: Sampler, cache: dict):
    """One trial: True/False for pass/fail, None for a skipped draw."""
    if family == "det_identity":
        f = s.form()
        if f is None:
            return None
        return det_identity_check(f, s.vec(), s.vec())
    if family == "lagrange":
        F = s.form()
        if F is None:
            return None
        return lagrange_check(F, s.vec(), s.vec(), s.vec(), s.vec())
    if family == "det_invariance":
        f = s.form()
        if f is None:
            return None
        A = s.mat()
        try:
            g = act(f, A)
        except ZeroForm:
            return None
        return disc(g) == disc(f) * A.det() ** 2
    if family == "mix":
        pair = composable_pair(s)
        if pair is None:
            return None
        if pair not in cache:
            cache[pair] = compose(*pair).result
        v = cache[pair]
        return mix_check(v.f, v.fprime, v.F, v.law, s.vec(), s.vec(), s.vec(), s.vec())
    raise ValueError(f"unknown family {family!r}")


def run_identities(seed: int, trials: int) -> dict[str, Tally]:
    """Run ``trials`` executed checks per family; skipped draws are counted."""
    out = {}
    cache: dict = {}
    for k, family in enumerate(FAMILIES):
        tally = Tally()
        index = 0
        while tally.passed + tally.failed < trials:
            ok = _trial(family, Sampler(seed, k * _FAMILY_OFFSET + index), cache)
            index += 1
            if ok is None:
                tally.skipped += 1
            elif ok:
                tally.passed += 1
            else:
                tally.failed += 1
        out[family] = tally
    return out
