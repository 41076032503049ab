from fractions import Fraction as Q

import pytest
from conftest import forms, unimodular
from hypothesis import given, settings

from gausscomp.bilinear import BilinearLaw, verify
from gausscomp.compose import compose, construct, normalize_rep, square_ratio
from gausscomp.core import Mat2
from gausscomp.errors import NonSquareRatio, ZeroDiscriminant
from gausscomp.forms import Form, act, invariants, properly_equivalent_definite
from gausscomp.fuzz import composable_pair
from gausscomp.sampling import Sampler

WORKED_LAW = BilinearLaw.from_list([(2, 0), (1, 1), (1, 1), (-2, 1)])


@pytest.mark.parametrize("d, dp, r", [(-4, -16, 2), (-20, -20, 1), (12, 3, Q(1, 2))])
def test_square_ratio(d, dp, r):
    assert square_ratio(d, dp) == r


def test_square_ratio_errors():
    with pytest.raises(NonSquareRatio) as exc:
        square_ratio(-4, -20)
    assert exc.value.ratio == 5
    with pytest.raises(NonSquareRatio, match="opposite signs"):
        square_ratio(-4, 4)
    with pytest.raises(ZeroDiscriminant):
        square_ratio(0, 4)


@pytest.mark.parametrize("f, g, A", [
    ((0, 1, 0), (1, 1, 0), Mat2(1, 0, 1, 1)),
    ((2, 2, 3), (2, 2, 3), Mat2.identity()),
    ((0, 0, 5), (5, 0, 0), Mat2(0, -1, 1, 0)),
])
def test_normalize_rep(f, g, A):
    assert normalize_rep(Form(*f)) == (Form(*g), A)
    assert A.det() == 1


@given(forms())
def test_normalize_rep_property(f):
    g, A = normalize_rep(f)
    assert g.a != 0 and A.det() == 1 and act(f, A) == g


def test_compose_worked_example():
    rep = compose(Form(2, 2, 3), Form(2, 2, 3))
    v = rep.result
    assert v.F == Form(1, 0, 5)
    assert v.law == WORKED_LAW
    assert (v.nu, v.nuprime, v.delta_cap, v.direct) == (1, 1, -5, True)
    assert rep.r == 1


def test_compose_different_discriminants():
    # hand computation: basis (1, eps/2) in eps^2 = -4, law e11=(1,0), e12=(0,2),
    # e21=(0,1), e22=(-2,0)
    v = compose(Form(1, 0, 1), Form(1, 0, 4)).result
    assert v.F == Form(1, 0, 1)
    assert v.law == BilinearLaw.from_list([(1, 0), (0, 2), (0, 1), (-2, 0)])
    assert (abs(v.nu), abs(v.nuprime), v.delta_cap, v.direct) == (2, 1, -2, True)
    assert 16 * v.delta_cap ** 2 == (-4) * (-16)


def test_compose_non_square():
    with pytest.raises(NonSquareRatio):
        compose(Form(1, 0, 1), Form(1, 0, 5))


def test_compose_zero_discriminant():
    with pytest.raises(ZeroDiscriminant):
        compose(Form(1, 2, 1), Form(1, 0, 1))


def test_compose_negative_leads_flip_orientation():
    rep = compose(Form(-1, 0, -1), Form(1, 0, 1))
    assert rep.transforms.orientation_flipped
    assert rep.result.direct


def test_compose_zero_lead_uses_pretransform():
    rep = compose(Form(0, 1, 0), Form(0, 3, 0))
    assert rep.transforms.pre_f == Mat2(1, 0, 1, 1)
    v = rep.result
    assert verify(Form(0, 1, 0), Form(0, 3, 0), v.F, v.law) == v


def test_compose_split_algebra():
    # d = 1 and d' = 9 are perfect squares: the algebra has zero divisors
    v = compose(Form(0, 1, 0), Form(2, 5, 2)).result
    assert v.direct and v.F.disc in (1, 9)


def test_compose_deterministic_and_replayable():
    f = Form(3, -7, 2)
    fp = act(f, Mat2(2, 1, 0, -1))
    a, b = compose(f, fp), compose(f, fp)
    assert a == b
    F, law, r = construct(f, fp, a.transforms)
    assert (F, law, r) == (a.result.F, a.result.law, a.r)


def test_compose_swapped_arguments_also_valid():
    f, fp = Form(1, 0, 1), Form(1, 0, 4)
    v = compose(fp, f).result
    assert verify(fp, f, v.F, v.law).direct


@pytest.mark.parametrize("d", range(1, 11))
def test_semigroup_reproduction(d):
    f = Form(1, 0, d)
    v = compose(f, f).result
    assert properly_equivalent_definite(v.F, f)


def test_class_table_minus_20():
    a, b = Form(1, 0, 5), Form(2, 2, 3)
    assert properly_equivalent_definite(compose(b, b).result.F, a)
    assert properly_equivalent_definite(compose(a, b).result.F, b)
    assert properly_equivalent_definite(compose(a, a).result.F, a)


@settings(max_examples=60, deadline=None)
@given(forms(), unimodular(), unimodular())
def test_compose_equivalent_inputs(f, A, B):
    if f.disc == 0:
        return
    g, h = act(f, A), act(f, B)
    v = compose(g, h).result
    assert v.direct
    assert v.f.disc == v.nuprime ** 2 * v.F.disc
    assert v.fprime.disc == v.nu ** 2 * v.F.disc
    assert invariants(v.F).delta == invariants(g).delta * invariants(h).delta


def test_compose_seeded_pairs_round_trip():
    i = n = 0
    while n < 150:
        pair = composable_pair(Sampler(21, i))
        i += 1
        if pair is None:
            continue
        rep = compose(*pair)
        v = rep.result
        assert verify(v.f, v.fprime, v.F, v.law) == v
        assert v.nu > 0 and v.nuprime > 0
        n += 1
