from fractions import Fraction as Q

import pytest
from conftest import forms, unimodular
from hypothesis import given
from hypothesis import strategies as st

from gausscomp.core import Vec2
from gausscomp.errors import (
    AmbientMismatch,
    DegenerateForm,
    NonzeroLeadRequired,
    NotInLattice,
    RankError,
    RatioMismatch,
)
from gausscomp.forms import Form, act, value
from gausscomp.quadalg import (
    QLattice,
    alg_mul,
    conj,
    coords,
    element,
    embedding,
    norm,
    norm_form,
    product_lattice,
    scaled_embedding,
)

fracs = st.fractions(min_value=-10, max_value=10, max_denominator=8)
ds = st.integers(-30, 30).filter(bool)


def test_alg_mul_examples():
    u = element(Q(1, 2), Q(1, 4), -20)
    assert alg_mul(u, u) == element(-1, Q(1, 4), -20)
    assert alg_mul(u, element(1, 0, -20)) == u
    eps = element(0, 1, 9)
    assert alg_mul(eps, eps) == element(9, 0, 9)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        alg_mul(element(1, 1, 2), element(1, 1, 3))
    with pytest.raises(AmbientMismatch):
        element(1, 1, 2) + element(1, 1, 3)


def test_norm_and_conj_examples():
    assert norm(element(Q(1, 2), Q(1, 4), -20)) == Q(3, 2)
    u, v = element(1, 1, -20), element(2, -1, -20)
    assert norm(u) == 21 and norm(v) == 24
    assert norm(alg_mul(u, v)) == 504
    assert conj(conj(u)) == u
    assert alg_mul(u, conj(u)) == element(norm(u), 0, -20)


@given(fracs, fracs, fracs, fracs, ds)
def test_norm_multiplicative(a, b, c, d, D):
    u, v = element(a, b, D), element(c, d, D)
    assert norm(alg_mul(u, v)) == norm(u) * norm(v)
    assert alg_mul(u, v) == alg_mul(v, u)


def test_embedding_examples():
    e = embedding(Form(2, 2, 3))
    assert e.phi == ((1, Q(1, 2)), (0, Q(1, 4))) and e.d == -20
    assert 2 * norm(e(Vec2(0, 1))) == 3
    assert embedding(Form(1, 0, 1)).phi == ((1, 0), (0, Q(1, 2)))
    assert embedding(Form(1, 0, 1)).d == -4
    with pytest.raises(NonzeroLeadRequired):
        embedding(Form(0, 1, 0))
    with pytest.raises(DegenerateForm):
        embedding(Form(1, 2, 1))


@given(forms(), st.integers(-9, 9), st.integers(-9, 9))
def test_embedding_identity(f, x, y):
    if f.a == 0 or f.disc == 0:
        return
    e = embedding(f)
    assert f.a * norm(e(Vec2(x, y))) == value(f, (x, y))
    c = e.conjugate()
    assert f.a * norm(c(Vec2(x, y))) == value(f, (x, y))
    assert c.det() == -e.det()


def test_scaled_embedding_examples():
    e = scaled_embedding(Form(1, 0, 4), -4, 2)
    assert e.phi == ((1, 0), (0, 1))
    assert scaled_embedding(Form(2, 2, 3), -20, 1) == embedding(Form(2, 2, 3))
    with pytest.raises(RatioMismatch):
        scaled_embedding(Form(1, 0, 5), -4, 1)


def test_product_lattice_examples():
    L = product_lattice([element(1, 0, -20), element(Q(1, 2), Q(1, 4), -20),
                         element(-1, Q(1, 4), -20)])
    assert L.basis() == (element(Q(1, 2), 0, -20), element(0, Q(1, 4), -20))
    L = product_lattice([element(1, 0, 7), element(0, 1, 7)])
    assert L.basis() == (element(1, 0, 7), element(0, 1, 7))
    L = product_lattice([element(1, 0, -4), element(0, Q(1, 2), -4), element(-2, 0, -4)])
    assert L.basis() == (element(1, 0, -4), element(0, Q(1, 2), -4))
    with pytest.raises(RankError):
        product_lattice([element(1, 1, 3), element(2, 2, 3)])


@given(st.lists(st.tuples(fracs, fracs), min_size=2, max_size=5), ds)
def test_product_lattice_contains_generators(pairs, D):
    gens = [element(u, v, D) for u, v in pairs]
    try:
        L = product_lattice(gens)
    except RankError:
        return
    for g in gens:
        z = coords(L, g)
        assert z.x * L.m1 + z.y * L.m2 == g


def test_norm_form_examples():
    L = QLattice(element(Q(1, 2), 0, -20), element(0, Q(1, 4), -20), -20)
    assert norm_form(L, 4).to_form() == Form(1, 0, 5)
    L = QLattice(element(1, 0, 6), element(0, 1, 6), 6)
    assert norm_form(L, 1).to_form() == Form(1, 0, -6)
    L = QLattice(element(1, 0, -4), element(0, Q(1, 2), -4), -4)
    assert norm_form(L, 1).to_form() == Form(1, 0, 1)


@given(fracs, fracs, fracs, fracs, ds, unimodular())
def test_norm_form_basis_change(a, b, c, d, D, M):
    m1, m2 = element(a, b, D), element(c, d, D)
    if a * d - b * c == 0:
        return
    L = QLattice(m1, m2, D)
    (p, q), (r, s) = M.columns
    L2 = QLattice(p * m1 + q * m2, r * m1 + s * m2, D)
    scale = 1
    for v in (a, b, c, d):
        scale *= v.denominator ** 2
    F, F2 = norm_form(L, scale).to_form(), norm_form(L2, scale).to_form()
    if F.a == F.b == F.c == 0:
        return
    assert act(F, M) == F2


def test_coords_examples():
    L = QLattice(element(Q(1, 2), 0, -20), element(0, Q(1, 4), -20), -20)
    assert coords(L, element(1, 0, -20)) == Vec2(2, 0)
    assert coords(L, L.m1) == Vec2(1, 0)
    with pytest.raises(NotInLattice):
        coords(QLattice(element(1, 0, 3), element(0, 1, 3), 3), element(Q(1, 2), 0, 3))
