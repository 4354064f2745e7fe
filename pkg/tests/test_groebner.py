"""Reduced Groebner bases checked against sympy over Q (same grevlex order)."""

import random
from math import comb

import sympy as sp
from hypothesis import given, settings, strategies as st

from multiacm.algebra import Ideal, Polynomial, RationalField, RingSpec, buchberger, hilbert_multi, normal_form
from multiacm.algebra.ideal import intersect_all, saturation_irrelevant, saturation_maximal

RQ = RingSpec((1, 2), RationalField())
SYMS = sp.symbols("v0:5")


def to_sympy(f):
    return sum(c * sp.prod([x**k for x, k in zip(SYMS, e)]) for e, c in f.terms.items())


def random_poly(rng, ring, nterms=3, deg=2):
    terms = {}
    for _ in range(nterms):
        e = [0] * ring.nvars
        for _ in range(deg):
            e[rng.randrange(ring.nvars)] += 1
        terms[tuple(e)] = rng.randint(-5, 5)
    return Polynomial(ring, terms)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_matches_sympy(seed, k):
    rng = random.Random(seed)
    fs = [random_poly(rng, RQ) for _ in range(k)]
    fs = [f for f in fs if f]
    if not fs:
        return
    ours = {sp.Poly(to_sympy(g), *SYMS).monic().as_expr() for g in buchberger(fs)}
    G = sp.groebner([to_sympy(f) for f in fs], *SYMS, order="grevlex")
    theirs = {sp.Poly(g, *SYMS).monic().as_expr() for g in G.exprs}
    assert ours == theirs


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_reduced_basis_unique_under_shuffles(seed):
    rng = random.Random(seed)
    R = RingSpec((1, 2))
    fs = [random_poly(rng, R) for _ in range(3)]
    fs = [f for f in fs if f]
    if not fs:
        return
    base = buchberger(fs)
    shuffled = fs[:]
    rng.shuffle(shuffled)
    extra = shuffled + [fs[0] * R.x(1, 0)]
    assert buchberger(shuffled) == base
    assert buchberger(extra) == base


def test_normal_form_membership():
    R = RingSpec((1, 1))
    I = Ideal(R, [R.x(1, 0) * R.x(2, 1), R.x(1, 1) ** 2])
    assert normal_form(R.x(1, 0) * R.x(2, 1) * R.x(2, 0) + R.x(1, 1) ** 3, I.gb()).is_zero()
    assert not I.contains(R.x(1, 0) * R.x(2, 0))


def test_hilbert_of_ring_is_binomial_product():
    R = RingSpec((1, 2))
    zero = Ideal(R, [])
    for d1 in range(5):
        for d2 in range(5):
            assert hilbert_multi(zero, (d1, d2)) == comb(d1 + 1, 1) * comb(d2 + 2, 2)


def test_intersection_of_coordinate_ideals():
    R = RingSpec((2,))
    x, y, z = (R.x(1, j) for j in range(3))
    I = intersect_all([Ideal(R, [x]), Ideal(R, [y]), Ideal(R, [z])])
    assert I == Ideal(R, [x * y * z])


def test_saturation_idempotent_and_removes_irrelevant_component():
    R = RingSpec((1, 1))
    x0, x1, y0, y1 = R.x(1, 0), R.x(1, 1), R.x(2, 0), R.x(2, 1)
    P = Ideal(R, [x1, y1])
    junk = Ideal(R, [x0, x1]) * Ideal(R, [x0, x1])
    I = intersect_all([P, Ideal(R, [x1, y1, x0**2, x0 * y0])])
    S = saturation_irrelevant(I)
    assert S == P
    assert saturation_irrelevant(S) == S
    assert saturation_irrelevant(P + junk) == Ideal.unit(R)
    assert saturation_maximal(Ideal(R, [x0, x1, y0**2, y1**3])) == Ideal.unit(R)
