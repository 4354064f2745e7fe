from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multiacm.algebra import Polynomial, PrimeField, RationalField, RingSpec, default_prime
from multiacm.algebra.field import is_prime


def test_default_prime(monkeypatch):
    monkeypatch.delenv("MULTIACM_PRIME", raising=False)
    assert default_prime() == 32003
    monkeypatch.setenv("MULTIACM_PRIME", "65521")
    assert PrimeField().p == 65521


@pytest.mark.parametrize("p", [4, 32002, 101, 9973])
def test_rejects_bad_primes(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(1, 32002))
def test_inverse_mod_p(a):
    F = PrimeField()
    assert F(a * F.inv(a)) == 1


def test_fraction_reduced_mod_p():
    F = PrimeField()
    assert F(Fraction(1, 2)) * 2 % F.p == 1


R = RingSpec((1, 2))
exps = st.tuples(*[st.integers(0, 2)] * R.nvars)
polys = st.dictionaries(exps, st.integers(-50, 50), max_size=4).map(lambda t: Polynomial(R, t))


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == 0


@settings(max_examples=40)
@given(polys, polys)
def test_exact_division_roundtrip(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_div(g) == f


def test_multidegree_of_ring_variables():
    assert R.x(1, 0).multidegree() == (1, 0)
    assert (R.x(1, 1) * R.x(2, 2) ** 2).multidegree() == (1, 2)
    assert not (R.x(1, 0) + R.x(2, 0)).is_multihomogeneous()


def test_evaluate_over_rationals():
    Rq = RingSpec((1,), RationalField())
    f = Rq.x(1, 0) * 3 - Rq.x(1, 1)
    assert f.evaluate([Fraction(1, 3), 1]) == 0
