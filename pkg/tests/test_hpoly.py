import random
from fractions import Fraction
from math import comb

import pytest

from nevlab.fields import GaussRat, RatFunc, ZPoly
from nevlab.hpoly import HPoly, euler_defect, monomial_count, monomials


def _rand_form(rng, nvars, d):
    coeffs = {e: rng.randint(-4, 4) for e in monomials(nvars - 1, d)
              if rng.random() < 0.7}
    coeffs = {e: c for e, c in coeffs.items() if c}
    return HPoly(nvars, d, coeffs) if coeffs else HPoly.coordinate(nvars, 0) ** d


def test_monomials_enumeration():
    ms = monomials(2, 2)        # degree-2 monomials in x0, x1, x2
    assert len(ms) == comb(4, 2) == monomial_count(2, 2)
    assert all(sum(e) == 2 and len(e) == 3 for e in ms)
    assert ms[0] == (2, 0, 0)               # lex descending
    assert list(ms) == sorted(ms, reverse=True)
    assert monomials(3, 0) == ((0, 0, 0, 0),)


def test_constructor_rejects_bad_terms():
    with pytest.raises(ValueError):
        HPoly(2, 2, {(1, 0): 1})            # total degree 1 != 2
    with pytest.raises(ValueError):
        HPoly(2, 1, {(1, 0, 0): 1})         # three exponents for two vars


def test_euler_identity():
    rng = random.Random(5)
    for _ in range(30):
        p = _rand_form(rng, 3, rng.randint(1, 3))
        assert euler_defect(p).is_zero()


def test_mul_adds_degrees_and_matches_evaluation():
    rng = random.Random(7)
    for _ in range(30):
        p = _rand_form(rng, 2, rng.randint(1, 2))
        q = _rand_form(rng, 2, rng.randint(1, 2))
        prod = p * q
        assert prod.degree == p.degree + q.degree
        xs = [GaussRat(rng.randint(-3, 3)), GaussRat(rng.randint(-3, 3))]
        assert prod(xs) == p(xs) * q(xs)


def test_pow_matches_repeated_mul():
    p = HPoly.coordinate(3, 0) + HPoly.coordinate(3, 2)
    assert p ** 3 == p * p * p
    assert p ** 1 == p
    assert (p ** 2).degree == 2


def test_partial_derivatives_commute():
    rng = random.Random(9)
    p = _rand_form(rng, 3, 3)
    assert p.partial(0).partial(1) == p.partial(1).partial(0)
    assert p.partial(0).degree == p.degree - 1 or p.partial(0).is_zero()


def test_scalar_multiplication_both_sides():
    p = HPoly.coordinate(2, 1)
    assert 3 * p == p * 3 == p + p + p
    assert (p * GaussRat(0, 1)).coeffs[(0, 1)] == GaussRat(0, 1)


def test_moving_coefficients_specialize():
    mover = RatFunc(ZPoly((1,)), ZPoly((2, 1)))     # 1/(z+2)
    p = HPoly.monomial(2, (1, 0), mover) + HPoly.coordinate(2, 1)
    assert p.is_moving()
    frozen = p.specialize(GaussRat(1))              # z = 1: coefficient 1/3
    assert not frozen.is_moving()
    assert frozen.coeffs[(1, 0)] == GaussRat(Fraction(1, 3))
    assert not HPoly.coordinate(2, 0).is_moving()


def test_param_derivative_kills_constants():
    mover = RatFunc(ZPoly((0, 1)))                  # coefficient z
    p = HPoly.monomial(2, (2, 0), mover) + HPoly.monomial(2, (0, 2), 5)
    dp = p.param_derivative()
    assert dp.coeffs == {(2, 0): RatFunc(ZPoly((1,)))}


def test_compose_linear_identity_and_invertible():
    rng = random.Random(11)
    p = _rand_form(rng, 3, 2)
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert p.compose_linear(eye) == p
    shear = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    q = p.compose_linear(shear)
    xs = [GaussRat(2), GaussRat(-1), GaussRat(3)]
    sheared = [xs[0] + xs[1], xs[1], xs[2]]
    assert q(xs) == p(sheared)


def test_terms_desc_is_lex_sorted():
    rng = random.Random(13)
    p = _rand_form(rng, 3, 2)
    exps = [e for e, _ in p.terms_desc()]
    assert exps == sorted(exps, reverse=True)
