import random

import pytest

from nevlab.fields import GaussRat
from nevlab.mrat import MPoly, MRat, admissible_derivative_set


def _rand_mpoly(rng, m, deg=2):
    out = MPoly.const(m, rng.randint(-2, 2))
    for _ in range(rng.randint(1, 3)):
        term = MPoly.const(m, rng.randint(-3, 3))
        for _ in range(rng.randint(0, deg)):
            term = term * MPoly.var(m, rng.randrange(m))
        out = out + term
    return out


def test_mpoly_arithmetic_and_eval():
    x, y = MPoly.var(2, 0), MPoly.var(2, 1)
    p = (x + y) * (x - y)
    q = x * x - y * y
    assert p == q
    pt = (GaussRat(3), GaussRat(2))
    assert p(pt) == GaussRat(5)


def test_mpoly_partials_commute():
    rng = random.Random(61)
    for _ in range(20):
        p = _rand_mpoly(rng, 3)
        assert p.partial(0).partial(2) == p.partial(2).partial(0)


def test_mrat_field_operations():
    x = MRat.var(1, 0)
    f = (x + 1) / (x - 1)
    assert f * (x - 1) == x + 1
    assert (f - f).is_zero()
    assert f.inverse() * f == MRat.const(1, 1)
    with pytest.raises(ZeroDivisionError):
        (f - f).inverse()


def test_mrat_quotient_rule():
    x, y = MRat.var(2, 0), MRat.var(2, 1)
    f = x / (y + 1)
    df = f.partial(1)
    assert df == -x / ((y + 1) * (y + 1))


def test_derive_iterates_partials():
    x, y = MRat.var(2, 0), MRat.var(2, 1)
    f = x * x * y
    assert f.derive((1, 1)) == 2 * x
    assert f.derive((0, 0)) == f
    assert f.derive((2, 1)) == MRat.const(2, 2)


def test_admissible_set_univariate_monomials():
    t = MRat.var(1, 0)
    s = admissible_derivative_set([MRat.const(1, 1), t, t * t])
    assert s.alphas == ((0,), (1,), (2,))
    assert s.p0 == 2
    assert s.weight == 3                 # n(n+1)/2 with n = 2
    assert s.wronskian == MRat.const(1, 2)


def test_admissible_set_two_variables():
    x, y = MRat.var(2, 0), MRat.var(2, 1)
    s = admissible_derivative_set([MRat.const(2, 1), x, y])
    # one derivative in each direction suffices; weight stays at level <= 1
    assert s.p0 <= 1
    assert s.weight <= 2
    assert not s.wronskian.is_zero()


def test_admissible_set_rejects_dependence():
    t = MRat.var(1, 0)
    with pytest.raises(ValueError):
        admissible_derivative_set([MRat.const(1, 1), t, t + 1])


def test_admissible_set_rational_entries():
    t = MRat.var(1, 0)
    fns = [MRat.const(1, 1), 1 / (t + 1), t]
    s = admissible_derivative_set(fns)
    assert s.p0 <= 2
    assert not s.wronskian.is_zero()
