"""Zero location: exact routes for polynomials and rational functions,
argument-principle walks for exponential sums."""

import cmath
import math

import pytest

from nevlab.expfunc import ExpPoly
from nevlab.fields import GaussRat, RatFunc, ZPoly
from nevlab.zeros import (Divisor, disk_winding, exppoly_zeros,
                          ratfunc_divisors, yun_squarefree, zpoly_roots,
                          zpoly_zeros)


def test_yun_separates_multiplicities():
    p = ZPoly((-1, 1)) ** 3 * ZPoly((2, 1)) ** 2 * ZPoly((0, 1))
    parts = dict()
    for q, m in yun_squarefree(p):
        parts[m] = q.monic()
    assert parts[1] == ZPoly((0, 1))
    assert parts[2] == ZPoly((2, 1))
    assert parts[3] == ZPoly((-1, 1))


def test_zpoly_roots_with_multiplicity():
    p = ZPoly((GaussRat(0, -1), 1)) ** 2 * ZPoly((-3, 1))   # (z - i)^2 (z - 3)
    roots = sorted(zpoly_roots(p), key=lambda t: t[0].real)
    assert roots[0][1] == 2 and roots[0][0] == pytest.approx(1j, abs=1e-9)
    assert roots[1][1] == 1 and roots[1][0] == pytest.approx(3.0, abs=1e-9)


def test_zpoly_zeros_respects_radius():
    p = ZPoly((-8, 0, 0, 1))          # zeros: 2, 2w, 2w^2 with |.| = 2
    div = zpoly_zeros(p, 5.0)
    assert div.total() == 3
    assert div.r == 5.0
    inside = zpoly_zeros(p, 1.0)
    assert inside.total() == 0


def test_divisor_total_truncates():
    div = Divisor(points=((0.5 + 0j, 3), (1.0 + 1j, 1)), r=2.0)
    assert div.total() == 4
    assert div.total(level=1) == 2
    assert div.total(level=2) == 3


def test_ratfunc_divisors_split_zeros_and_poles():
    f = RatFunc(ZPoly((-1, 1)) ** 2, ZPoly((2, 1)))
    zeros, poles = ratfunc_divisors(f, 10.0)
    assert zeros.total() == 2 and poles.total() == 1
    assert zeros.points[0][0] == pytest.approx(1.0)
    assert poles.points[0][0] == pytest.approx(-2.0)


def test_disk_winding_counts_zeros():
    assert disk_winding(lambda z: z ** 3, 1.5) == 3
    assert disk_winding(lambda z: cmath.exp(z), 4.0) == 0
    assert disk_winding(lambda z: z - 2, 1.0) == 0
    assert disk_winding(lambda z: z - 2, 3.0) == 1


def test_exppoly_zeros_of_shifted_exponential():
    # e^z = 1 at 2 pi i k
    f = ExpPoly.exp(1) - 1
    div = exppoly_zeros(f, 7.0)
    assert div.total() == 3
    found = sorted(p.imag for p, _ in div.points)
    expect = [-2 * math.pi, 0.0, 2 * math.pi]
    assert all(a == pytest.approx(b, abs=1e-6) for a, b in zip(found, expect))


def test_exppoly_zeros_transcendental_mix():
    # fixed points of e^z: a conjugate pair near 0.318 +- 1.337i
    f = ExpPoly.exp(1) - ExpPoly.var()
    div = exppoly_zeros(f, 2.0)
    assert div.total() == 2
    for point, m in div.points:
        assert m == 1
        assert abs(cmath.exp(point) - point) < 1e-6


def test_exppoly_zeros_polynomial_route():
    # purely polynomial input takes the exact path
    f = ExpPoly.poly(ZPoly((-1, 0, 1)))       # z^2 - 1
    div = exppoly_zeros(f, 3.0)
    assert div.total() == 2
    assert {round(p.real) for p, _ in div.points} == {-1, 1}
