"""Value-distribution functionals: closed forms, exact identities, and the
main-inequality harness on small grids.  Tolerances follow the quadrature
target (1e-9) except where a genuine transcendental estimate is involved.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from nevlab.expfunc import ExpPoly
from nevlab.fields import GaussRat, RatFunc, ZPoly
from nevlab.hpoly import HPoly
from nevlab.nevanlinna import (AdmissibilityError, DegeneracyError,
                               EntireCurve, NevanlinnaProfile, characteristic,
                               compose_target, counting_function,
                               defect_estimate, divisor_bound_check,
                               jensen_check, log_derivative_diagnostic,
                               nondegeneracy_check, normalize_target,
                               quotient_zeros, smt_verify, wronskian)
from nevlab.zeros import Divisor, zpoly_zeros

ONE = ZPoly((1,))
Z = ZPoly((0, 1))


def _exp_curve():
    return EntireCurve((ExpPoly.const(1), ExpPoly.exp(1)))


# ---------------------------------------------------------------------------
# curve construction


def test_curve_needs_substance():
    with pytest.raises(ValueError):
        EntireCurve((ONE,))                      # one component
    with pytest.raises(ValueError):
        EntireCurve((ExpPoly.zero(), ExpPoly.zero()))
    with pytest.raises(DegeneracyError):
        EntireCurve((Z, Z * Z))                  # shared factor z
    EntireCurve((ONE, Z, Z * Z))                 # fine: gcd is constant


def test_curve_value_equality():
    a = EntireCurve((ONE, Z))
    b = EntireCurve((ZPoly((1,)), ZPoly((0, 1))))
    assert a == b and hash(a) == hash(b)
    assert a != EntireCurve((ONE, Z * Z))


# ---------------------------------------------------------------------------
# characteristic


def test_characteristic_rational_closed_forms():
    line = EntireCurve((ONE, Z))
    for r in (2.0, 5.0, 10.0):
        assert characteristic(line, r) == pytest.approx(math.log(r), abs=1e-8)
    conic = EntireCurve((ONE, Z, Z * Z))
    for r in (2.0, 7.0):
        assert characteristic(conic, r) == pytest.approx(2 * math.log(r), abs=1e-8)


def test_characteristic_exponential_growth():
    fe = _exp_curve()
    for r in (10.0, 25.0, 50.0):
        assert abs(characteristic(fe, r) - r / math.pi) < 1.0


def test_characteristic_normalization_and_domain():
    assert characteristic(_exp_curve(), 1.0) == 0.0
    with pytest.raises(ValueError):
        characteristic(_exp_curve(), 0.5)
    const = EntireCurve((ONE, ZPoly((GaussRat(2, 1),))))
    assert abs(characteristic(const, 9.0)) < 1e-12


def test_characteristic_scaling_invariance():
    plain = EntireCurve((ONE, Z, Z * Z))
    scaled = EntireCurve((ONE * 7, Z * 7, Z * Z * 7))
    for r in (3.0, 12.0):
        assert characteristic(scaled, r) == pytest.approx(
            characteristic(plain, r), abs=1e-8)


# ---------------------------------------------------------------------------
# counting and Jensen


def test_counting_function_conventions():
    div = Divisor(points=((0.5 + 0j, 2), (3.0 + 0j, 1)), r=10.0)
    r = 6.0
    # |a| <= 1 contributes m log r; 1 < |a| <= r contributes m log(r/|a|)
    expect = 2 * math.log(r) + math.log(r / 3.0)
    assert counting_function(div, r) == pytest.approx(expect)
    assert counting_function(div, r, level=1) == pytest.approx(
        math.log(r) + math.log(r / 3.0))
    with pytest.raises(ValueError):
        counting_function(div, 0.5)
    with pytest.raises(ValueError):
        counting_function(div, 20.0)             # beyond the catalogued radius


def test_jensen_polynomial_and_rational():
    for phi in (Z, RatFunc(ZPoly((-2, 1)), ZPoly((3, 1)))):
        for r in (2.5, 5.0, 10.0):
            assert jensen_check(phi, r) < 1e-6
    assert jensen_check(ZPoly((-2, 1)), 2.0) < 1e-6     # zero on the circle
    assert jensen_check(ExpPoly.exp(1), 10.0) < 1e-6


# ---------------------------------------------------------------------------
# wronskian and the divisor inequality


def test_wronskian_wrapper_and_scaling():
    assert wronskian((ONE, Z)) == ExpPoly.const(1)
    h = ExpPoly.exp(1) + ExpPoly.var()
    base = (ExpPoly.const(1), ExpPoly.var(), ExpPoly.var() ** 2)
    lhs = wronskian(tuple(h * f for f in base))
    assert lhs == h ** 3 * wronskian(base)
    assert wronskian((Z, Z)).is_zero()


def test_wronskian_custom_orders():
    w = wronskian((ONE, Z * Z), orders=(0, 2))
    assert w == ExpPoly.const(2)
    with pytest.raises(ValueError):
        wronskian((ONE, Z), orders=(1, 1))


def test_divisor_bound_on_conic():
    curve = EntireCurve((ONE, Z, Z * Z))
    rep = divisor_bound_check(curve, 2.0)
    assert rep.holds
    assert rep.p0 == 2
    assert len(rep.sites) == 1
    site, quot, cap = rep.sites[0]
    assert site == pytest.approx(0.0)
    assert quot == 3 and cap == 3


def test_divisor_bound_rejects_degenerate():
    with pytest.raises(DegeneracyError):
        divisor_bound_check(EntireCurve((ONE, Z, Z + ONE)), 2.0)   # W = 0


# ---------------------------------------------------------------------------
# targets


def test_normalize_target_prefers_constant_lead():
    x0, x1 = HPoly.coordinate(2, 0), HPoly.coordinate(2, 1)
    qf = x0 * 2 + x1 * 3
    unit = normalize_target(qf)
    assert unit.coeffs[(1, 0)] == GaussRat(1)
    assert unit.coeffs[(0, 1)] == GaussRat(Fraction(3, 2))


def test_compose_target_splits_numerator_denominator():
    x0, x1 = HPoly.coordinate(2, 0), HPoly.coordinate(2, 1)
    e, d = compose_target(x0 + x1, _exp_curve())
    assert e == ExpPoly.const(1) + ExpPoly.exp(1)
    assert d == ONE
    mover = HPoly.monomial(2, (0, 1), RatFunc(ONE, ZPoly((10, 1))))
    e2, d2 = compose_target(x0 + mover, _exp_curve())
    assert d2 == ZPoly((10, 1))
    assert e2 == ExpPoly.poly(ZPoly((10, 1))) + ExpPoly.exp(1)


def test_quotient_zeros_cancels_denominator():
    e = ExpPoly.poly(ZPoly((-2, 1)) * ZPoly((3, 1)))
    div = quotient_zeros(e, ZPoly((-2, 1)), 5.0)
    assert div.total() == 1
    assert div.points[0][0] == pytest.approx(-3.0)
    with pytest.raises(DegeneracyError):
        quotient_zeros(ExpPoly.zero(), ONE, 5.0)


def test_nondegeneracy_screen():
    nondegeneracy_check(_exp_curve(), max_degree=4)     # passes quietly
    with pytest.raises(DegeneracyError) as exc:
        nondegeneracy_check(
            EntireCurve((ExpPoly.const(1), ExpPoly.exp(1), ExpPoly.exp(2))),
            max_degree=3)
    assert "degree 2" in str(exc.value)


# ---------------------------------------------------------------------------
# defects and the inequality harness


def test_defect_extremes():
    fe = _exp_curve()
    x0 = HPoly.coordinate(2, 0)
    x1 = HPoly.coordinate(2, 1)
    assert defect_estimate(fe, x0, 40.0) == pytest.approx(1.0, abs=1e-9)
    line = EntireCurve((ONE, Z))
    assert abs(defect_estimate(line, x1, 40.0)) < 1e-9
    mixed = defect_estimate(fe, x0 + x1, 40.0)
    assert 0.0 <= mixed < 0.1


def test_profile_must_grow():
    NevanlinnaProfile((2.0, 4.0), (1.0, 2.0))
    with pytest.raises(ValueError):
        NevanlinnaProfile((2.0, 4.0), (2.0, 1.0))
    with pytest.raises(ValueError):
        NevanlinnaProfile((4.0, 2.0), (1.0, 2.0))


def test_smt_fixed_targets():
    fe = _exp_curve()
    x0, x1 = HPoly.coordinate(2, 0), HPoly.coordinate(2, 1)
    radii = [float(r) for r in np.linspace(10.0, 40.0, 8)]
    rep = smt_verify(fe, (x0, x1, x0 + x1), Fraction(1, 2), radii)
    assert rep.holds_everywhere and rep.holds_eventually
    assert rep.r0 == 10.0
    assert rep.violating_measure == 0.0
    assert all(t.truncation == 19 for t in rep.targets)
    assert rep.defect_sum <= 2.1                 # deficiency budget is n+1 = 2
    assert min(rep.margins) > 0.9


def test_smt_moving_target():
    fe = _exp_curve()
    x0, x1 = HPoly.coordinate(2, 0), HPoly.coordinate(2, 1)
    mover = HPoly.monomial(2, (0, 1), RatFunc(ONE, ZPoly((10, 1))))
    radii = [float(r) for r in np.linspace(10.0, 40.0, 6)]
    rep = smt_verify(fe, (x0, x1, x0 + mover), Fraction(1, 2), radii)
    assert not rep.fixed
    assert rep.holds_everywhere
    assert rep.level_note is None                # levels materialized
    growth = [t.coeff_growth for t in rep.targets]
    assert growth[0] == growth[1] == 0.0
    assert 0.0 < growth[2] < 0.5                 # slow target is admissible


def test_smt_rejects_bad_input():
    fe = _exp_curve()
    x0, x1 = HPoly.coordinate(2, 0), HPoly.coordinate(2, 1)
    with pytest.raises(AdmissibilityError):
        smt_verify(fe, (x0, x0 + x1, x0 + x1), Fraction(1, 2), [10.0, 20.0])
    with pytest.raises(ValueError):
        smt_verify(fe, (x0, x1, x0 + x1), Fraction(-1, 2), [10.0, 20.0])
    with pytest.raises(ValueError):
        smt_verify(fe, (x0, x1, x0 + x1), Fraction(1, 2), [10.0])


def test_smt_detects_algebraic_degeneracy():
    squares = EntireCurve((ExpPoly.const(1), ExpPoly.exp(1), ExpPoly.exp(2)))
    x0, x1, x2 = (HPoly.coordinate(3, k) for k in range(3))
    coords = (x0, x1, x2, x0 + x1 + x2)
    with pytest.raises(DegeneracyError):
        smt_verify(squares, coords, Fraction(1, 2), [10.0, 20.0])


def test_log_derivative_stays_small():
    fe = _exp_curve()
    rep = log_derivative_diagnostic(fe, (10.0, 20.0))
    assert all(v < 1e-9 for v in rep.ratios)
    tower = EntireCurve((ExpPoly.const(1), ExpPoly.exp(1), ExpPoly.exp(2)))
    rep2 = log_derivative_diagnostic(tower, (10.0, 18.0, 26.0))
    # T(r) = 2(r-1)/pi here, so the ratio tracks pi log 2 / (2(r-1))
    for r, ratio in zip(rep2.radii, rep2.ratios):
        assert ratio == pytest.approx(math.pi * math.log(2) / (2 * (r - 1)),
                                      abs=1e-3)
    assert rep2.nonincreasing_fraction == 1.0
