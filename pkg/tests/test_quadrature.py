import math

import numpy as np
import pytest

from nevlab.quadrature import QuadResult, circle_average, default_target


def test_mean_value_property_of_log_modulus():
    # average of log|z - a| over |z| = r is log r when |a| < r
    for a, r in ((0.5 + 0.2j, 2.0), (1.5j, 3.0), (0.0, 1.5)):
        res = circle_average(lambda z: math.log(abs(z - a)), r)
        assert res.converged
        assert res.value == pytest.approx(math.log(r), abs=1e-9)


def test_outside_point_average_is_log_modulus():
    a = 4.0 + 3.0j       # |a| = 5
    res = circle_average(lambda z: math.log(abs(z - a)), 2.0)
    assert res.value == pytest.approx(math.log(5.0), abs=1e-9)


def test_constant_integrand_converges_immediately():
    res = circle_average(lambda z: 7.25, 10.0, start=64)
    assert res.value == 7.25
    assert res.samples == 128          # one doubling to confirm


def test_vectorized_path_matches_scalar():
    def scalar(z):
        return math.cos(z.real) * math.exp(-abs(z))

    def batch(zs):
        return np.cos(zs.real) * np.exp(-np.abs(zs))
    batch.vectorized = True

    a = circle_average(scalar, 3.0)
    b = circle_average(batch, 3.0)
    assert a.value == pytest.approx(b.value, abs=1e-10)
    assert b.converged


def test_target_controls_refinement():
    fn = lambda z: abs(z.real) ** 1.5
    coarse = circle_average(fn, 1.0, target=1e-3)
    fine = circle_average(fn, 1.0, target=1e-10)
    assert fine.samples >= coarse.samples
    assert fine.error <= 1e-10 or not fine.converged


def test_cap_stops_runaway(monkeypatch):
    # a discontinuous integrand will not converge; the cap must end it
    fn = lambda z: 1.0 if z.real > 0.99 else 0.0
    res = circle_average(fn, 1.0, target=1e-14, cap=1 << 10)
    assert isinstance(res, QuadResult)
    assert not res.converged
    assert res.samples <= 1 << 10


def test_default_target_env_override(monkeypatch):
    monkeypatch.delenv("NEVLAB_QUAD_TARGET", raising=False)
    base = default_target()
    monkeypatch.setenv("NEVLAB_QUAD_TARGET", "1e-4")
    assert default_target() == 1e-4
    monkeypatch.delenv("NEVLAB_QUAD_TARGET", raising=False)
    assert default_target() == base
