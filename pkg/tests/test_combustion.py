import random

import pytest

from droughtcap.combustion import CtParams, ct_derate_factor, ct_usable_capacity
from droughtcap.errors import InvariantViolation

P = CtParams(installed_capacity_mw=100.0)


def test_factor_is_one_at_the_preclamp_boundary():
    t_star = 0.15 / 0.0083  # where -C_ct*t + 1.15 crosses 1.0
    assert ct_derate_factor(P, t_star) == pytest.approx(1.0, abs=1e-12)


def test_hot_day_factor():
    # frozen: -0.0083 * 30.12 + 1.15
    assert ct_derate_factor(P, 30.12) == pytest.approx(0.900004, abs=1e-9)
    assert ct_usable_capacity(P, 30.12) == pytest.approx(90.0004, abs=1e-7)


def test_cool_day_clamps_to_nameplate():
    # the raw line would read 1.067 at 10 degC
    assert ct_usable_capacity(P, 10.0) == 100.0
    assert ct_usable_capacity(P, -20.0) == 100.0


def test_extreme_heat_floors_at_zero():
    assert ct_usable_capacity(P, 500.0) == 0.0


def test_strictly_decreasing_unclamped():
    rng = random.Random(8)
    lo = 0.15 / 0.0083
    for _ in range(1000):
        t1 = rng.uniform(lo + 1e-6, 60.0)
        t2 = t1 + rng.uniform(1e-6, 10.0)
        assert ct_usable_capacity(P, t2) < ct_usable_capacity(P, t1)


def test_slope_matches_coefficient():
    got = ct_usable_capacity(P, 25.0) - ct_usable_capacity(P, 26.0)
    assert got == pytest.approx(0.0083 * P.installed_capacity_mw, rel=1e-9)


def test_output_interval():
    rng = random.Random(9)
    for _ in range(500):
        t = rng.uniform(-40.0, 200.0)
        assert 0.0 <= ct_usable_capacity(P, t) <= P.installed_capacity_mw


def test_param_invariants():
    with pytest.raises(InvariantViolation):
        CtParams(installed_capacity_mw=0.0)
    with pytest.raises(InvariantViolation):
        CtParams(installed_capacity_mw=10.0, coefficient_per_c=-0.01)
