import math
from datetime import date

import pytest

from droughtcap.errors import InvariantViolation
from droughtcap.fleet import SiteHydrology, SiteWeather
from droughtcap.scenario import (
    Scenario,
    apply_scenario,
    apply_to_registry,
    load_scenarios,
    standard_scenarios,
)
from droughtcap.series import DailySeries, Unit

START = date(2025, 6, 1)


def make_pair():
    weather = SiteWeather(
        site_id="S1",
        dry_bulb=DailySeries(START, (20.0, 25.0, 30.0), Unit.DEG_C),
        relative_humidity=DailySeries(START, (50.0, 60.0, 70.0), Unit.PERCENT),
        pressure=DailySeries(START, (101.0, 101.0, 101.0), Unit.KPA),
        irradiance=DailySeries(START, (200.0, 250.0, 300.0), Unit.W_PER_M2),
        wind_2m=DailySeries(START, (2.0, 3.0, 4.0), Unit.M_PER_S),
        wind_10m=DailySeries(START, (3.0, 4.0, 5.0), Unit.M_PER_S),
        wind_50m=DailySeries(START, (4.0, 5.0, 6.0), Unit.M_PER_S),
    )
    hydro = SiteHydrology(
        site_id="S1",
        streamflow=DailySeries(START, (100.0, 80.0, 60.0), Unit.M3_PER_S),
        water_temperature=DailySeries(START, (20.0, 22.0, 24.0), Unit.DEG_C),
    )
    return weather, hydro


def test_identity_returns_inputs_unchanged():
    weather, hydro = make_pair()
    s = Scenario("baseline", 0.0, 1.0)
    new_weather, new_hydro = apply_scenario(weather, hydro, s)
    assert new_weather is weather
    assert new_hydro is hydro


def test_temperature_uplift():
    weather, hydro = make_pair()
    s = Scenario("C1", 1.0, 1.0, water_temp_response=0.6)
    new_weather, new_hydro = apply_scenario(weather, hydro, s)
    assert new_weather.dry_bulb.values == (21.0, 26.0, 31.0)
    assert new_hydro.water_temperature.values == (20.6, 22.6, 24.6)
    # flow and all non-perturbed weather channels are shared, not copied
    assert new_hydro.streamflow is hydro.streamflow
    assert new_weather.relative_humidity is weather.relative_humidity
    assert new_weather.irradiance is weather.irradiance
    assert new_weather.wind_50m is weather.wind_50m


def test_flow_reduction():
    weather, hydro = make_pair()
    s = Scenario("R10", 0.0, 0.9)
    new_weather, new_hydro = apply_scenario(weather, hydro, s)
    assert new_weather is weather
    assert new_hydro.streamflow.values == pytest.approx((90.0, 72.0, 54.0), rel=1e-12)
    # default flow->temperature response is zero
    assert new_hydro.water_temperature is hydro.water_temperature


def test_flow_temperature_response_term():
    weather, hydro = make_pair()
    s = Scenario("R10w", 0.0, 0.9, water_temp_flow_response=2.0)
    _, new_hydro = apply_scenario(weather, hydro, s)
    want = 20.0 + 2.0 * math.log(0.9)
    assert new_hydro.water_temperature.values[0] == pytest.approx(want, rel=1e-12)


def test_composition_matches_combined_scenario():
    weather, hydro = make_pair()
    s1 = Scenario("a", 1.0, 0.9)
    s2 = Scenario("b", 2.0, 0.8)
    combined = Scenario("ab", 3.0, 0.72)

    w12, h12 = apply_scenario(*apply_scenario(weather, hydro, s1), s2)
    wc, hc = apply_scenario(weather, hydro, combined)
    assert w12.dry_bulb.values == pytest.approx(wc.dry_bulb.values, rel=1e-12)
    assert h12.streamflow.values == pytest.approx(hc.streamflow.values, rel=1e-12)
    assert h12.water_temperature.values == pytest.approx(
        hc.water_temperature.values, rel=1e-12
    )


def test_standard_scenarios():
    scenarios = standard_scenarios()
    assert len(scenarios) == 7
    assert [s.name for s in scenarios] == ["baseline", "C1", "C2", "C3", "R10", "R20", "R30"]
    by_name = {s.name: s for s in scenarios}
    assert by_name["C3"].air_temp_delta_c == 3.0
    assert by_name["C2"].streamflow_scale == 1.0
    assert by_name["R30"].streamflow_scale == 0.7
    assert by_name["R10"].air_temp_delta_c == 0.0
    assert by_name["baseline"].water_temp_delta_c == 0.0


def test_registry_perturbation_identity_and_effect(registry):
    assert apply_to_registry(registry, Scenario("baseline", 0.0, 1.0)) is registry
    perturbed = apply_to_registry(registry, Scenario("R20", 0.0, 0.8))
    assert perturbed.generators is registry.generators
    for sid, site in registry.hydrology.items():
        got = perturbed.hydrology[sid].streamflow.values
        want = tuple(0.8 * v for v in site.streamflow.values)
        assert got == want


def test_scenario_invariants():
    with pytest.raises(InvariantViolation):
        Scenario("", 0.0, 1.0)
    with pytest.raises(InvariantViolation):
        Scenario("x", 0.0, 0.0)
    with pytest.raises(InvariantViolation):
        Scenario("x", 0.0, 1.6)


def test_load_scenarios_fixture_matches_standard(fixture_dir):
    assert load_scenarios(fixture_dir / "scenarios.toml") == standard_scenarios()


def test_load_scenarios_validation(tmp_path):
    bad = tmp_path / "s.toml"
    bad.write_text('[[scenario]]\nair_temp_delta_c = 1.0\n')
    with pytest.raises(InvariantViolation):
        load_scenarios(bad)
    bad.write_text('[[scenario]]\nname = "x"\nbogus_key = 1\n')
    with pytest.raises(InvariantViolation):
        load_scenarios(bad)
    bad.write_text("just_text = true\n")
    with pytest.raises(InvariantViolation):
        load_scenarios(bad)
