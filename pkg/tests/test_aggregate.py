import json
import math
import random
from datetime import date

import pytest

from droughtcap.aggregate import (
    capacity_factor,
    derate_fleet,
    flow_generation_correlation,
    write_report_csv,
    write_summary_json,
)
from droughtcap.combustion import CtParams, ct_usable_capacity
from droughtcap.errors import (
    DegenerateInput,
    DeratingError,
    EmptyCategory,
    MissingSeries,
)
from droughtcap.fleet import (
    FleetRegistry,
    Fuel,
    GeneratorRecord,
    SiteHydrology,
    SiteWeather,
    Technology,
    WaterSource,
)
from droughtcap.hydro import HydroParams, hydro_usable_capacity
from droughtcap.once_through import ot_usable_capacity
from droughtcap.psychro import air_state
from droughtcap.pv import PvParams, pv_power
from droughtcap.recirc import rc_usable_capacity
from droughtcap.series import DailySeries, Unit
from droughtcap.wind import wind_usable_capacity

from conftest import SUMMER_END, SUMMER_START
from indep_oracles import ols_fit

START = date(2025, 6, 1)


class TestCapacityFactor:
    def test_all_at_nameplate(self):
        assert capacity_factor([100.0, 50.0], [100.0, 50.0]) == 1.0

    def test_all_zero(self):
        assert capacity_factor([0.0, 0.0], [100.0, 50.0]) == 0.0

    def test_arithmetic(self):
        assert capacity_factor([50.0, 100.0], [100.0, 100.0]) == 0.75

    def test_empty_category(self):
        with pytest.raises(EmptyCategory):
            capacity_factor([], [])
        with pytest.raises(EmptyCategory):
            capacity_factor([0.0], [0.0])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            capacity_factor([1.0], [1.0, 2.0])


def micro_registry():
    """One hydro + one combustion turbine on a single 2-day site."""
    site = "S1"
    weather = SiteWeather(
        site_id=site,
        dry_bulb=DailySeries(START, (20.0, 30.0), Unit.DEG_C),
        relative_humidity=DailySeries(START, (50.0, 40.0), Unit.PERCENT),
        pressure=DailySeries(START, (101.0, 101.0), Unit.KPA),
        irradiance=DailySeries(START, (250.0, 300.0), Unit.W_PER_M2),
        wind_2m=DailySeries(START, (2.0, 2.0), Unit.M_PER_S),
        wind_10m=DailySeries(START, (3.0, 3.0), Unit.M_PER_S),
        wind_50m=DailySeries(START, (4.0, 4.0), Unit.M_PER_S),
    )
    hydrology = SiteHydrology(
        site_id=site,
        streamflow=DailySeries(START, (100.0, 0.0), Unit.M3_PER_S),
        water_temperature=DailySeries(START, (20.0, 22.0), Unit.DEG_C),
    )
    h1 = GeneratorRecord(
        id="h1", name="Dam", technology=Technology.HYDRO, installed_capacity_mw=60.0,
        site_id=site, water_source=WaterSource.FRESH_SURFACE, fuel=Fuel.NONE,
        hydro=HydroParams(head_m=50.0, efficiency=0.9, installed_capacity_mw=60.0),
    )
    ct1 = GeneratorRecord(
        id="ct1", name="Peaker", technology=Technology.COMBUSTION_TURBINE,
        installed_capacity_mw=100.0, site_id=site,
        water_source=WaterSource.NONE, fuel=Fuel.NATURAL_GAS,
    )
    return FleetRegistry(
        generators={"h1": h1, "ct1": ct1},
        hydrology={site: hydrology},
        weather={site: weather},
        wind_curves={},
    )


def test_capped_hydro_reports_cf_one():
    reg = micro_registry()
    small = GeneratorRecord(
        id="h1", name="Dam", technology=Technology.HYDRO, installed_capacity_mw=10.0,
        site_id="S1", water_source=WaterSource.FRESH_SURFACE, fuel=Fuel.NONE,
        hydro=HydroParams(head_m=50.0, efficiency=0.9, installed_capacity_mw=10.0),
    )
    reg = FleetRegistry(
        generators={"h1": small}, hydrology=reg.hydrology,
        weather=reg.weather, wind_curves={},
    )
    report = derate_fleet(reg, START, START)  # day with 100 m3/s
    assert report.per_category["hydro"].capacity_factor.values == (1.0,)


def test_category_capacity_factor_arithmetic():
    report = derate_fleet(micro_registry(), START, date(2025, 6, 2))
    # day 1: hydro 44.145 of 60, ct 98.4 of 100
    assert report.per_category["hydro"].capacity_factor.values[0] == pytest.approx(
        44.145 / 60.0, rel=1e-12
    )
    assert report.fleet_cf.values[0] == pytest.approx(142.545 / 160.0, rel=1e-12)


def test_fixture_fleet_matches_direct_module_calls(registry):
    start, end = SUMMER_START, SUMMER_END
    report = derate_fleet(registry, start, end)
    n_days = (end - start).days + 1

    # one generator of each technology, recomputed without the orchestrator
    hyd = registry.hydrology
    wx = registry.weather

    g = registry.generators["h3"]
    flows = hyd[g.site_id].streamflow
    want = tuple(hydro_usable_capacity(g.hydro, q) for q in flows.values)
    assert report.per_generator["h3"].values == want

    g = registry.generators["ot1"]
    want = tuple(
        ot_usable_capacity(g.thermal, q, tw)
        for q, tw in zip(
            hyd[g.site_id].streamflow.values, hyd[g.site_id].water_temperature.values
        )
    )
    assert report.per_generator["ot1"].values == want

    g = registry.generators["rc2"]
    site_w = wx[g.site_id]
    want = tuple(
        rc_usable_capacity(g.thermal, q, tw, air_state(td, h, p))
        for q, tw, td, h, p in zip(
            hyd[g.site_id].streamflow.values,
            hyd[g.site_id].water_temperature.values,
            site_w.dry_bulb.values,
            site_w.relative_humidity.values,
            site_w.pressure.values,
        )
    )
    assert report.per_generator["rc2"].values == want

    g = registry.generators["ct3"]
    params = CtParams(installed_capacity_mw=g.installed_capacity_mw)
    want = tuple(ct_usable_capacity(params, td) for td in wx[g.site_id].dry_bulb.values)
    assert report.per_generator["ct3"].values == want

    g = registry.generators["pv2"]
    site_w = wx[g.site_id]
    want = tuple(
        pv_power(g.pv, gi, td)
        for gi, td in zip(site_w.irradiance.values, site_w.dry_bulb.values)
    )
    assert report.per_generator["pv2"].values == want

    g = registry.generators["wd2"]
    site_w = wx[g.site_id]
    want = tuple(
        wind_usable_capacity(g.wind, registry.wind_curves, a, b, c)
        for a, b, c in zip(
            site_w.wind_2m.values, site_w.wind_10m.values, site_w.wind_50m.values
        )
    )
    assert report.per_generator["wd2"].values == want

    # non-at-risk and unmodeled units sit at nameplate
    assert report.per_generator["ot4"].values == (800.0,) * n_days
    assert report.per_generator["rc5"].values == (350.0,) * n_days
    assert report.per_generator["ob1"].values == (40.0,) * n_days


def test_conservation_and_cf_bounds(registry):
    report = derate_fleet(registry, SUMMER_START, SUMMER_END)
    ids = sorted(report.per_generator)
    for d in range(len(report.fleet_total)):
        day_sum = math.fsum(report.per_generator[gid].values[d] for gid in ids)
        assert report.fleet_total.values[d] == day_sum
        cat_sum = math.fsum(
            res.total.values[d] for res in report.per_category.values()
        )
        assert cat_sum == pytest.approx(report.fleet_total.values[d], rel=1e-12)
        assert 0.0 <= report.fleet_cf.values[d] <= 1.0
    for cat, res in report.per_category.items():
        members = [gid for gid in ids if report.category_of[gid] == cat]
        for d in range(len(res.total)):
            member_sum = math.fsum(report.per_generator[gid].values[d] for gid in members)
            assert res.total.values[d] == member_sum
        assert all(0.0 <= v <= 1.0 for v in res.capacity_factor.values)


def test_per_generator_never_exceeds_nameplate(registry):
    report = derate_fleet(registry, SUMMER_START, SUMMER_END)
    for gid, series in report.per_generator.items():
        assert max(series.values) <= report.installed[gid] + 1e-12


def test_parallel_map_is_deterministic(registry):
    sequential = derate_fleet(registry, SUMMER_START, SUMMER_END, jobs=1)
    parallel = derate_fleet(registry, SUMMER_START, SUMMER_END, jobs=4)
    assert parallel == sequential


def test_missing_series_error_names_site_and_channel():
    reg = micro_registry()
    pv = GeneratorRecord(
        id="pv9", name="Solar", technology=Technology.SOLAR_PV,
        installed_capacity_mw=20.0, site_id="S2",
        water_source=WaterSource.NONE, fuel=Fuel.NONE,
        pv=PvParams(installed_capacity_mw=20.0),
    )
    reg = FleetRegistry(
        generators={"pv9": pv}, hydrology=reg.hydrology,
        weather=reg.weather, wind_curves={},
    )
    with pytest.raises(MissingSeries) as exc_info:
        derate_fleet(reg, START, START)
    err = exc_info.value
    assert (err.generator_id, err.site_id, err.channel) == ("pv9", "S2", "irradiance")


def test_range_not_covered_raises_missing_series(registry):
    with pytest.raises(MissingSeries):
        derate_fleet(registry, date(2025, 5, 1), date(2025, 6, 5))


def test_empty_fleet_rejected():
    reg = FleetRegistry(generators={}, hydrology={}, weather={}, wind_curves={})
    with pytest.raises(EmptyCategory):
        derate_fleet(reg, START, START)


def test_kernel_failures_name_generator_and_date():
    reg = micro_registry()
    hot = SiteWeather(
        site_id="S1",
        dry_bulb=DailySeries(START, (25.0, 75.0), Unit.DEG_C),  # out of psychro range
        relative_humidity=DailySeries(START, (50.0, 40.0), Unit.PERCENT),
        pressure=DailySeries(START, (101.0, 101.0), Unit.KPA),
        irradiance=DailySeries(START, (250.0, 300.0), Unit.W_PER_M2),
        wind_2m=DailySeries(START, (2.0, 2.0), Unit.M_PER_S),
        wind_10m=DailySeries(START, (3.0, 3.0), Unit.M_PER_S),
        wind_50m=DailySeries(START, (4.0, 4.0), Unit.M_PER_S),
    )
    from droughtcap.recirc import RecircParams

    rc = GeneratorRecord(
        id="rc9", name="Tower", technology=Technology.STEAM_RECIRCULATING,
        installed_capacity_mw=200.0, site_id="S1",
        water_source=WaterSource.FRESH_SURFACE, fuel=Fuel.COAL,
        thermal=RecircParams(200.0, 0.33, 0.12, 6.0, 0.8, 5.0, 0.15, 0.3),
    )
    reg = FleetRegistry(
        generators={"rc9": rc}, hydrology=reg.hydrology,
        weather={"S1": hot}, wind_curves={},
    )
    with pytest.raises(DeratingError) as exc_info:
        derate_fleet(reg, START, date(2025, 6, 2))
    err = exc_info.value
    assert err.generator_id == "rc9"
    assert err.day == date(2025, 6, 2)


def test_report_csv_golden(tmp_path):
    report = derate_fleet(micro_registry(), START, date(2025, 6, 2))
    out = tmp_path / "report.csv"
    write_report_csv(report, out)
    assert out.read_text() == (
        "date,generator_id,category,available_mw,installed_mw\n"
        "2025-06-01,ct1,combustion_turbine,98.400000,100.000000\n"
        "2025-06-01,h1,hydro,44.145000,60.000000\n"
        "2025-06-02,ct1,combustion_turbine,90.100000,100.000000\n"
        "2025-06-02,h1,hydro,0.000000,60.000000\n"
    )


def test_summary_json_golden(tmp_path):
    report = derate_fleet(micro_registry(), START, date(2025, 6, 2))
    out = tmp_path / "summary.json"
    write_summary_json(report, out)
    doc = json.loads(out.read_text())
    assert doc["start_date"] == "2025-06-01"
    assert doc["end_date"] == "2025-06-02"
    assert doc["categories"]["hydro"]["max_cf"] == pytest.approx(0.73575, rel=1e-12)
    assert doc["categories"]["combustion_turbine"]["median_cf"] == pytest.approx(
        0.9425, rel=1e-9
    )
    assert doc["fleet"]["min_cf"] == pytest.approx(0.563125, rel=1e-12)


class TestFlowGenerationCorrelation:
    def test_proportional_record_is_the_identity_line(self):
        flows = [800.0, 950.0, 1100.0, 700.0, 1300.0]
        gen = [2.5 * q for q in flows]
        fit = flow_generation_correlation(flows, gen)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
        assert fit.slope == pytest.approx(1.0, rel=1e-12)
        assert fit.intercept == pytest.approx(0.0, abs=1e-12)

    def test_constant_generation_gives_zero_r2(self):
        fit = flow_generation_correlation([1.0, 2.0, 3.0, 4.0], [5.0, 5.0, 5.0, 5.0])
        assert fit.r_squared == 0.0

    def test_matches_closed_form_regression(self):
        rng = random.Random(97)
        flows = [rng.uniform(500.0, 1500.0) for _ in range(20)]
        gen = [1.8 * q + rng.gauss(0.0, 120.0) for q in flows]
        fit = flow_generation_correlation(flows, gen)
        fm, gm = sum(flows) / 20, sum(gen) / 20
        slope, intercept, r2 = ols_fit([q / fm for q in flows], [g / gm for g in gen])
        assert fit.slope == pytest.approx(slope, rel=1e-9)
        assert fit.intercept == pytest.approx(intercept, abs=1e-9)
        assert fit.r_squared == pytest.approx(r2, rel=1e-9)

    def test_degenerate_inputs(self):
        with pytest.raises(DegenerateInput):
            flow_generation_correlation([1.0, 2.0], [1.0, 2.0])
        with pytest.raises(DegenerateInput):
            flow_generation_correlation([3.0, 3.0, 3.0], [1.0, 2.0, 3.0])
        with pytest.raises(DegenerateInput):
            flow_generation_correlation([1.0, 2.0, 3.0], [0.0, 0.0, 0.0])
        with pytest.raises(DegenerateInput):
            flow_generation_correlation([1.0, 2.0, 3.0], [1.0, 2.0])
