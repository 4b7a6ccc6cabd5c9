"""Regenerate the synthetic fixture fleet under fixtures/.

Deterministic: seeded wiggles on smooth seasonal shapes, written through
the package serializers so the files always match the loader schemas.
The summer covers 2025-06-01..2025-08-31 (92 days) with a combined heat
wave and streamflow drought centered on mid-July; the drought river R2
crosses the 32 degC discharge limit on its hottest days.

Run from the repository root:  python scripts/make_fixtures.py
"""

import math
import random
from datetime import date
from pathlib import Path

from droughtcap.fleet import (
    Fuel,
    GeneratorRecord,
    SiteHydrology,
    SiteWeather,
    Technology,
    WaterSource,
    write_fleet_csv,
    write_hydrology_csv,
    write_weather_csv,
)
from droughtcap.hydro import HydroParams
from droughtcap.once_through import OnceThroughParams
from droughtcap.pv import PvParams
from droughtcap.recirc import RecircParams
from droughtcap.series import DailySeries, Unit
from droughtcap.wind import WindParams, load_wind_curves, write_curves_csv

START = date(2025, 6, 1)
N_DAYS = 92

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

SITES = {
    # name: (t_base, flow_base, drought_depth, water_offset, water_slope, water_heat)
    "R1": (23.0, 120.0, 0.55, 10.0, 0.50, 1.0),
    "R2": (24.0, 42.0, 0.72, 12.0, 0.50, 2.0),
    "R3": (22.0, 320.0, 0.25, 8.0, 0.45, 0.5),
    "W1": (25.0, 60.0, 0.50, 9.0, 0.45, 0.5),
    "W2": (21.0, 90.0, 0.50, 9.0, 0.45, 0.5),
}


def season(d: int) -> float:
    return math.sin(math.pi * (d + 10) / 112.0)


def heat(d: int) -> float:
    return math.exp(-(((d - 47) / 6.0) ** 2))


def drought(d: int) -> float:
    return math.exp(-(((d - 50) / 18.0) ** 2))


def smooth(values, half_width=2):
    out = []
    for i in range(len(values)):
        lo = max(0, i - half_width)
        hi = min(len(values), i + half_width + 1)
        out.append(sum(values[lo:hi]) / (hi - lo))
    return out


def make_site(name: str) -> tuple[SiteWeather, SiteHydrology]:
    t_base, flow_base, depth, w_off, w_slope, w_heat = SITES[name]
    rng = random.Random(f"droughtcap-fixture-{name}")

    dry, rh, press, irr = [], [], [], []
    v2s, v10s, v50s = [], [], []
    for d in range(N_DAYS):
        dry.append(round(t_base + 8.0 * season(d) + 5.0 * heat(d) + rng.uniform(-1.2, 1.2), 3))
        rh.append(round(min(95.0, max(20.0, 70.0 - 18.0 * season(d) - 15.0 * heat(d)
                                      + rng.uniform(-6.0, 6.0))), 3))
        press.append(round(min(103.0, max(98.0, 101.0 - 0.8 * season(d)
                                          + rng.uniform(-0.5, 0.5))), 3))
        irr.append(round(max(110.0, 255.0 + 65.0 * season(d)
                             - 95.0 * rng.random() ** 2), 3))
        v50 = max(0.3, 6.2 + 2.8 * math.sin(2 * math.pi * (d + rng.random()) / 11.3)
                  + rng.uniform(-1.2, 1.2))
        slope = rng.uniform(0.5, 0.85)
        a = v50 - slope * math.log(50.0)
        v10 = max(0.05, a + slope * math.log(10.0) + rng.uniform(-0.2, 0.2))
        v2 = max(0.0, a + slope * math.log(2.0) + rng.uniform(-0.15, 0.15))
        v50s.append(round(v50, 3))
        v10s.append(round(v10, 3))
        v2s.append(round(v2, 3))

    dry_smooth = smooth(dry)
    flows, water = [], []
    for d in range(N_DAYS):
        flows.append(round(max(flow_base * 0.12,
                               flow_base * (1.0 - depth * drought(d))
                               + rng.uniform(-0.06, 0.06) * flow_base), 3))
        water.append(round(w_off + w_slope * dry_smooth[d] + w_heat * heat(d)
                           + rng.uniform(-0.3, 0.3), 3))

    weather = SiteWeather(
        site_id=name,
        dry_bulb=DailySeries(START, dry, Unit.DEG_C),
        relative_humidity=DailySeries(START, rh, Unit.PERCENT),
        pressure=DailySeries(START, press, Unit.KPA),
        irradiance=DailySeries(START, irr, Unit.W_PER_M2),
        wind_2m=DailySeries(START, v2s, Unit.M_PER_S),
        wind_10m=DailySeries(START, v10s, Unit.M_PER_S),
        wind_50m=DailySeries(START, v50s, Unit.M_PER_S),
    )
    hydrology = SiteHydrology(
        site_id=name,
        streamflow=DailySeries(START, flows, Unit.M3_PER_S),
        water_temperature=DailySeries(START, water, Unit.DEG_C),
    )
    return weather, hydrology


def _hydro(gid, name, cap, site, head, eff=0.90):
    return GeneratorRecord(
        id=gid, name=name, technology=Technology.HYDRO, installed_capacity_mw=cap,
        site_id=site, water_source=WaterSource.FRESH_SURFACE, fuel=Fuel.NONE,
        hydro=HydroParams(head_m=head, efficiency=eff, installed_capacity_mw=cap),
    )


def _once_through(gid, name, cap, site, water, fuel, eta, k_os, dtl=10.0, tl=32.0, gamma=0.30):
    return GeneratorRecord(
        id=gid, name=name, technology=Technology.STEAM_ONCE_THROUGH,
        installed_capacity_mw=cap, site_id=site, water_source=water, fuel=fuel,
        thermal=OnceThroughParams(
            installed_capacity_mw=cap, net_efficiency=eta, heat_sink_fraction=k_os,
            max_discharge_temp_c=tl, max_condenser_rise_c=dtl, stream_fraction=gamma,
        ),
    )


def _recirc(gid, name, cap, site, water, fuel, eta, k_os, n_cc=6.0, sigma=0.8,
            t_app=5.0, k_sens=0.15, gamma=0.30):
    return GeneratorRecord(
        id=gid, name=name, technology=Technology.STEAM_RECIRCULATING,
        installed_capacity_mw=cap, site_id=site, water_source=water, fuel=fuel,
        thermal=RecircParams(
            installed_capacity_mw=cap, net_efficiency=eta, heat_sink_fraction=k_os,
            cycles_of_concentration=n_cc, water_air_ratio=sigma, tower_approach_c=t_app,
            sensible_fraction=k_sens, stream_fraction=gamma,
        ),
    )


def _ct(gid, name, cap, site):
    return GeneratorRecord(
        id=gid, name=name, technology=Technology.COMBUSTION_TURBINE,
        installed_capacity_mw=cap, site_id=site,
        water_source=WaterSource.NONE, fuel=Fuel.NATURAL_GAS,
    )


def _pv(gid, name, cap, site, c_t=0.035):
    return GeneratorRecord(
        id=gid, name=name, technology=Technology.SOLAR_PV, installed_capacity_mw=cap,
        site_id=site, water_source=WaterSource.NONE, fuel=Fuel.NONE,
        pv=PvParams(installed_capacity_mw=cap, thermal_coefficient=c_t),
    )


def _wind(gid, name, cap, site, hub, curve):
    return GeneratorRecord(
        id=gid, name=name, technology=Technology.WIND, installed_capacity_mw=cap,
        site_id=site, water_source=WaterSource.NONE, fuel=Fuel.NONE,
        wind=WindParams(installed_capacity_mw=cap, hub_height_m=hub, curve_id=curve),
    )


def make_fleet() -> list[GeneratorRecord]:
    fs, oc, gr = WaterSource.FRESH_SURFACE, WaterSource.OCEAN, WaterSource.GROUND
    coal, gas, nuc = Fuel.COAL, Fuel.NATURAL_GAS, Fuel.NUCLEAR
    return [
        _hydro("h1", "Alder Falls", 60.0, "R1", 45.0),
        _hydro("h2", "Birch Run", 34.0, "R1", 28.0),
        _hydro("h3", "Cedar Gorge", 28.0, "R2", 60.0),
        _hydro("h4", "Dell Bend", 120.0, "R3", 35.0),
        _hydro("h5", "Eagle Dam", 250.0, "R3", 75.0),
        _hydro("h6", "Fox Weir", 18.0, "W1", 22.0),
        _once_through("ot1", "Granite Point 1", 380.0, "R2", fs, coal, 0.35, 0.12),
        _once_through("ot2", "Harbor Bluff 2", 600.0, "R1", fs, coal, 0.33, 0.12),
        _once_through("ot3", "Ivy Landing", 900.0, "R3", fs, nuc, 0.32, 0.12),
        _once_through("ot4", "Jetty Cove", 800.0, "W1", oc, gas, 0.40, 0.20),
        _once_through("ot5", "Kiln Creek", 520.0, "R1", fs, gas, 0.38, 0.20),
        _recirc("rc1", "Larch Station 1", 650.0, "R1", fs, coal, 0.34, 0.12, k_sens=0.30),
        _recirc("rc2", "Mill Hollow", 300.0, "R2", fs, coal, 0.33, 0.12, n_cc=5.0, k_sens=0.25),
        _recirc("rc3", "Nimbus Unit 1", 1100.0, "R3", fs, nuc, 0.32, 0.12, k_sens=0.32),
        _recirc("rc4", "Osprey CC Steam", 480.0, "R1", fs, gas, 0.37, 0.20),
        _recirc("rc5", "Pinefield", 350.0, "W2", gr, gas, 0.36, 0.20, k_sens=0.25),
        _recirc("rc6", "Quarry Ridge", 720.0, "R3", fs, coal, 0.35, 0.12, n_cc=3.5, k_sens=0.20),
        _ct("ct1", "Raven Peaker 1", 180.0, "W1"),
        _ct("ct2", "Raven Peaker 2", 240.0, "W1"),
        _ct("ct3", "Saddle CT", 150.0, "W2"),
        _ct("ct4", "Tanner CC CT", 210.0, "R1"),
        _ct("ct5", "Upton CT", 95.0, "R2"),
        _pv("pv1", "Vista Solar", 120.0, "W1"),
        _pv("pv2", "Willow Solar", 85.0, "W1", c_t=0.045),
        _pv("pv3", "Xenia Solar", 60.0, "R3"),
        _pv("pv4", "Yucca Solar", 45.0, "W2", c_t=0.028),
        _wind("wd1", "Zephyr Ridge", 150.0, "W2", 90.0, "sp_low"),
        _wind("wd2", "Anvil Wind", 200.0, "W2", 105.0, "sp_mid"),
        _wind("wd3", "Breaker Wind", 110.0, "W2", 120.0, "sp_high"),
        GeneratorRecord(
            id="ob1", name="Oakbark Biomass", technology=Technology.OTHER,
            installed_capacity_mw=40.0, site_id="W1",
            water_source=WaterSource.OTHER, fuel=Fuel.OTHER,
        ),
    ]


SCENARIOS_TOML = """\
# Standard drought-sensitivity sweep: baseline, air-temperature uplifts,
# and streamflow reductions.

[[scenario]]
name = "baseline"
air_temp_delta_c = 0.0
streamflow_scale = 1.0
water_temp_response = 0.6

[[scenario]]
name = "C1"
air_temp_delta_c = 1.0
streamflow_scale = 1.0
water_temp_response = 0.6

[[scenario]]
name = "C2"
air_temp_delta_c = 2.0
streamflow_scale = 1.0
water_temp_response = 0.6

[[scenario]]
name = "C3"
air_temp_delta_c = 3.0
streamflow_scale = 1.0
water_temp_response = 0.6

[[scenario]]
name = "R10"
air_temp_delta_c = 0.0
streamflow_scale = 0.9
water_temp_response = 0.6

[[scenario]]
name = "R20"
air_temp_delta_c = 0.0
streamflow_scale = 0.8
water_temp_response = 0.6

[[scenario]]
name = "R30"
air_temp_delta_c = 0.0
streamflow_scale = 0.7
water_temp_response = 0.6
"""


def main():
    FIXTURE_DIR.mkdir(exist_ok=True)
    weather, hydrology = {}, {}
    for name in SITES:
        weather[name], hydrology[name] = make_site(name)
    fleet = make_fleet()

    write_fleet_csv(fleet, FIXTURE_DIR / "fleet.csv")
    write_hydrology_csv(hydrology, FIXTURE_DIR / "hydrology.csv")
    write_weather_csv(weather, FIXTURE_DIR / "weather.csv")
    write_curves_csv(load_wind_curves(), FIXTURE_DIR / "curves.csv")
    (FIXTURE_DIR / "scenarios.toml").write_text(SCENARIOS_TOML)
    print(f"wrote {len(fleet)} generators, {len(SITES)} sites, {N_DAYS} days "
          f"to {FIXTURE_DIR}")


if __name__ == "__main__":
    main()
