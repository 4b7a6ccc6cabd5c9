"""Perturbed weather/hydrology inputs for drought-sensitivity scenarios.

A scenario uplifts dry-bulb temperature by a constant, scales streamflow
by a constant factor, and moves water temperature through two linear
response coefficients (the stand-in for a full hydrological model):

    T_w += water_temp_response * dT_air + water_temp_flow_response * ln(scale)

The standard sweep is the baseline plus C1/C2/C3 (+1/+2/+3 degC) and
R10/R20/R30 (x0.9/x0.8/x0.7 streamflow).
"""

import math
import sys
from dataclasses import dataclass
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import InvariantViolation
from .fleet import FleetRegistry, SiteHydrology, SiteWeather

DEFAULT_WATER_TEMP_RESPONSE = 0.6  # degC of water temp per degC of air uplift


@dataclass(frozen=True)
class Scenario:
    name: str
    air_temp_delta_c: float = 0.0
    streamflow_scale: float = 1.0
    water_temp_response: float = DEFAULT_WATER_TEMP_RESPONSE
    water_temp_flow_response: float = 0.0

    def __post_init__(self):
        if not self.name:
            raise InvariantViolation("scenario name must be nonempty", field="name")
        if not 0.0 < self.streamflow_scale <= 1.5:
            raise InvariantViolation(
                f"streamflow scale must be in (0, 1.5], got {self.streamflow_scale}",
                field="streamflow_scale",
            )

    @property
    def water_temp_delta_c(self) -> float:
        return (
            self.water_temp_response * self.air_temp_delta_c
            + self.water_temp_flow_response * math.log(self.streamflow_scale)
        )


def _perturb_weather(weather: SiteWeather, s: Scenario) -> SiteWeather:
    if s.air_temp_delta_c == 0.0:
        return weather
    return SiteWeather(
        site_id=weather.site_id,
        dry_bulb=weather.dry_bulb.shifted(s.air_temp_delta_c),
        relative_humidity=weather.relative_humidity,
        pressure=weather.pressure,
        irradiance=weather.irradiance,
        wind_2m=weather.wind_2m,
        wind_10m=weather.wind_10m,
        wind_50m=weather.wind_50m,
    )


def _perturb_hydro(hydro: SiteHydrology, s: Scenario) -> SiteHydrology:
    if s.streamflow_scale == 1.0 and s.water_temp_delta_c == 0.0:
        return hydro
    return SiteHydrology(
        site_id=hydro.site_id,
        streamflow=hydro.streamflow.scaled(s.streamflow_scale),
        water_temperature=hydro.water_temperature.shifted(s.water_temp_delta_c),
    )


def apply_scenario(
    weather: SiteWeather, hydro: SiteHydrology, s: Scenario
) -> tuple[SiteWeather, SiteHydrology]:
    """Perturbed copies of the inputs; unperturbed channels are shared as-is."""
    return _perturb_weather(weather, s), _perturb_hydro(hydro, s)


def apply_to_registry(reg: FleetRegistry, s: Scenario) -> FleetRegistry:
    """Registry with every site's weather and hydrology perturbed."""
    if s.air_temp_delta_c == 0.0 and s.streamflow_scale == 1.0 and s.water_temp_delta_c == 0.0:
        return reg
    return FleetRegistry(
        generators=reg.generators,
        hydrology={sid: _perturb_hydro(h, s) for sid, h in reg.hydrology.items()},
        weather={sid: _perturb_weather(w, s) for sid, w in reg.weather.items()},
        wind_curves=reg.wind_curves,
    )


def standard_scenarios(
    water_temp_response: float = DEFAULT_WATER_TEMP_RESPONSE,
) -> list[Scenario]:
    """Baseline plus the three temperature uplifts and three flow reductions."""
    return [
        Scenario("baseline", 0.0, 1.0, water_temp_response),
        Scenario("C1", 1.0, 1.0, water_temp_response),
        Scenario("C2", 2.0, 1.0, water_temp_response),
        Scenario("C3", 3.0, 1.0, water_temp_response),
        Scenario("R10", 0.0, 0.9, water_temp_response),
        Scenario("R20", 0.0, 0.8, water_temp_response),
        Scenario("R30", 0.0, 0.7, water_temp_response),
    ]


def load_scenarios(path: str | Path) -> list[Scenario]:
    """Read scenarios from a TOML file of [[scenario]] tables.

    Recognized keys: name, air_temp_delta_c, streamflow_scale,
    water_temp_response, water_temp_flow_response.
    """
    with Path(path).open("rb") as fh:
        doc = tomllib.load(fh)
    tables = doc.get("scenario")
    if not tables:
        raise InvariantViolation(f"{path}: no [[scenario]] tables found")
    out = []
    for i, table in enumerate(tables):
        unknown = set(table) - {
            "name", "air_temp_delta_c", "streamflow_scale",
            "water_temp_response", "water_temp_flow_response",
        }
        if unknown:
            raise InvariantViolation(
                f"scenario #{i + 1}: unknown keys {sorted(unknown)}"
            )
        if "name" not in table:
            raise InvariantViolation(f"scenario #{i + 1}: name is required", field="name")
        out.append(Scenario(
            name=str(table["name"]),
            air_temp_delta_c=float(table.get("air_temp_delta_c", 0.0)),
            streamflow_scale=float(table.get("streamflow_scale", 1.0)),
            water_temp_response=float(
                table.get("water_temp_response", DEFAULT_WATER_TEMP_RESPONSE)
            ),
            water_temp_flow_response=float(table.get("water_temp_flow_response", 0.0)),
        ))
    return out
