"""Fleet domain types, CSV ingestion, and at-risk classification.

Input files (all dates ISO-8601, one row per day per site):

    fleet.csv      id,name,technology,installed_capacity_mw,site_id,
                   water_source,fuel,head_m,hydro_efficiency,net_efficiency,
                   k_os,tl_max_c,dtl_max_c,n_cc,sigma,t_app_c,k_sens,gamma,
                   c_t,hub_height_m,curve_id
    hydrology.csv  site_id,date,streamflow_m3s,water_temp_c
    weather.csv    site_id,date,dry_bulb_c,rh_pct,pressure_kpa,irradiance_wm2,
                   wind2_ms,wind10_ms,wind50_ms

Blank fleet cells mean "apply the documented default" for defaultable
fields, or "not applicable" for fields of other technologies. Loading
collects every problem (row-numbered) before failing, so one pass
reports all offending rows.
"""

import csv
from dataclasses import dataclass
from datetime import date, timedelta
from enum import Enum
from pathlib import Path

from .errors import (
    BadEnum,
    FleetFormatError,
    FleetValidationError,
    InvariantViolation,
    MissingColumn,
    UnresolvedSite,
)
from .hydro import HydroParams
from .once_through import OnceThroughParams
from .pv import DEFAULT_THERMAL_COEFFICIENT, PvParams
from .recirc import RecircParams
from .series import DailySeries, Unit, aligned
from .wind import WindParams, WindPowerCurve, load_wind_curves


class Technology(str, Enum):
    HYDRO = "hydro"
    STEAM_ONCE_THROUGH = "steam_once_through"
    STEAM_RECIRCULATING = "steam_recirculating"
    COMBUSTION_TURBINE = "combustion_turbine"
    SOLAR_PV = "solar_pv"
    WIND = "wind"
    OTHER = "other"


class WaterSource(str, Enum):
    FRESH_SURFACE = "fresh_surface"
    OCEAN = "ocean"
    GROUND = "ground"
    OTHER = "other"
    NONE = "none"


class Fuel(str, Enum):
    COAL = "coal"
    NATURAL_GAS = "natural_gas"
    NUCLEAR = "nuclear"
    OTHER = "other"
    NONE = "none"


# Defaults applied to blank fleet cells.
DEFAULT_HYDRO_EFFICIENCY = 0.90
DEFAULT_TL_MAX_C = 32.0
DEFAULT_N_CC = 6.0
DEFAULT_SIGMA = 0.8
DEFAULT_T_APP_C = 5.0
DEFAULT_K_SENS = 0.15
DEFAULT_GAMMA = 0.30
# Heat-sink fraction by fuel; fuels without a published figure get the
# conservative coal-like value.
DEFAULT_K_OS = {Fuel.COAL: 0.12, Fuel.NATURAL_GAS: 0.20}
DEFAULT_K_OS_FALLBACK = 0.12

FLEET_COLUMNS = [
    "id", "name", "technology", "installed_capacity_mw", "site_id",
    "water_source", "fuel", "head_m", "hydro_efficiency", "net_efficiency",
    "k_os", "tl_max_c", "dtl_max_c", "n_cc", "sigma", "t_app_c", "k_sens",
    "gamma", "c_t", "hub_height_m", "curve_id",
]
HYDROLOGY_COLUMNS = ["site_id", "date", "streamflow_m3s", "water_temp_c"]
WEATHER_COLUMNS = [
    "site_id", "date", "dry_bulb_c", "rh_pct", "pressure_kpa",
    "irradiance_wm2", "wind2_ms", "wind10_ms", "wind50_ms",
]


@dataclass(frozen=True)
class SiteHydrology:
    site_id: str
    streamflow: DailySeries         # m3/s
    water_temperature: DailySeries  # degC

    def __post_init__(self):
        if self.streamflow.unit is not Unit.M3_PER_S:
            raise InvariantViolation("streamflow series must be m3_per_s", field="streamflow")
        if self.water_temperature.unit is not Unit.DEG_C:
            raise InvariantViolation("water temperature series must be degC", field="water_temp")
        if not aligned(self.streamflow, self.water_temperature):
            raise InvariantViolation(
                f"site {self.site_id!r}: hydrology series are not date-aligned"
            )


@dataclass(frozen=True)
class SiteWeather:
    site_id: str
    dry_bulb: DailySeries           # degC
    relative_humidity: DailySeries  # percent
    pressure: DailySeries           # kPa
    irradiance: DailySeries         # W/m2, plane of array
    wind_2m: DailySeries            # m/s
    wind_10m: DailySeries
    wind_50m: DailySeries

    def __post_init__(self):
        channels = (
            self.dry_bulb, self.relative_humidity, self.pressure,
            self.irradiance, self.wind_2m, self.wind_10m, self.wind_50m,
        )
        if not aligned(*channels):
            raise InvariantViolation(
                f"site {self.site_id!r}: weather series are not date-aligned"
            )
        if any(not 0.0 <= v <= 100.0 for v in self.relative_humidity.values):
            raise InvariantViolation(
                f"site {self.site_id!r}: relative humidity outside [0, 100]", field="rh_pct"
            )
        if any(v <= 0.0 for v in self.pressure.values):
            raise InvariantViolation(
                f"site {self.site_id!r}: pressure must be positive", field="pressure_kpa"
            )


@dataclass(frozen=True)
class GeneratorRecord:
    id: str
    name: str
    technology: Technology
    installed_capacity_mw: float
    site_id: str
    water_source: WaterSource
    fuel: Fuel
    hydro: HydroParams | None = None
    thermal: OnceThroughParams | RecircParams | None = None
    pv: PvParams | None = None
    wind: WindParams | None = None

    def __post_init__(self):
        if not self.id:
            raise InvariantViolation("generator id must be nonempty", field="id")
        if self.installed_capacity_mw <= 0.0:
            raise InvariantViolation(
                f"installed capacity must be positive, got {self.installed_capacity_mw}",
                field="installed_capacity_mw",
            )
        required = {
            Technology.HYDRO: ("hydro", HydroParams),
            Technology.STEAM_ONCE_THROUGH: ("thermal", OnceThroughParams),
            Technology.STEAM_RECIRCULATING: ("thermal", RecircParams),
            Technology.SOLAR_PV: ("pv", PvParams),
            Technology.WIND: ("wind", WindParams),
        }
        if self.technology in required:
            attr, cls = required[self.technology]
            params = getattr(self, attr)
            if not isinstance(params, cls):
                raise InvariantViolation(
                    f"{self.technology.value} generator needs {cls.__name__}", field=attr
                )
            if params.installed_capacity_mw != self.installed_capacity_mw:
                raise InvariantViolation(
                    "parameter capacity disagrees with generator capacity",
                    field="installed_capacity_mw",
                )


@dataclass(frozen=True)
class FleetRegistry:
    """Immutable snapshot of the fleet and its environmental inputs."""

    generators: dict[str, GeneratorRecord]
    hydrology: dict[str, SiteHydrology]
    weather: dict[str, SiteWeather]
    wind_curves: dict[str, WindPowerCurve]


def classify_at_risk(g: GeneratorRecord) -> bool:
    """Whether drought conditions can reduce this generator's capacity.

    Steam units are at-risk only when cooled by fresh surface water;
    combustion turbines, solar PV, wind, and hydro are always at-risk.
    """
    if g.technology in (Technology.STEAM_ONCE_THROUGH, Technology.STEAM_RECIRCULATING):
        return g.water_source is WaterSource.FRESH_SURFACE
    return g.technology in (
        Technology.HYDRO,
        Technology.COMBUSTION_TURBINE,
        Technology.SOLAR_PV,
        Technology.WIND,
    )


# ---------------------------------------------------------------------------
# fleet.csv parsing
# ---------------------------------------------------------------------------

class _Row:
    """One CSV row with typed, problem-collecting cell accessors."""

    def __init__(self, data: dict, row_no: int, problems: list):
        self.data = data
        self.row_no = row_no
        self.problems = problems
        self.ok = True

    def fail(self, problem: FleetFormatError):
        problem.row = self.row_no
        self.problems.append(problem)
        self.ok = False

    def text(self, field: str, required: bool = True) -> str | None:
        raw = (self.data.get(field) or "").strip()
        if not raw:
            if required:
                self.fail(InvariantViolation(f"{field} is required", field=field))
            return None
        return raw

    def enum(self, field: str, enum_cls):
        raw = self.text(field)
        if raw is None:
            return None
        try:
            return enum_cls(raw.lower())
        except ValueError:
            allowed = ", ".join(m.value for m in enum_cls)
            self.fail(BadEnum(f"{field} {raw!r} not one of: {allowed}", field=field))
            return None

    def number(self, field: str, default: float | None = None) -> float | None:
        raw = (self.data.get(field) or "").strip()
        if not raw:
            if default is None:
                self.fail(InvariantViolation(f"{field} is required", field=field))
            return default
        try:
            return float(raw)
        except ValueError:
            self.fail(InvariantViolation(f"{field} {raw!r} is not a number", field=field))
            return None


def _build_params(row: _Row, tech: Technology, cap: float, fuel: Fuel):
    """Technology-specific parameter block from one fleet row."""
    kwargs = {}
    if tech is Technology.HYDRO:
        head = row.number("head_m")
        eff = row.number("hydro_efficiency", DEFAULT_HYDRO_EFFICIENCY)
        if row.ok:
            kwargs["hydro"] = HydroParams(
                head_m=head, efficiency=eff, installed_capacity_mw=cap
            )
    elif tech is Technology.STEAM_ONCE_THROUGH:
        vals = {
            "net_efficiency": row.number("net_efficiency"),
            "heat_sink_fraction": row.number(
                "k_os", DEFAULT_K_OS.get(fuel, DEFAULT_K_OS_FALLBACK)
            ),
            "max_discharge_temp_c": row.number("tl_max_c", DEFAULT_TL_MAX_C),
            "max_condenser_rise_c": row.number("dtl_max_c"),
            "stream_fraction": row.number("gamma", DEFAULT_GAMMA),
        }
        if row.ok:
            kwargs["thermal"] = OnceThroughParams(installed_capacity_mw=cap, **vals)
    elif tech is Technology.STEAM_RECIRCULATING:
        vals = {
            "net_efficiency": row.number("net_efficiency"),
            "heat_sink_fraction": row.number(
                "k_os", DEFAULT_K_OS.get(fuel, DEFAULT_K_OS_FALLBACK)
            ),
            "cycles_of_concentration": row.number("n_cc", DEFAULT_N_CC),
            "water_air_ratio": row.number("sigma", DEFAULT_SIGMA),
            "tower_approach_c": row.number("t_app_c", DEFAULT_T_APP_C),
            "sensible_fraction": row.number("k_sens", DEFAULT_K_SENS),
            "stream_fraction": row.number("gamma", DEFAULT_GAMMA),
        }
        if row.ok:
            kwargs["thermal"] = RecircParams(installed_capacity_mw=cap, **vals)
    elif tech is Technology.SOLAR_PV:
        c_t = row.number("c_t", DEFAULT_THERMAL_COEFFICIENT)
        if row.ok:
            kwargs["pv"] = PvParams(installed_capacity_mw=cap, thermal_coefficient=c_t)
    elif tech is Technology.WIND:
        hub = row.number("hub_height_m")
        curve_id = row.text("curve_id")
        if row.ok:
            kwargs["wind"] = WindParams(
                installed_capacity_mw=cap, hub_height_m=hub, curve_id=curve_id
            )
    return kwargs


def _read_generators(path: Path, problems: list) -> list[tuple[int, GeneratorRecord]]:
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != FLEET_COLUMNS:
            got = set(reader.fieldnames or [])
            missing = sorted(set(FLEET_COLUMNS) - got)
            extra = sorted(got - set(FLEET_COLUMNS))
            detail = []
            if missing:
                detail.append(f"missing {missing}")
            if extra:
                detail.append(f"unexpected {extra}")
            if not detail:
                detail.append("columns out of order")
            problems.append(MissingColumn(f"fleet header mismatch: {'; '.join(detail)}"))
            return []
        out: list[tuple[int, GeneratorRecord]] = []
        seen: set[str] = set()
        for row_no, data in enumerate(reader, start=2):
            row = _Row(data, row_no, problems)
            gid = row.text("id")
            name = row.text("name") or ""
            tech = row.enum("technology", Technology)
            cap = row.number("installed_capacity_mw")
            site_id = row.text("site_id")
            water = row.enum("water_source", WaterSource)
            fuel = row.enum("fuel", Fuel)
            if gid is not None:
                if gid in seen:
                    row.fail(InvariantViolation(f"duplicate generator id {gid!r}", field="id"))
                seen.add(gid)
            if not row.ok:
                continue
            try:
                params = _build_params(row, tech, cap, fuel)
                if not row.ok:
                    continue
                record = GeneratorRecord(
                    id=gid, name=name, technology=tech, installed_capacity_mw=cap,
                    site_id=site_id, water_source=water, fuel=fuel, **params,
                )
            except FleetFormatError as exc:
                row.fail(exc)
                continue
            out.append((row_no, record))
        return out


# ---------------------------------------------------------------------------
# daily-series file parsing
# ---------------------------------------------------------------------------

def _read_site_rows(path: Path, columns: list[str], problems: list):
    """Group value rows by site, checking dates are consecutive per site."""
    grouped: dict[str, tuple[date, list[list[float]]]] = {}
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != columns:
            problems.append(
                MissingColumn(f"{path.name} header must be {','.join(columns)}, "
                              f"got {reader.fieldnames}")
            )
            return {}
        value_fields = columns[2:]
        for row_no, data in enumerate(reader, start=2):
            sid = (data.get("site_id") or "").strip()
            if not sid:
                problems.append(InvariantViolation("site_id is required", row=row_no,
                                                   field="site_id"))
                continue
            try:
                day = date.fromisoformat((data.get("date") or "").strip())
            except ValueError:
                problems.append(InvariantViolation(
                    f"bad date {data.get('date')!r}", row=row_no, field="date"))
                continue
            try:
                values = [float((data.get(f) or "").strip()) for f in value_fields]
            except ValueError:
                problems.append(InvariantViolation(
                    f"non-numeric value in {data}", row=row_no))
                continue
            if sid not in grouped:
                grouped[sid] = (day, [values])
            else:
                start, rows = grouped[sid]
                expected = start + timedelta(days=len(rows))
                if day != expected:
                    problems.append(InvariantViolation(
                        f"site {sid!r}: expected {expected}, got {day} (gap or disorder)",
                        row=row_no, field="date"))
                    continue
                rows.append(values)
    return grouped


def _read_hydrology(path: Path, problems: list) -> dict[str, SiteHydrology]:
    sites = {}
    for sid, (start, rows) in _read_site_rows(path, HYDROLOGY_COLUMNS, problems).items():
        try:
            sites[sid] = SiteHydrology(
                site_id=sid,
                streamflow=DailySeries(start, tuple(r[0] for r in rows), Unit.M3_PER_S),
                water_temperature=DailySeries(start, tuple(r[1] for r in rows), Unit.DEG_C),
            )
        except FleetFormatError as exc:
            problems.append(InvariantViolation(f"site {sid!r} hydrology: {exc.args[0]}"))
    return sites


def _read_weather(path: Path, problems: list) -> dict[str, SiteWeather]:
    sites = {}
    units = (Unit.DEG_C, Unit.PERCENT, Unit.KPA, Unit.W_PER_M2,
             Unit.M_PER_S, Unit.M_PER_S, Unit.M_PER_S)
    for sid, (start, rows) in _read_site_rows(path, WEATHER_COLUMNS, problems).items():
        try:
            channels = [
                DailySeries(start, tuple(r[i] for r in rows), units[i])
                for i in range(7)
            ]
            sites[sid] = SiteWeather(sid, *channels)
        except FleetFormatError as exc:
            problems.append(InvariantViolation(f"site {sid!r} weather: {exc.args[0]}"))
    return sites


# ---------------------------------------------------------------------------
# registry assembly
# ---------------------------------------------------------------------------

def _sibling(fleet_path: Path, explicit, name: str) -> Path | None:
    if explicit is not None:
        return Path(explicit)
    candidate = fleet_path.parent / name
    return candidate if candidate.exists() else None


def _assemble(fleet_path, hydrology_path, weather_path, curves_path):
    fleet_path = Path(fleet_path)
    problems: list[FleetFormatError] = []
    rows = _read_generators(fleet_path, problems)

    hydrology_path = _sibling(fleet_path, hydrology_path, "hydrology.csv")
    weather_path = _sibling(fleet_path, weather_path, "weather.csv")
    curves_path = _sibling(fleet_path, curves_path, "curves.csv")

    hydrology = _read_hydrology(hydrology_path, problems) if hydrology_path else {}
    weather = _read_weather(weather_path, problems) if weather_path else {}
    try:
        curves = load_wind_curves(curves_path)
    except FleetFormatError as exc:
        problems.append(exc)
        curves = {}

    for row_no, g in rows:
        if g.site_id not in hydrology and g.site_id not in weather:
            problems.append(UnresolvedSite(
                f"generator {g.id!r}: site {g.site_id!r} has no hydrology or weather data",
                row=row_no, field="site_id"))
        if g.technology is Technology.WIND and g.wind.curve_id not in curves:
            problems.append(InvariantViolation(
                f"generator {g.id!r}: wind curve {g.wind.curve_id!r} does not resolve",
                row=row_no, field="curve_id"))

    registry = FleetRegistry(
        generators={g.id: g for _, g in rows},
        hydrology=hydrology,
        weather=weather,
        wind_curves=curves,
    )
    return registry, problems


def load_fleet(
    fleet_path,
    *,
    hydrology_path=None,
    weather_path=None,
    curves_path=None,
) -> FleetRegistry:
    """Load and validate the full fleet registry.

    ``hydrology.csv``, ``weather.csv``, and ``curves.csv`` are looked up
    next to the fleet file unless given explicitly; missing curves fall
    back to the packaged default power curves. Raises
    :class:`FleetValidationError` listing every problem found.
    """
    registry, problems = _assemble(fleet_path, hydrology_path, weather_path, curves_path)
    if problems:
        raise FleetValidationError(problems)
    return registry


def validate_fleet(
    fleet_path,
    *,
    hydrology_path=None,
    weather_path=None,
    curves_path=None,
) -> list[FleetFormatError]:
    """All schema/invariant problems in the given input files (empty = clean)."""
    _, problems = _assemble(fleet_path, hydrology_path, weather_path, curves_path)
    return problems


# ---------------------------------------------------------------------------
# serialization (round-trip counterpart of the loaders)
# ---------------------------------------------------------------------------

def _fmt(value: float | None) -> str:
    return "" if value is None else repr(value)


def write_fleet_csv(generators, path) -> None:
    """Write generator records in the fleet.csv schema with resolved values."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(FLEET_COLUMNS)
        for g in generators:
            cells = {c: "" for c in FLEET_COLUMNS}
            cells.update(
                id=g.id, name=g.name, technology=g.technology.value,
                installed_capacity_mw=_fmt(g.installed_capacity_mw),
                site_id=g.site_id, water_source=g.water_source.value,
                fuel=g.fuel.value,
            )
            if g.hydro is not None:
                cells["head_m"] = _fmt(g.hydro.head_m)
                cells["hydro_efficiency"] = _fmt(g.hydro.efficiency)
            if isinstance(g.thermal, OnceThroughParams):
                cells["net_efficiency"] = _fmt(g.thermal.net_efficiency)
                cells["k_os"] = _fmt(g.thermal.heat_sink_fraction)
                cells["tl_max_c"] = _fmt(g.thermal.max_discharge_temp_c)
                cells["dtl_max_c"] = _fmt(g.thermal.max_condenser_rise_c)
                cells["gamma"] = _fmt(g.thermal.stream_fraction)
            elif isinstance(g.thermal, RecircParams):
                cells["net_efficiency"] = _fmt(g.thermal.net_efficiency)
                cells["k_os"] = _fmt(g.thermal.heat_sink_fraction)
                cells["n_cc"] = _fmt(g.thermal.cycles_of_concentration)
                cells["sigma"] = _fmt(g.thermal.water_air_ratio)
                cells["t_app_c"] = _fmt(g.thermal.tower_approach_c)
                cells["k_sens"] = _fmt(g.thermal.sensible_fraction)
                cells["gamma"] = _fmt(g.thermal.stream_fraction)
            if g.pv is not None:
                cells["c_t"] = _fmt(g.pv.thermal_coefficient)
            if g.wind is not None:
                cells["hub_height_m"] = _fmt(g.wind.hub_height_m)
                cells["curve_id"] = g.wind.curve_id
            writer.writerow([cells[c] for c in FLEET_COLUMNS])


def write_hydrology_csv(sites: dict[str, SiteHydrology], path) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(HYDROLOGY_COLUMNS)
        for sid in sorted(sites):
            site = sites[sid]
            for i, day in enumerate(site.streamflow.dates()):
                writer.writerow([
                    sid, day.isoformat(),
                    repr(site.streamflow.values[i]),
                    repr(site.water_temperature.values[i]),
                ])


def write_weather_csv(sites: dict[str, SiteWeather], path) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(WEATHER_COLUMNS)
        for sid in sorted(sites):
            site = sites[sid]
            channels = (site.dry_bulb, site.relative_humidity, site.pressure,
                        site.irradiance, site.wind_2m, site.wind_10m, site.wind_50m)
            for i, day in enumerate(site.dry_bulb.dates()):
                writer.writerow(
                    [sid, day.isoformat()] + [repr(ch.values[i]) for ch in channels]
                )
