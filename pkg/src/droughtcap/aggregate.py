"""Fleet orchestration: per-generator derating, category capacity factors,
summary statistics, and the flow-generation correlation diagnostic.

Each generator is routed to its technology kernel day by day; units not
at risk report nameplate. Category and fleet totals are accumulated with
``math.fsum`` so the summed series are exact (order-independent) and a
parallel run reproduces the sequential result bit for bit.
"""

import csv
import json
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import date, timedelta
from pathlib import Path

import numpy as np

from .combustion import CtParams, ct_usable_capacity
from .errors import (
    DegenerateInput,
    DeratingError,
    DroughtcapError,
    EmptyCategory,
    MissingSeries,
)
from .fleet import FleetRegistry, GeneratorRecord, Technology, classify_at_risk
from .hydro import hydro_usable_capacity
from .once_through import ot_usable_capacity
from .psychro import air_state
from .pv import pv_power
from .recirc import rc_usable_capacity
from .series import DailySeries, Unit
from .wind import wind_usable_capacity

REPORT_COLUMNS = ["date", "generator_id", "category", "available_mw", "installed_mw"]


@dataclass(frozen=True)
class CategoryResult:
    # capacity factors are dimensionless in [0, 1]; the series container
    # needs a unit tag and MW is the least misleading of the available ones
    total: DailySeries
    capacity_factor: DailySeries


@dataclass(frozen=True)
class CapacityReport:
    start_date: date
    end_date: date
    per_generator: dict[str, DailySeries]
    installed: dict[str, float]
    category_of: dict[str, str]
    per_category: dict[str, CategoryResult]
    fleet_total: DailySeries
    fleet_cf: DailySeries
    summary: dict[str, dict[str, float]]

    def dates(self) -> list[date]:
        n = (self.end_date - self.start_date).days + 1
        return [self.start_date + timedelta(days=i) for i in range(n)]


def capacity_factor(available, installed) -> float:
    """Ratio of summed available to summed installed capacity."""
    available = list(available)
    installed = list(installed)
    if len(available) != len(installed):
        raise ValueError(
            f"length mismatch: {len(available)} available vs {len(installed)} installed"
        )
    if not installed:
        raise EmptyCategory("capacity factor of an empty generator set")
    denom = math.fsum(installed)
    if denom <= 0.0:
        raise EmptyCategory(f"installed capacity sum must be positive, got {denom}")
    return math.fsum(available) / denom


def _window(series: DailySeries | None, g: GeneratorRecord, channel: str,
            start: date, end: date) -> DailySeries:
    if series is None or not series.covers(start, end):
        raise MissingSeries(g.id, g.site_id, channel)
    return series.window(start, end)


def _daily(g: GeneratorRecord, start: date, kernel, *channels) -> tuple[float, ...]:
    """Apply a kernel day by day, annotating failures with generator and date."""
    out = []
    for i, args in enumerate(zip(*(c.values for c in channels))):
        try:
            out.append(kernel(*args))
        except DroughtcapError as exc:
            raise DeratingError(g.id, start + timedelta(days=i), exc) from exc
    return tuple(out)


def generator_capacity_series(
    reg: FleetRegistry,
    g: GeneratorRecord,
    start: date,
    end: date,
    no_regulatory_limit: bool = False,
) -> tuple[float, ...]:
    """Daily usable capacity (MW) of one generator over [start, end]."""
    n_days = (end - start).days + 1
    if not classify_at_risk(g):
        return (g.installed_capacity_mw,) * n_days

    hyd = reg.hydrology.get(g.site_id)
    wx = reg.weather.get(g.site_id)
    tech = g.technology

    if tech is Technology.HYDRO:
        flows = _window(hyd and hyd.streamflow, g, "streamflow", start, end)
        return _daily(g, start, lambda q: hydro_usable_capacity(g.hydro, q), flows)

    if tech is Technology.STEAM_ONCE_THROUGH:
        flows = _window(hyd and hyd.streamflow, g, "streamflow", start, end)
        temps = _window(hyd and hyd.water_temperature, g, "water_temperature", start, end)
        return _daily(
            g, start,
            lambda q, tw: ot_usable_capacity(g.thermal, q, tw, no_regulatory_limit),
            flows, temps,
        )

    if tech is Technology.STEAM_RECIRCULATING:
        flows = _window(hyd and hyd.streamflow, g, "streamflow", start, end)
        temps = _window(hyd and hyd.water_temperature, g, "water_temperature", start, end)
        dry = _window(wx and wx.dry_bulb, g, "dry_bulb", start, end)
        rh = _window(wx and wx.relative_humidity, g, "relative_humidity", start, end)
        press = _window(wx and wx.pressure, g, "pressure", start, end)
        return _daily(
            g, start,
            lambda q, tw, td, h, p: rc_usable_capacity(g.thermal, q, tw, air_state(td, h, p)),
            flows, temps, dry, rh, press,
        )

    if tech is Technology.COMBUSTION_TURBINE:
        dry = _window(wx and wx.dry_bulb, g, "dry_bulb", start, end)
        params = CtParams(installed_capacity_mw=g.installed_capacity_mw)
        return _daily(g, start, lambda td: ct_usable_capacity(params, td), dry)

    if tech is Technology.SOLAR_PV:
        irr = _window(wx and wx.irradiance, g, "irradiance", start, end)
        dry = _window(wx and wx.dry_bulb, g, "dry_bulb", start, end)
        return _daily(g, start, lambda gi, td: pv_power(g.pv, gi, td), irr, dry)

    if tech is Technology.WIND:
        v2 = _window(wx and wx.wind_2m, g, "wind_2m", start, end)
        v10 = _window(wx and wx.wind_10m, g, "wind_10m", start, end)
        v50 = _window(wx and wx.wind_50m, g, "wind_50m", start, end)
        return _daily(
            g, start,
            lambda a, b, c: wind_usable_capacity(g.wind, reg.wind_curves, a, b, c),
            v2, v10, v50,
        )

    # Unmodeled technologies report nameplate.
    return (g.installed_capacity_mw,) * n_days


def derate_fleet(
    reg: FleetRegistry,
    start: date,
    end: date,
    *,
    no_regulatory_limit: bool = False,
    jobs: int = 1,
) -> CapacityReport:
    """Daily usable capacity of every generator over [start, end].

    Parameters
    ----------
    reg : FleetRegistry
        Loaded fleet with environmental series.
    start, end : date
        Inclusive evaluation range; at-risk generators must have series
        covering it.
    no_regulatory_limit : bool
        Drop the once-through discharge-temperature limit.
    jobs : int
        Worker threads for the per-generator map. The result is
        identical for any value (pure kernels, fsum reductions).
    """
    if start > end:
        raise ValueError(f"start {start} after end {end}")
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    if not reg.generators:
        raise EmptyCategory("fleet has no generators")
    ids = sorted(reg.generators)
    n_days = (end - start).days + 1

    def compute(gid: str) -> tuple[float, ...]:
        return generator_capacity_series(
            reg, reg.generators[gid], start, end, no_regulatory_limit
        )

    if jobs == 1 or len(ids) <= 1:
        values = [compute(gid) for gid in ids]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(compute, ids))

    per_generator = {
        gid: DailySeries(start, vals, Unit.MW) for gid, vals in zip(ids, values)
    }
    installed = {gid: reg.generators[gid].installed_capacity_mw for gid in ids}
    category_of = {gid: reg.generators[gid].technology.value for gid in ids}

    per_category: dict[str, CategoryResult] = {}
    for cat in sorted(set(category_of.values())):
        members = [gid for gid in ids if category_of[gid] == cat]
        cap_sum = math.fsum(installed[gid] for gid in members)
        totals = tuple(
            math.fsum(per_generator[gid].values[d] for gid in members)
            for d in range(n_days)
        )
        per_category[cat] = CategoryResult(
            total=DailySeries(start, totals, Unit.MW),
            capacity_factor=DailySeries(start, tuple(t / cap_sum for t in totals), Unit.MW),
        )

    fleet_cap = math.fsum(installed.values())
    fleet_totals = tuple(
        math.fsum(per_generator[gid].values[d] for gid in ids) for d in range(n_days)
    )
    fleet_total = DailySeries(start, fleet_totals, Unit.MW)
    fleet_cf = DailySeries(start, tuple(t / fleet_cap for t in fleet_totals), Unit.MW)

    summary = {
        cat: _cf_summary(res.capacity_factor) for cat, res in per_category.items()
    }
    summary["fleet"] = _cf_summary(fleet_cf)

    return CapacityReport(
        start_date=start,
        end_date=end,
        per_generator=per_generator,
        installed=installed,
        category_of=category_of,
        per_category=per_category,
        fleet_total=fleet_total,
        fleet_cf=fleet_cf,
        summary=summary,
    )


def _cf_summary(cf: DailySeries) -> dict[str, float]:
    return {
        "median_cf": statistics.median(cf.values),
        "min_cf": min(cf.values),
        "max_cf": max(cf.values),
    }


@dataclass(frozen=True)
class RegressionFit:
    r_squared: float
    slope: float
    intercept: float


def flow_generation_correlation(annual_flows, annual_generation) -> RegressionFit:
    """OLS fit of mean-normalized generation ratio on flow ratio.

    A perfectly flow-proportional record lines up on the identity
    (slope 1, intercept 0, R^2 = 1); flow-independent generation gives a
    near-zero R^2.
    """
    flows = np.asarray(list(annual_flows), dtype=float)
    gen = np.asarray(list(annual_generation), dtype=float)
    if flows.shape != gen.shape:
        raise DegenerateInput("flow and generation records differ in length")
    if flows.size < 3:
        raise DegenerateInput(f"need at least 3 points, got {flows.size}")
    if flows.mean() == 0.0 or gen.mean() == 0.0:
        raise DegenerateInput("cannot normalize a record whose mean is zero")
    x = flows / flows.mean()
    y = gen / gen.mean()
    sxx = float(((x - x.mean()) ** 2).sum())
    if sxx == 0.0:
        raise DegenerateInput("flows have zero variance")
    slope = float(((x - x.mean()) * (y - y.mean())).sum()) / sxx
    intercept = float(y.mean() - slope * x.mean())
    ss_tot = float(((y - y.mean()) ** 2).sum())
    if ss_tot == 0.0:
        return RegressionFit(r_squared=0.0, slope=slope, intercept=intercept)
    resid = y - (slope * x + intercept)
    r2 = 1.0 - float((resid ** 2).sum()) / ss_tot
    return RegressionFit(r_squared=r2, slope=slope, intercept=intercept)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def write_report_csv(report: CapacityReport, path) -> None:
    """Long-form per-generator daily report, sorted by (date, generator id)."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        ids = sorted(report.per_generator)
        for i, day in enumerate(report.dates()):
            for gid in ids:
                writer.writerow([
                    day.isoformat(),
                    gid,
                    report.category_of[gid],
                    f"{report.per_generator[gid].values[i]:.6f}",
                    f"{report.installed[gid]:.6f}",
                ])


def write_summary_json(report: CapacityReport, path) -> None:
    doc = {
        "start_date": report.start_date.isoformat(),
        "end_date": report.end_date.isoformat(),
        "categories": {
            cat: dict(stats)
            for cat, stats in report.summary.items()
            if cat != "fleet"
        },
        "fleet": dict(report.summary["fleet"]),
    }
    with Path(path).open("w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
