"""Wind-turbine usable power from multi-height wind speeds.

Speeds measured at 2, 10, and 50 m are extrapolated to hub height with a
least-squares fit of the logarithmic profile v(z) = a + b*ln(z), then
converted to power through a per-turbine normalized power curve. Output
is zero below cut-in and at or above cut-out (hard step, no hysteresis).
"""

import csv
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import InvariantViolation, MissingColumn, UnknownCurve

_LOG_Z = (math.log(2.0), math.log(10.0), math.log(50.0))

CURVE_COLUMNS = ["curve_id", "speed_ms", "power_fraction"]


@dataclass(frozen=True)
class WindPowerCurve:
    """Normalized power curve: fraction of nameplate vs hub-height speed."""

    curve_id: str
    points: tuple[tuple[float, float], ...]
    cut_in: float
    cut_out: float

    def __post_init__(self):
        object.__setattr__(
            self, "points", tuple((float(s), float(f)) for s, f in self.points)
        )
        speeds = [s for s, _ in self.points]
        fractions = [f for _, f in self.points]
        if len(self.points) < 3:
            raise InvariantViolation(
                f"curve {self.curve_id!r} needs at least 3 points", field="points"
            )
        if any(b <= a for a, b in zip(speeds, speeds[1:])):
            raise InvariantViolation(
                f"curve {self.curve_id!r} speeds must be strictly increasing", field="speed_ms"
            )
        if any(not 0.0 <= f <= 1.0 for f in fractions):
            raise InvariantViolation(
                f"curve {self.curve_id!r} power fractions must lie in [0, 1]",
                field="power_fraction",
            )
        if max(fractions) != 1.0:
            raise InvariantViolation(
                f"curve {self.curve_id!r} must reach power fraction 1.0", field="power_fraction"
            )
        for s, f in self.points:
            if (s <= self.cut_in or s >= self.cut_out) and f != 0.0:
                raise InvariantViolation(
                    f"curve {self.curve_id!r} has nonzero fraction at {s} m/s outside "
                    f"({self.cut_in}, {self.cut_out})",
                    field="power_fraction",
                )

    @classmethod
    def from_points(cls, curve_id: str, points) -> "WindPowerCurve":
        """Build a curve, inferring cut-in/cut-out from the zero-fraction ends.

        The point list must start and end with zero-fraction rows framing a
        single block of nonzero fractions.
        """
        pts = tuple((float(s), float(f)) for s, f in points)
        support = [i for i, (_, f) in enumerate(pts) if f > 0.0]
        if not support:
            raise InvariantViolation(f"curve {curve_id!r} has no nonzero points")
        first, last = support[0], support[-1]
        if first == 0 or last == len(pts) - 1:
            raise InvariantViolation(
                f"curve {curve_id!r} must start and end with zero-fraction rows"
            )
        if any(f == 0.0 for _, f in pts[first : last + 1]):
            raise InvariantViolation(
                f"curve {curve_id!r} has a zero inside its nonzero support"
            )
        return cls(
            curve_id=curve_id,
            points=pts,
            cut_in=pts[first - 1][0],
            cut_out=pts[last + 1][0],
        )


@dataclass(frozen=True)
class WindParams:
    installed_capacity_mw: float
    hub_height_m: float
    curve_id: str

    def __post_init__(self):
        if self.installed_capacity_mw <= 0.0:
            raise InvariantViolation(
                f"installed capacity must be positive, got {self.installed_capacity_mw}",
                field="installed_capacity_mw",
            )
        if not 10.0 <= self.hub_height_m <= 200.0:
            raise InvariantViolation(
                f"hub height must be in [10, 200] m, got {self.hub_height_m}",
                field="hub_height_m",
            )
        if not self.curve_id:
            raise InvariantViolation("curve_id must be nonempty", field="curve_id")


def extrapolate_hub_speed(v2: float, v10: float, v50: float, hub: float) -> float:
    """Hub-height speed (m/s) from the 2/10/50 m log-profile fit, floored at 0."""
    if hub <= 0.0:
        raise InvariantViolation(f"hub height must be positive, got {hub}")
    if min(v2, v10, v50) < 0.0:
        raise InvariantViolation("wind speeds must be non-negative")
    if v2 == v10 == v50 == 0.0:
        return 0.0
    x_mean = sum(_LOG_Z) / 3.0
    y_mean = (v2 + v10 + v50) / 3.0
    sxx = sum((x - x_mean) ** 2 for x in _LOG_Z)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(_LOG_Z, (v2, v10, v50)))
    b = sxy / sxx
    a = y_mean - b * x_mean
    return max(a + b * math.log(hub), 0.0)


def power_from_curve(curve: WindPowerCurve, v: float) -> float:
    """Power fraction at hub-height speed v (m/s)."""
    if v < 0.0:
        raise InvariantViolation(f"wind speed must be non-negative, got {v}")
    if v <= curve.cut_in or v >= curve.cut_out:
        return 0.0
    speeds = [s for s, _ in curve.points]
    fractions = [f for _, f in curve.points]
    return float(np.interp(v, speeds, fractions))


def wind_usable_capacity(
    p: WindParams,
    curves: dict[str, WindPowerCurve],
    v2: float,
    v10: float,
    v50: float,
) -> float:
    """Usable capacity (MW) given the three measured wind speeds (m/s)."""
    if p.curve_id not in curves:
        raise UnknownCurve(p.curve_id)
    hub_speed = extrapolate_hub_speed(v2, v10, v50, p.hub_height_m)
    return p.installed_capacity_mw * power_from_curve(curves[p.curve_id], hub_speed)


def load_wind_curves(path: str | Path | None = None) -> dict[str, WindPowerCurve]:
    """Read power curves from a curves.csv file, or the packaged defaults.

    Rows must be grouped by curve_id with speeds in increasing order;
    cut-in/cut-out are inferred from the zero-fraction ends of each group.
    """
    if path is None:
        ref = resources.files("droughtcap").joinpath("data/default_curves.csv")
        text = ref.read_text()
        return _parse_curves(text.splitlines())
    with Path(path).open(newline="") as fh:
        return _parse_curves(fh)


def _parse_curves(lines) -> dict[str, WindPowerCurve]:
    reader = csv.DictReader(lines)
    if reader.fieldnames != CURVE_COLUMNS:
        raise MissingColumn(
            f"curves file must have columns {','.join(CURVE_COLUMNS)}, got {reader.fieldnames}"
        )
    grouped: dict[str, list[tuple[float, float]]] = {}
    for i, row in enumerate(reader, start=2):
        try:
            grouped.setdefault(row["curve_id"], []).append(
                (float(row["speed_ms"]), float(row["power_fraction"]))
            )
        except (TypeError, ValueError) as exc:
            raise InvariantViolation(f"bad curve row: {exc}", row=i) from exc
    curves = {}
    for curve_id, pts in grouped.items():
        curves[curve_id] = WindPowerCurve.from_points(curve_id, pts)
    return curves


def write_curves_csv(curves: dict[str, WindPowerCurve], path: str | Path) -> None:
    """Write curves in the curves.csv schema (row order: by id, then speed)."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CURVE_COLUMNS)
        for curve_id in sorted(curves):
            for speed, fraction in curves[curve_id].points:
                writer.writerow([curve_id, repr(speed), repr(fraction)])
