"""Gap-free daily time series with a calendar anchor and a physical unit."""

import math
from dataclasses import dataclass
from datetime import date, timedelta
from enum import Enum

from .errors import InvariantViolation


class Unit(str, Enum):
    M3_PER_S = "m3_per_s"
    DEG_C = "degC"
    KPA = "kPa"
    PERCENT = "percent"
    W_PER_M2 = "W_per_m2"
    M_PER_S = "m_per_s"
    MW = "MW"


# Units whose physical quantity cannot be negative.
NONNEGATIVE_UNITS = frozenset({Unit.M3_PER_S, Unit.W_PER_M2, Unit.M_PER_S})


@dataclass(frozen=True)
class DailySeries:
    """One value per calendar day, starting at ``start_date`` (UTC days).

    Values are stored as an immutable tuple; gap-freeness is by
    construction (index i is start_date + i days).
    """

    start_date: date
    values: tuple[float, ...]
    unit: Unit

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise InvariantViolation("series has no values")
        for i, v in enumerate(self.values):
            if not math.isfinite(v):
                raise InvariantViolation(
                    f"non-finite value {v!r} on {self.start_date + timedelta(days=i)}"
                )
            if v < 0.0 and self.unit in NONNEGATIVE_UNITS:
                raise InvariantViolation(
                    f"negative {self.unit.value} value {v!r} on "
                    f"{self.start_date + timedelta(days=i)}"
                )

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end_date(self) -> date:
        return self.start_date + timedelta(days=len(self.values) - 1)

    def dates(self) -> list[date]:
        return [self.start_date + timedelta(days=i) for i in range(len(self.values))]

    def covers(self, start: date, end: date) -> bool:
        return self.start_date <= start and end <= self.end_date

    def at(self, day: date) -> float:
        idx = (day - self.start_date).days
        if idx < 0 or idx >= len(self.values):
            raise KeyError(f"{day} outside series range {self.start_date}..{self.end_date}")
        return self.values[idx]

    def window(self, start: date, end: date) -> "DailySeries":
        """Sub-series covering [start, end], both inclusive."""
        if start > end:
            raise ValueError(f"start {start} after end {end}")
        if not self.covers(start, end):
            raise KeyError(
                f"requested {start}..{end} outside series range "
                f"{self.start_date}..{self.end_date}"
            )
        i = (start - self.start_date).days
        j = (end - self.start_date).days + 1
        return DailySeries(start, self.values[i:j], self.unit)

    def shifted(self, delta: float) -> "DailySeries":
        """New series with ``delta`` added to every value (same unit)."""
        if delta == 0.0:
            return self
        return DailySeries(self.start_date, tuple(v + delta for v in self.values), self.unit)

    def scaled(self, factor: float) -> "DailySeries":
        """New series with every value multiplied by ``factor``."""
        if factor == 1.0:
            return self
        return DailySeries(self.start_date, tuple(v * factor for v in self.values), self.unit)


def aligned(*series: DailySeries) -> bool:
    """True when all series share start date and length."""
    first = series[0]
    return all(
        s.start_date == first.start_date and len(s) == len(first) for s in series[1:]
    )
