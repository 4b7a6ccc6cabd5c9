"""Daily usable capacity of conventional hydroelectric plants.

Usable power is the turbine equation capped at nameplate:

    P = min(eta * rho_w * Q * g * H_net / 1e6, P_n)   [MW]
"""

from dataclasses import dataclass

from .constants import GRAVITY, RHO_WATER
from .errors import InvariantViolation, NegativeFlow
from .series import DailySeries, Unit


@dataclass(frozen=True)
class HydroParams:
    head_m: float                 # net hydraulic head acting on the turbine
    efficiency: float             # generator efficiency, fraction
    installed_capacity_mw: float

    def __post_init__(self):
        if self.head_m <= 0.0:
            raise InvariantViolation(f"head must be positive, got {self.head_m}", field="head_m")
        if not 0.0 < self.efficiency <= 1.0:
            raise InvariantViolation(
                f"efficiency must be in (0, 1], got {self.efficiency}", field="hydro_efficiency"
            )
        if self.installed_capacity_mw <= 0.0:
            raise InvariantViolation(
                f"installed capacity must be positive, got {self.installed_capacity_mw}",
                field="installed_capacity_mw",
            )


def hydro_usable_capacity(p: HydroParams, flow: float) -> float:
    """Usable capacity (MW) at streamflow ``flow`` (m3/s)."""
    if flow < 0.0:
        raise NegativeFlow(f"streamflow must be non-negative, got {flow}")
    raw = p.efficiency * RHO_WATER * flow * GRAVITY * p.head_m / 1e6
    return min(raw, p.installed_capacity_mw)


def hydro_series(p: HydroParams, flows: DailySeries) -> DailySeries:
    """Element-wise usable capacity for a daily streamflow series."""
    if flows.unit is not Unit.M3_PER_S:
        raise ValueError(f"expected m3_per_s series, got {flows.unit.value}")
    out = []
    for day, q in zip(flows.dates(), flows.values):
        try:
            out.append(hydro_usable_capacity(p, q))
        except NegativeFlow as exc:
            raise NegativeFlow(f"{day}: {exc}") from exc
    return DailySeries(flows.start_date, tuple(out), Unit.MW)
