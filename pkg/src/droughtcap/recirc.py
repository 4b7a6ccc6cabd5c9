"""Usable capacity of steam units cooled by recirculating (wet tower) systems.

The tower heat/mass balance is reduced to three steps. Makeup water at
rated load follows from the rejected heat and the cycles of
concentration:

    W_mu   = n_cc/(n_cc - 1) * P_n * HR * (1 - k_sens) / (rho_w * h_fg)

The condenser circulating flow follows from the available makeup
(capped by the withdrawable streamflow) and the humidity pickup of the
cooling air:

    W_circ = min(W_mu, gamma*Q) * sigma / (omega_out - omega_in)

and the usable capacity from the per-unit-air enthalpy balance:

    P_rc   = rho_w * W_circ * [h_out + T_c*c_pw*d_omega/n_cc
                               - T_mu*c_pw*d_omega - h_in] / (sigma * HR)

with T_c = T_wb + T_app and HR = (1 - eta_net - k_os)/eta_net. The
humidity gap is floored at 1e-6 kg/kg where it appears as a divisor; the
enthalpy bracket keeps the raw gap, so saturated ambient air yields zero
capacity (an evaporative tower cannot reject latent heat into saturated
air) and the output tapers continuously to zero as saturation nears.
"""

import math
from dataclasses import dataclass

from .constants import CP_WATER, LATENT_HEAT, RHO_WATER
from .errors import InvariantViolation, NegativeFlow
from .psychro import AirState

HUMIDITY_GAP_FLOOR = 1e-6  # kg/kg


@dataclass(frozen=True)
class RecircParams:
    installed_capacity_mw: float
    net_efficiency: float          # eta_net, fraction
    heat_sink_fraction: float      # k_os
    cycles_of_concentration: float  # n_cc
    water_air_ratio: float         # sigma, water-to-air mass flow ratio
    tower_approach_c: float        # T_app, cold water above ambient wet bulb
    sensible_fraction: float       # k_sens, heat rejected without evaporation
    stream_fraction: float         # gamma
    latent_heat_mj_per_kg: float = LATENT_HEAT

    def __post_init__(self):
        if self.installed_capacity_mw <= 0.0:
            raise InvariantViolation(
                f"installed capacity must be positive, got {self.installed_capacity_mw}",
                field="installed_capacity_mw",
            )
        if not 0.0 < self.net_efficiency < 1.0:
            raise InvariantViolation(
                f"net efficiency must be in (0, 1), got {self.net_efficiency}",
                field="net_efficiency",
            )
        if not 0.0 <= self.heat_sink_fraction < 1.0:
            raise InvariantViolation(
                f"heat sink fraction must be in [0, 1), got {self.heat_sink_fraction}",
                field="k_os",
            )
        if self.net_efficiency + self.heat_sink_fraction >= 1.0:
            raise InvariantViolation(
                "net_efficiency + k_os must be < 1, got "
                f"{self.net_efficiency} + {self.heat_sink_fraction}",
                field="net_efficiency",
            )
        if self.cycles_of_concentration <= 1.0:
            raise InvariantViolation(
                f"cycles of concentration must exceed 1, got {self.cycles_of_concentration}",
                field="n_cc",
            )
        if not 0.5 <= self.water_air_ratio <= 1.5:
            raise InvariantViolation(
                f"water-air ratio must be in [0.5, 1.5], got {self.water_air_ratio}",
                field="sigma",
            )
        if self.tower_approach_c < 0.0:
            raise InvariantViolation(
                f"tower approach must be non-negative, got {self.tower_approach_c}",
                field="t_app_c",
            )
        if not 0.0 <= self.sensible_fraction <= 1.0:
            raise InvariantViolation(
                f"sensible fraction must be in [0, 1], got {self.sensible_fraction}",
                field="k_sens",
            )
        if not 0.0 < self.stream_fraction <= 1.0:
            raise InvariantViolation(
                f"stream fraction must be in (0, 1], got {self.stream_fraction}",
                field="gamma",
            )
        if self.latent_heat_mj_per_kg <= 0.0:
            raise InvariantViolation(
                f"latent heat must be positive, got {self.latent_heat_mj_per_kg}",
                field="latent_heat",
            )

    @property
    def heat_ratio(self) -> float:
        return (1.0 - self.net_efficiency - self.heat_sink_fraction) / self.net_efficiency


@dataclass(frozen=True)
class WaterLosses:
    """Tower water budget (all m3/s). Drift losses are neglected."""

    evaporation: float
    blowdown: float
    makeup: float
    circulating: float

    def __post_init__(self):
        for name in ("evaporation", "blowdown", "makeup", "circulating"):
            if getattr(self, name) < 0.0:
                raise InvariantViolation(f"{name} must be non-negative", field=name)
        if not math.isclose(
            self.makeup, self.evaporation + self.blowdown, rel_tol=1e-9, abs_tol=1e-15
        ):
            raise InvariantViolation(
                f"makeup {self.makeup} != evaporation + blowdown "
                f"{self.evaporation + self.blowdown}",
                field="makeup",
            )


def rated_makeup(p: RecircParams, air: AirState | None = None) -> float:
    """Makeup withdrawal (m3/s) required at rated load.

    With a constant sensible fraction the rated makeup is set entirely by
    the heat balance; ``air`` is accepted so callers can treat this
    uniformly with the other tower relations.
    """
    return (
        p.cycles_of_concentration
        / (p.cycles_of_concentration - 1.0)
        * (p.installed_capacity_mw * p.heat_ratio)
        * (1.0 - p.sensible_fraction)
        / (RHO_WATER * p.latent_heat_mj_per_kg)
    )


def circulating_flow(p: RecircParams, flow: float, air: AirState) -> WaterLosses:
    """Tower water budget at streamflow ``flow`` (m3/s) and the given air state."""
    if flow < 0.0:
        raise NegativeFlow(f"streamflow must be non-negative, got {flow}")
    makeup = min(rated_makeup(p), p.stream_fraction * flow)
    gap = max(air.humidity_gap, HUMIDITY_GAP_FLOOR)
    w_circ = makeup * p.water_air_ratio / gap
    n_cc = p.cycles_of_concentration
    per_air = w_circ / p.water_air_ratio * gap
    return WaterLosses(
        evaporation=per_air * (n_cc - 1.0) / n_cc,
        blowdown=per_air / n_cc,
        makeup=per_air,
        circulating=w_circ,
    )


def rc_usable_capacity(
    p: RecircParams, flow: float, water_temp: float, air: AirState, clamp: bool = True
) -> float:
    """Usable capacity (MW) at streamflow ``flow`` (m3/s), intake water
    temperature ``water_temp`` (degC, the makeup temperature), and ambient
    air state.

    With ``clamp=False`` the raw balance value is returned without the
    final [0, nameplate] clamp (useful for diagnostics).
    """
    if flow < 0.0:
        raise NegativeFlow(f"streamflow must be non-negative, got {flow}")
    makeup = min(rated_makeup(p), p.stream_fraction * flow)
    gap_raw = air.humidity_gap
    gap = max(gap_raw, HUMIDITY_GAP_FLOOR)
    w_circ = makeup * p.water_air_ratio / gap
    t_c = air.wet_bulb + p.tower_approach_c
    bracket = (
        air.enthalpy_out
        + t_c * CP_WATER * gap_raw / p.cycles_of_concentration
        - water_temp * CP_WATER * gap_raw
        - air.enthalpy_in
    )
    raw = RHO_WATER * w_circ * bracket / (p.water_air_ratio * p.heat_ratio)
    if not clamp:
        return raw
    return min(max(raw, 0.0), p.installed_capacity_mw)
