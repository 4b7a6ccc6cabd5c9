"""Usable capacity of steam units with once-through cooling.

The unit can reject heat only into the fraction of streamflow available
for withdrawal, and only within the temperature headroom left between
the intake water and the discharge limit:

    headroom = max(min(Tl_max - T_w, dTl_max), 0)                 [degC]
    W_on     = P_n * HR / (rho_w * c_pw * headroom)               [m3/s]
    P_on     = min(gamma*Q, W_on) * rho_w * c_pw * headroom / HR  [MW]

with HR = (1 - eta_net - k_os) / eta_net the rejected-heat-to-power
ratio. With zero headroom the rated withdrawal is unbounded (returned
as math.inf) and the usable capacity is zero.
"""

import math
from dataclasses import dataclass

from .constants import CP_WATER, RHO_WATER
from .errors import InvariantViolation, NegativeFlow


@dataclass(frozen=True)
class OnceThroughParams:
    installed_capacity_mw: float
    net_efficiency: float        # eta_net, fraction
    heat_sink_fraction: float    # k_os, heat lost to sinks other than cooling water
    max_discharge_temp_c: float  # Tl_max, regulatory limit on discharged water
    max_condenser_rise_c: float  # dTl_max, design temperature rise across condenser
    stream_fraction: float       # gamma, max fraction of streamflow available

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
        if self.max_discharge_temp_c <= 0.0:
            raise InvariantViolation(
                f"discharge temperature limit must be positive, got {self.max_discharge_temp_c}",
                field="tl_max_c",
            )
        if self.max_condenser_rise_c <= 0.0:
            raise InvariantViolation(
                f"condenser rise limit must be positive, got {self.max_condenser_rise_c}",
                field="dtl_max_c",
            )
        if not 0.0 < self.stream_fraction <= 1.0:
            raise InvariantViolation(
                f"stream fraction must be in (0, 1], got {self.stream_fraction}",
                field="gamma",
            )

    @property
    def heat_ratio(self) -> float:
        """Rejected heat per unit of electric output."""
        return (1.0 - self.net_efficiency - self.heat_sink_fraction) / self.net_efficiency


def _headroom(p: OnceThroughParams, t_w: float, no_regulatory_limit: bool) -> float:
    if no_regulatory_limit:
        return p.max_condenser_rise_c
    return max(min(p.max_discharge_temp_c - t_w, p.max_condenser_rise_c), 0.0)


def ot_rated_withdrawal(
    p: OnceThroughParams, t_w: float, no_regulatory_limit: bool = False
) -> float:
    """Withdrawal (m3/s) needed to run at nameplate with intake at t_w (degC).

    Returns math.inf when the discharge limit leaves no temperature
    headroom (no finite withdrawal suffices).
    """
    headroom = _headroom(p, t_w, no_regulatory_limit)
    if headroom == 0.0:
        return math.inf
    return p.installed_capacity_mw * p.heat_ratio / (RHO_WATER * CP_WATER * headroom)


def ot_usable_capacity(
    p: OnceThroughParams, flow: float, t_w: float, no_regulatory_limit: bool = False
) -> float:
    """Usable capacity (MW) at streamflow ``flow`` (m3/s), intake temp t_w (degC).

    ``no_regulatory_limit`` drops the discharge-temperature constraint and
    keeps only the design condenser rise, for comparing the regulated and
    unregulated regimes.
    """
    if flow < 0.0:
        raise NegativeFlow(f"streamflow must be non-negative, got {flow}")
    headroom = _headroom(p, t_w, no_regulatory_limit)
    if headroom == 0.0:
        return 0.0
    available = p.stream_fraction * flow
    if available >= ot_rated_withdrawal(p, t_w, no_regulatory_limit):
        # withdrawal is not binding; the rated point closes exactly
        return p.installed_capacity_mw
    raw = available * RHO_WATER * CP_WATER * headroom / p.heat_ratio
    return min(max(raw, 0.0), p.installed_capacity_mw)
