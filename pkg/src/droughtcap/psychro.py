"""Moist-air property kernel.

Relationships used by the cooling-tower model:

    P_ws(T)   = 0.61094 * exp(17.625*T / (T + 243.04))        Magnus form, kPa
    P_w       = P_ws(T_d) * RH / 100                           vapor pressure, kPa
    T_wb      = T_d - (P_ws(T_wb) - P_w) / (K * P_tot)         psychrometer relation
    omega     = B * P / (P_tot - P)                            humidity ratio, kg/kg
    h         = T * (1.01 + 0.00189*omega) + 2.5*omega         moist-air enthalpy

with psychrometer constant K = 0.000662 1/degC and B = 0.6219907 kg/kg.
The exit-air state is taken as saturated at the ambient dry-bulb
temperature, so omega_out uses P_ws(T_d).
"""

import math
from dataclasses import dataclass

from .errors import NoConvergence, OutOfRange

PSYCHROMETER_K = 0.000662     # 1/degC
HUMIDITY_RATIO_B = 0.6219907  # kg water vapor per kg dry air

_T_MIN = -50.0
_T_MAX = 60.0
_WETBULB_TOL = 1e-4           # degC
_WETBULB_MAX_ITER = 200


@dataclass(frozen=True)
class AirState:
    """Derived psychrometric bundle for one ambient condition.

    Temperatures in degC, pressures in kPa, humidity ratios in kg/kg,
    enthalpies in MJ/kg.
    """

    dry_bulb: float
    wet_bulb: float
    pressure: float
    vapor_pressure: float
    sat_vapor_pressure: float
    humidity_ratio_in: float
    humidity_ratio_out: float
    enthalpy_in: float
    enthalpy_out: float

    @property
    def humidity_gap(self) -> float:
        return self.humidity_ratio_out - self.humidity_ratio_in


def saturation_vapor_pressure(t: float) -> float:
    """Saturation vapor pressure (kPa) at temperature t (degC), Magnus form."""
    if not _T_MIN <= t <= _T_MAX:
        raise OutOfRange(f"temperature {t} degC outside [{_T_MIN}, {_T_MAX}]")
    return 0.61094 * math.exp(17.625 * t / (t + 243.04))


def wet_bulb_temperature(t_d: float, rh: float, p_tot: float) -> float:
    """Wet-bulb temperature (degC) from dry-bulb, relative humidity, pressure.

    Solves the psychrometer relation for its fixed point by bisection on
    [-50, t_d] to 1e-4 degC. The residual is strictly increasing in the
    trial temperature, so the bracket is guaranteed.
    """
    if not 0.0 <= rh <= 100.0:
        raise OutOfRange(f"relative humidity {rh}% outside [0, 100]")
    if p_tot <= 0.0:
        raise OutOfRange(f"pressure {p_tot} kPa must be positive")
    p_w = saturation_vapor_pressure(t_d) * rh / 100.0

    def residual(t: float) -> float:
        return t - (t_d - (saturation_vapor_pressure(t) - p_w) / (PSYCHROMETER_K * p_tot))

    lo, hi = _T_MIN, t_d
    if residual(hi) <= 0.0:
        # Saturated air: the dry bulb is itself the fixed point.
        return hi
    if residual(lo) >= 0.0:
        return lo
    for _ in range(_WETBULB_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if residual(mid) > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo < _WETBULB_TOL:
            return 0.5 * (lo + hi)
    raise NoConvergence(
        f"wet-bulb solve did not converge for t_d={t_d}, rh={rh}, p={p_tot}"
    )


def _enthalpy(t: float, omega: float) -> float:
    return t * (1.01 + 0.00189 * omega) + 2.5 * omega


def air_state(t_d: float, rh: float, p_tot: float) -> AirState:
    """Full psychrometric state from dry-bulb (degC), RH (%), pressure (kPa)."""
    p_ws = saturation_vapor_pressure(t_d)
    if p_ws >= p_tot:
        raise OutOfRange(
            f"saturation pressure {p_ws:.3f} kPa reaches total pressure {p_tot} kPa"
        )
    p_w = p_ws * rh / 100.0
    t_wb = wet_bulb_temperature(t_d, rh, p_tot)
    omega_in = HUMIDITY_RATIO_B * p_w / (p_tot - p_w)
    omega_out = HUMIDITY_RATIO_B * p_ws / (p_tot - p_ws)
    return AirState(
        dry_bulb=t_d,
        wet_bulb=t_wb,
        pressure=p_tot,
        vapor_pressure=p_w,
        sat_vapor_pressure=p_ws,
        humidity_ratio_in=omega_in,
        humidity_ratio_out=omega_out,
        enthalpy_in=_enthalpy(t_d, omega_in),
        enthalpy_out=_enthalpy(t_d, omega_out),
    )
