"""Ambient-temperature derating of combustion turbines.

Simple-cycle output falls roughly linearly with dry-bulb temperature:

    P_ct = P_ct,n * (-C_ct * T_d + 1.15), clamped to [0, P_ct,n]

The raw line crosses 1.0 at about 18.07 degC; below that the nameplate
clamp governs.
"""

from dataclasses import dataclass

from .errors import InvariantViolation

CT_INTERCEPT = 1.15
DEFAULT_CT_COEFFICIENT = 0.0083  # per degC


@dataclass(frozen=True)
class CtParams:
    installed_capacity_mw: float
    coefficient_per_c: float = DEFAULT_CT_COEFFICIENT

    def __post_init__(self):
        if self.installed_capacity_mw <= 0.0:
            raise InvariantViolation(
                f"installed capacity must be positive, got {self.installed_capacity_mw}",
                field="installed_capacity_mw",
            )
        if self.coefficient_per_c <= 0.0:
            raise InvariantViolation(
                f"power-temperature coefficient must be positive, got {self.coefficient_per_c}",
                field="coefficient_per_c",
            )


def ct_derate_factor(p: CtParams, t_d: float) -> float:
    """Usable fraction of nameplate at dry-bulb temperature t_d (degC)."""
    return min(max(-p.coefficient_per_c * t_d + CT_INTERCEPT, 0.0), 1.0)


def ct_usable_capacity(p: CtParams, t_d: float) -> float:
    """Usable capacity (MW) at dry-bulb temperature t_d (degC)."""
    return p.installed_capacity_mw * ct_derate_factor(p, t_d)
