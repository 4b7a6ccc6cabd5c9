"""Solar-PV usable power from plane-of-array irradiance and air temperature.

Output scales the rated power by the irradiance ratio and a relative
efficiency surface (after Huld et al. 2010):

    P      = P_STC * (G / 1000) * eta(G_hat, T_hat)
    eta    = 1 + k1*ln(G_hat) + k2*ln(G_hat)^2
               + T_hat*(k3 + k4*ln(G_hat) + k5*ln(G_hat)^2) + k6*T_hat^2
    T_mod  = T_amb + c_T * G

with G_hat = G/1000 and T_hat = T_mod - 25. The default coefficients are
the crystalline-silicon fit; eta(1, 0) = 1 holds for any coefficient set
by construction.
"""

import csv
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    InvariantViolation,
    MissingColumn,
    NegativeIrradiance,
    NonpositiveIrradiance,
)

G_STC = 1000.0     # W/m2
T_MOD_STC = 25.0   # degC

# Crystalline-silicon relative-efficiency coefficients k1..k6.
CSI_COEFFICIENTS = (-0.017237, -0.040465, -0.004702, 0.000149, 0.000170, 0.000005)

DEFAULT_THERMAL_COEFFICIENT = 0.035  # degC per W/m2, midpoint of the usual range


@dataclass(frozen=True)
class PvParams:
    installed_capacity_mw: float   # P_STC
    thermal_coefficient: float = DEFAULT_THERMAL_COEFFICIENT
    efficiency_coeffs: tuple[float, ...] = CSI_COEFFICIENTS

    def __post_init__(self):
        if self.installed_capacity_mw <= 0.0:
            raise InvariantViolation(
                f"installed capacity must be positive, got {self.installed_capacity_mw}",
                field="installed_capacity_mw",
            )
        if not 0.025 <= self.thermal_coefficient <= 0.05:
            raise InvariantViolation(
                f"thermal coefficient must be in [0.025, 0.05], got {self.thermal_coefficient}",
                field="c_t",
            )
        object.__setattr__(
            self, "efficiency_coeffs", tuple(float(k) for k in self.efficiency_coeffs)
        )
        if len(self.efficiency_coeffs) != 6:
            raise InvariantViolation(
                f"expected 6 efficiency coefficients, got {len(self.efficiency_coeffs)}",
                field="efficiency_coeffs",
            )
        if not all(math.isfinite(k) for k in self.efficiency_coeffs):
            raise InvariantViolation(
                "efficiency coefficients must be finite", field="efficiency_coeffs"
            )


def module_temperature(t_amb: float, g: float, c_t: float) -> float:
    """Module temperature (degC) from ambient temperature and irradiance."""
    if g < 0.0:
        raise NegativeIrradiance(f"irradiance must be non-negative, got {g}")
    return t_amb + c_t * g


def relative_efficiency(g_norm: float, t_delta: float, coeffs=CSI_COEFFICIENTS) -> float:
    """Relative efficiency at normalized irradiance G_hat and T_mod - 25.

    Undefined at G_hat <= 0 (the log diverges); callers short-circuit to
    zero power there.
    """
    if g_norm <= 0.0:
        raise NonpositiveIrradiance(f"normalized irradiance must be positive, got {g_norm}")
    k1, k2, k3, k4, k5, k6 = coeffs
    lg = math.log(g_norm)
    return 1.0 + k1 * lg + k2 * lg * lg + t_delta * (k3 + k4 * lg + k5 * lg * lg) + k6 * t_delta * t_delta


def pv_power(p: PvParams, g: float, t_amb: float) -> float:
    """Usable power (MW) at irradiance g (W/m2) and ambient t_amb (degC)."""
    if g < 0.0:
        raise NegativeIrradiance(f"irradiance must be non-negative, got {g}")
    if g == 0.0:
        return 0.0
    t_mod = module_temperature(t_amb, g, p.thermal_coefficient)
    eta = relative_efficiency(g / G_STC, t_mod - T_MOD_STC, p.efficiency_coeffs)
    raw = p.installed_capacity_mw * (g / G_STC) * eta
    return min(max(raw, 0.0), p.installed_capacity_mw)


def load_pv_coeffs(path: str | Path) -> tuple[float, ...]:
    """Read a k1..k6 coefficient override file (single data row CSV)."""
    path = Path(path)
    expected = ["k1", "k2", "k3", "k4", "k5", "k6"]
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != expected:
            raise MissingColumn(
                f"pv coefficient file must have columns {','.join(expected)}, "
                f"got {reader.fieldnames}"
            )
        rows = list(reader)
    if len(rows) != 1:
        raise InvariantViolation(
            f"pv coefficient file must have exactly one data row, got {len(rows)}"
        )
    try:
        coeffs = tuple(float(rows[0][k]) for k in expected)
    except ValueError as exc:
        raise InvariantViolation(f"non-numeric pv coefficient: {exc}", row=1) from exc
    if not all(math.isfinite(k) for k in coeffs):
        raise InvariantViolation("pv coefficients must be finite", row=1)
    return coeffs
