"""droughtcap: daily drought capacity derating for generating fleets."""

from .aggregate import (
    CapacityReport,
    capacity_factor,
    derate_fleet,
    flow_generation_correlation,
    write_report_csv,
    write_summary_json,
)
from .combustion import CtParams, ct_usable_capacity
from .fleet import (
    FleetRegistry,
    Fuel,
    GeneratorRecord,
    SiteHydrology,
    SiteWeather,
    Technology,
    WaterSource,
    classify_at_risk,
    load_fleet,
    validate_fleet,
)
from .hydro import HydroParams, hydro_series, hydro_usable_capacity
from .once_through import OnceThroughParams, ot_rated_withdrawal, ot_usable_capacity
from .psychro import AirState, air_state, saturation_vapor_pressure, wet_bulb_temperature
from .pv import PvParams, module_temperature, pv_power, relative_efficiency
from .recirc import (
    RecircParams,
    WaterLosses,
    circulating_flow,
    rated_makeup,
    rc_usable_capacity,
)
from .scenario import Scenario, apply_scenario, load_scenarios, standard_scenarios
from .series import DailySeries, Unit
from .wind import (
    WindParams,
    WindPowerCurve,
    extrapolate_hub_speed,
    load_wind_curves,
    power_from_curve,
    wind_usable_capacity,
)

__version__ = "0.1.0"
