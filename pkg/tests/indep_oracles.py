"""Independent reference implementations used to cross-check the package.

Everything here is coded from the published relations alone and must not
import droughtcap: agreement between the two codebases is the point of
the oracle tests.
"""

import math

RHO_W = 1000.0
CP_W = 4.186e-3
K_PSY = 0.000662
B_KGKG = 0.6219907


def sat_vapor_pressure(t):
    return 0.61094 * math.exp(17.625 * t / (t + 243.04))


def wet_bulb(t_d, rh, p_tot):
    """Psychrometer fixed point by bisection on [-50, t_d], 1e-4 degC."""
    p_w = sat_vapor_pressure(t_d) * rh / 100.0

    def f(t):
        return t - (t_d - (sat_vapor_pressure(t) - p_w) / (K_PSY * p_tot))

    lo, hi = -50.0, t_d
    if f(hi) <= 0.0:
        return hi
    if f(lo) >= 0.0:
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-4:
            return 0.5 * (lo + hi)
    raise ArithmeticError("no convergence")


def wet_bulb_residual(t_wb, t_d, rh, p_tot):
    """Defect of the psychrometer relation at a candidate wet-bulb value."""
    p_w = sat_vapor_pressure(t_d) * rh / 100.0
    return t_wb - (t_d - (sat_vapor_pressure(t_wb) - p_w) / (K_PSY * p_tot))


def recirc_chain(p_n, eta, k_os, n_cc, sigma, t_app, k_sens, gamma, flow,
                 t_mu, t_d, rh, p_tot, h_fg=2.45, gap_floor=1e-6):
    """Sequential evaluation of the full recirculating-cooling chain.

    Returns the pre-clamp usable capacity in MW. The humidity gap is
    floored only where it divides; the enthalpy bracket keeps the raw gap.
    """
    heat_ratio = (1.0 - eta - k_os) / eta
    p_ws = sat_vapor_pressure(t_d)
    p_w = p_ws * rh / 100.0
    t_wb = wet_bulb(t_d, rh, p_tot)
    omega_in = B_KGKG * p_w / (p_tot - p_w)
    omega_out = B_KGKG * p_ws / (p_tot - p_ws)
    h_in = t_d * (1.01 + 0.00189 * omega_in) + 2.5 * omega_in
    h_out = t_d * (1.01 + 0.00189 * omega_out) + 2.5 * omega_out
    t_c = t_wb + t_app

    w_mu = n_cc / (n_cc - 1.0) * (p_n * heat_ratio) * (1.0 - k_sens) / (RHO_W * h_fg)
    gap_raw = omega_out - omega_in
    gap = max(gap_raw, gap_floor)
    w_circ = min(w_mu, gamma * flow) * sigma / gap
    bracket = (h_out + t_c * CP_W * gap_raw / n_cc - t_mu * CP_W * gap_raw - h_in)
    return RHO_W * w_circ * bracket / (sigma * heat_ratio)


def water_losses(p_n, eta, k_os, n_cc, sigma, k_sens, gamma, flow,
                 omega_in, omega_out, h_fg=2.45, gap_floor=1e-6):
    """Makeup / evaporation / blowdown / circulating split (m3/s)."""
    heat_ratio = (1.0 - eta - k_os) / eta
    w_mu_rated = n_cc / (n_cc - 1.0) * (p_n * heat_ratio) * (1.0 - k_sens) / (RHO_W * h_fg)
    gap = max(omega_out - omega_in, gap_floor)
    w_circ = min(w_mu_rated, gamma * flow) * sigma / gap
    w_mu = w_circ / sigma * gap
    w_evap = w_circ * (n_cc - 1.0) / (sigma * n_cc) * gap
    w_bd = w_circ / (sigma * n_cc) * gap
    return w_evap, w_bd, w_mu, w_circ


def ols_fit(xs, ys):
    """Closed-form simple regression: slope, intercept, r_squared."""
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_tot = sum((y - my) ** 2 for y in ys)
    if ss_tot == 0.0:
        return slope, intercept, 0.0
    ss_res = sum((y - slope * x - intercept) ** 2 for x, y in zip(xs, ys))
    return slope, intercept, 1.0 - ss_res / ss_tot
