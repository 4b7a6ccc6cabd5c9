# Physical constants used by the derating kernels.

RHO_WATER = 1000.0      # density of water (kg/m3)
GRAVITY = 9.81          # gravitational acceleration (m/s2)
CP_WATER = 4.186e-3     # specific heat of water (MJ/kg/degC)
LATENT_HEAT = 2.45      # latent heat of vaporization of water (MJ/kg)
