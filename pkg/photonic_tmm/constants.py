"""Physical constants and run defaults."""
import math

from scipy.constants import c as _C_M_PER_S

# Vacuum light speed
SPEED_OF_LIGHT_M_PER_S = float(_C_M_PER_S)
SPEED_OF_LIGHT_NM_PER_S = SPEED_OF_LIGHT_M_PER_S * 1e9

# Reference crystal: (AB)^10 with n_a=2.68, n_b=1.68, a=200 nm, b=300 nm
DEFAULT_N_A = 2.68
DEFAULT_N_B = 1.68
DEFAULT_A_NM = 200.0
DEFAULT_B_NM = 300.0
DEFAULT_PERIODS = 10

# Central frequency "171 THz": angular reading (2*pi*171e12 rad/s) is the default,
# the numeric reading takes 171e12 directly as rad/s.
OMEGA0_ANGULAR = 2.0 * math.pi * 171e12
OMEGA0_NUMERIC = 171e12

DEFAULT_RATIO_MIN = 0.1
DEFAULT_RATIO_MAX = 3.5
DEFAULT_SWEEP_SAMPLES = 2001
DEFAULT_PROFILE_SAMPLES = 2000
DEFAULT_PROFILE_RATIO = 1.25

DEFAULT_GAP_THRESHOLD = 1e-3

# Frequency points quoted for the reference crystal (omega / omega0)
REFERENCE_RATIOS = (1.25, 1.5, 3.2)

# Angles of the incidence study
STUDY_ANGLES = (math.pi / 10, math.pi / 6, math.pi / 4)

# Tolerances
FLUX_TOLERANCE = 1e-10
ORACLE_TOLERANCE = 1e-9
CONTINUITY_TOLERANCE = 1e-10
BLOCK_SCALAR_TOLERANCE = 1e-12
TUNNEL_RATIO = 1e-2
AMPLITUDE_CONTRAST = 10.0

# CSV headers
SPECTRUM_HEADER = ("omega_rad_per_s", "omega_over_omega0", "T", "R", "T_classical")
PROFILE_HEADER = ("x_nm", "rho", "J_over_c")
GAPS_HEADER = ("omega_lo", "omega_hi", "min_T")
DECAY_HEADER = ("omega_rad_per_s", "omega_over_omega0", "min_T", "decay_length_nm")

CSV_SIGNIFICANT_DIGITS = 12

# CLI exit codes
EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3
