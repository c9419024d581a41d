"""
Configuration file for the pseudo-Voigt toolkit
"""
import os
from dotenv import load_dotenv

load_dotenv()


def _float_list(raw):
    return [float(v) for v in raw.split(",") if v.strip()]


# Approximation Settings
GAMMA = float(os.getenv("VOIGT_GAMMA", 2.75))

# Oracle Settings
T_UPPER = float(os.getenv("VOIGT_T_UPPER", 40.0))
ABS_TOL = float(os.getenv("VOIGT_ABS_TOL", 1e-10))
MAX_SUBDIVISIONS = int(os.getenv("VOIGT_MAX_SUBDIVISIONS", 500))
PANELS = int(os.getenv("VOIGT_PANELS", 10000))
PANEL_ORDER = int(os.getenv("VOIGT_PANEL_ORDER", 5))

# Scan Settings
X_MIN = float(os.getenv("VOIGT_X_MIN", 0.0))
X_MAX = float(os.getenv("VOIGT_X_MAX", 10.0))
X_STEPS = int(os.getenv("VOIGT_X_STEPS", 1001))
Y_VALUES = _float_list(os.getenv("VOIGT_Y_VALUES", "0,0.1,0.5,1"))
COARSE_STEPS = int(os.getenv("VOIGT_COARSE_STEPS", 2001))
REFINE_XTOL = float(os.getenv("VOIGT_REFINE_XTOL", 1e-7))

# Kernel Profile Settings
KERNEL_T_MIN = float(os.getenv("VOIGT_KERNEL_T_MIN", -5.0))
KERNEL_T_MAX = float(os.getenv("VOIGT_KERNEL_T_MAX", 5.0))
KERNEL_STEPS = int(os.getenv("VOIGT_KERNEL_STEPS", 1001))

# Fit Settings
FIT_T_MAX = float(os.getenv("VOIGT_FIT_T_MAX", 5.0))
FIT_GRID_POINTS = int(os.getenv("VOIGT_FIT_GRID_POINTS", 2001))
FIT_MAX_ITER = int(os.getenv("VOIGT_FIT_MAX_ITER", 20000))
FIT_START_BETAS = _float_list(os.getenv("VOIGT_FIT_START_BETAS", "0.5,2,8"))

# Cache Settings
CACHE_MAX_SIZE = int(os.getenv("VOIGT_CACHE_MAX_SIZE", 20000))

# Output Settings
CSV_DIGITS = int(os.getenv("VOIGT_CSV_DIGITS", 17))
VERBOSE = os.getenv("VOIGT_VERBOSE", "False").lower() == "true"
