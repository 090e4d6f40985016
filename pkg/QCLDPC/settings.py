import os
from typing import List

import dotenv

from QCLDPC.errors import ConfigurationError

dotenv.load_dotenv()

# Malformed EAQC_* values found at import; they fall back to their defaults
_problems: List[str] = []


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from None


def _setting(name: str, default: int) -> int:
    try:
        return _int_env(name, default)
    except ConfigurationError as exc:
        _problems.append(str(exc))
        return default


def validate():
    """
    Raise if any EAQC_* variable could not be read.

    Importing the package never fails on a bad environment; entry points
    call this once so the problem is reported with a proper exit code.

    Raises:
        ConfigurationError: Naming every malformed variable
    """
    if _problems:
        raise ConfigurationError("; ".join(_problems))


# Worker processes for Monte Carlo sharding
WORKERS = max(1, _setting("EAQC_WORKERS", 1))
LOG_LEVEL = os.environ.get("EAQC_LOG_LEVEL", "INFO").upper()

# Simulation defaults
DEFAULT_TRIALS = _setting("EAQC_TRIALS", 10000)
DEFAULT_MAX_ITER = _setting("EAQC_MAX_ITER", 100)
DEFAULT_SEED = _setting("EAQC_SEED", 1)
DEFAULT_ISD_BUDGET = _setting("EAQC_ISD_BUDGET", 200)

RUN_SLOW = os.environ.get("EAQC_RUN_SLOW", "0") == "1"

# Prior used by the decoder when f_m == 0 (syndrome is then always zero)
MIN_PRIOR = 1e-6

CSV_FORMAT_VERSION = 1
EXPORT_FORMAT_VERSION = 1
