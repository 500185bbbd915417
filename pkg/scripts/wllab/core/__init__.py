"""Framework pieces shared by the library, the harness and the CLI."""

from .base_check import BaseCheck
from .config import Limits, active_limits, configure_limits, load_config
from .errors import (
    CapacityError,
    ConstructionStuckError,
    InputError,
    PreconditionError,
    SamplingBudgetError,
    WlLabError,
)
from .harness import VerificationHarness
from .logger import setup_logging

__all__ = [
    "BaseCheck",
    "CapacityError",
    "ConstructionStuckError",
    "InputError",
    "Limits",
    "PreconditionError",
    "SamplingBudgetError",
    "VerificationHarness",
    "WlLabError",
    "active_limits",
    "configure_limits",
    "load_config",
    "setup_logging",
]
