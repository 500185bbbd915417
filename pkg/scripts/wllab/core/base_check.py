"""Base class for the verification checks run by the harness."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional


class BaseCheck(ABC):
    """Abstract base class for every theorem or fixture check."""

    def __init__(self, name: str, config: Optional[Dict[str, Any]] = None):
        """Initialize the check.

        Args:
            name: Check name, as used on the command line
            config: Optional per-check configuration block
        """
        self.name = name
        self.config = config or {}
        self.logger = logging.getLogger(f"wllab.check.{name}")
        self._is_running = False

    @abstractmethod
    def run(self):
        """Execute the check.

        Returns:
            VerificationReport describing the run
        """
        pass

    @abstractmethod
    def validate_config(self) -> bool:
        """Validate the check's parameters.

        Returns:
            True if configuration is valid, False otherwise
        """
        pass

    def start(self) -> Dict[str, Any]:
        """Run the check with error handling and logging.

        Returns:
            ``{"status": "success", "check": name, "result": report_dict}`` or
            ``{"status": "error", "check": name, "error": message}``
        """
        try:
            self.logger.info(f"Starting check: {self.name}")

            if not self.validate_config():
                raise ValueError(f"Invalid configuration for check {self.name}")

            self._is_running = True
            report = self.run()

            self.logger.info(f"Check {self.name} finished with {report.status}")
            return {
                "status": "success",
                "check": self.name,
                "result": report.to_dict(),
            }

        except Exception as e:
            self.logger.error(f"Check {self.name} failed: {str(e)}")
            return {
                "status": "error",
                "check": self.name,
                "error": str(e),
                "error_type": type(e).__name__,
            }
        finally:
            self._is_running = False

    def is_running(self) -> bool:
        """Check if the check is currently running.

        Returns:
            True if running, False otherwise
        """
        return self._is_running

    def int_param(self, key: str, default: int, minimum: int = 0) -> Optional[int]:
        """Read an integer parameter; ``None`` when it is present but invalid."""
        value = self.config.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            self.logger.error(f"Parameter {key!r} must be an integer >= {minimum}")
            return None
        return value
