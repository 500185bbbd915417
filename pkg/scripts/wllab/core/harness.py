"""Verification harness for coordinating and running multiple checks."""

from pathlib import Path
from typing import Any, Dict, List, Optional

from .base_check import BaseCheck
from .config import Limits, configure_limits, load_config
from .logger import setup_logging


class VerificationHarness:
    """Registry and runner for theorem and fixture checks."""

    def __init__(
        self, config_path: Optional[Path] = None, log_level: Optional[str] = None
    ):
        """Initialize the harness.

        Args:
            config_path: Optional path to a JSON or YAML configuration file
            log_level: Overrides the configured logging level
        """
        self.checks: Dict[str, BaseCheck] = {}
        self.config = load_config(config_path)

        # Setup logging
        logging_config = self.config.get("logging", {})
        log_file = None
        if logging_config.get("file"):
            log_file = Path(logging_config["file"])

        self.logger = setup_logging(
            log_level=log_level or logging_config.get("level", "INFO"),
            log_file=log_file,
            console_output=logging_config.get("console", True),
        )

        configure_limits(Limits.from_config(self.config.get("limits")))

    def check_config(self, name: str) -> Dict[str, Any]:
        """Per-check block merged over the global seed."""
        block = dict(self.config.get("checks", {}).get(name, {}))
        block.setdefault("seed", self.config.get("seed", 0))
        return block

    def register_check(self, check: BaseCheck) -> None:
        """Register a check with the harness.

        Args:
            check: Check instance to register
        """
        self.checks[check.name] = check
        self.logger.info(f"Registered check: {check.name}")

    def run_check(self, check_name: str) -> Dict[str, Any]:
        """Run a specific check by name.

        Args:
            check_name: Name of the check to run

        Returns:
            Dictionary containing the check's status and report
        """
        if check_name not in self.checks:
            error_msg = f"Check '{check_name}' not found"
            self.logger.error(error_msg)
            return {"status": "error", "error": error_msg}

        self.logger.info(f"Running check: {check_name}")
        return self.checks[check_name].start()

    def run_all_checks(self) -> List[Dict[str, Any]]:
        """Run all registered checks.

        Returns:
            List of execution results for all checks
        """
        results = []
        self.logger.info("Running all checks")

        for check_name in self.checks:
            result = self.run_check(check_name)
            results.append(result)

        return results

    def list_checks(self) -> List[str]:
        """Get list of registered check names.

        Returns:
            List of check names
        """
        return list(self.checks.keys())

    def get_check_status(self) -> Dict[str, bool]:
        """Get running status of all checks.

        Returns:
            Dictionary mapping check names to their running status
        """
        return {name: check.is_running() for name, check in self.checks.items()}
