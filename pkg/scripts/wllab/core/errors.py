"""Exception hierarchy shared by every WL-Lab module."""

from typing import Any, Dict, Optional


class WlLabError(Exception):
    """Base class for all errors raised by WL-Lab."""


class InputError(WlLabError, ValueError):
    """Invalid caller input: malformed graph, bad vertex, mismatched runs."""


class PreconditionError(InputError):
    """A theorem hypothesis required by an operation does not hold."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis


class CapacityError(WlLabError):
    """A configured size limit was exceeded.

    Raise the limit explicitly (argument, config ``limits`` block or the
    ``WLLAB_LIMIT_N`` environment variable) to proceed.
    """

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(
            f"{what}: size {size} exceeds limit {limit} "
            f"(raise it with WLLAB_LIMIT_N or the limits config)"
        )
        self.what = what
        self.size = size
        self.limit = limit


class SamplingBudgetError(WlLabError):
    """Rejection sampling ran out of draws before accepting a sample."""

    def __init__(self, draws: int, message: str = ""):
        suffix = f": {message}" if message else ""
        super().__init__(f"no sample accepted after {draws} draws{suffix}")
        self.draws = draws


class ConstructionStuckError(WlLabError):
    """The inductive isomorphism construction could not be extended."""

    def __init__(self, message: str, partial_map: Optional[Dict[int, int]] = None):
        super().__init__(message)
        self.partial_map: Dict[int, int] = dict(partial_map or {})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": str(self),
            "partial_map": {str(k): v for k, v in sorted(self.partial_map.items())},
        }
