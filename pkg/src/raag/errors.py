"""Shared exception types and the global enumeration cap."""

import os

DEFAULT_MAX_STATES = 5_000_000


class RaagError(Exception):
    pass


class UnknownGeneratorError(RaagError, ValueError):
    pass


class ResourceLimitError(RaagError, RuntimeError):
    pass


def max_states() -> int:
    """Enumeration cap, overridable through RAAG_MAX_STATES."""
    raw = os.environ.get("RAAG_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_STATES
    return int(raw)


def check_states(count: int, what: str) -> None:
    if count > max_states():
        raise ResourceLimitError(
            f"{what}: {count} states exceeds RAAG_MAX_STATES={max_states()}"
        )
