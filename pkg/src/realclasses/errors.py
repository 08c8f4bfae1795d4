import os


class GuardError(ValueError):
    """A size guard on enumeration or construction was exceeded."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; this signals a bug, not bad input."""


def guard(default: int) -> int:
    """Enumeration guard, raised by ``REALCLASS_GUARD`` when it is larger."""
    raw = os.environ.get("REALCLASS_GUARD")
    if not raw:
        return default
    try:
        value = int(float(raw))
    except ValueError:
        raise GuardError(f"REALCLASS_GUARD must be an integer, got {raw!r}") from None
    return max(default, value)
