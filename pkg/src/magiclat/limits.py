"""Resource caps.

Hilbert-basis completion and exhaustive counting blow up quickly, so every
expensive entry point refuses oversized inputs instead of hanging.  The edge
cap can be overridden per call or through the MAGICLAT_MAX_EDGES environment
variable.
"""

import os

from .errors import InputError

DEFAULT_MAX_EDGES = 20
DEFAULT_MAX_RAYS = 20
DEFAULT_MAX_VOLUME = 10**15

ENV_MAX_EDGES = "MAGICLAT_MAX_EDGES"


def effective_max_edges(override=None) -> int:
    """Edge cap for cone computations: explicit override, else env, else default."""
    if override is not None:
        return int(override)
    raw = os.environ.get(ENV_MAX_EDGES)
    if raw is None:
        return DEFAULT_MAX_EDGES
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{ENV_MAX_EDGES} must be an integer, got {raw!r}") from None
