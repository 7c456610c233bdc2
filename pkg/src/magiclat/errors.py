"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: InputError -> 2, ResourceLimitError -> 3,
every other MagiclatError -> 1.
"""


class MagiclatError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MagiclatError):
    """Malformed input: bad file syntax, undeclared vertices, bad values."""


class StructureError(MagiclatError):
    """Structurally invalid request: host mismatch, non-subgraph, wrong shape."""


class GroupTableError(MagiclatError):
    """A multiplication table violates a group axiom (named in the message)."""


class ResourceLimitError(MagiclatError):
    """Refusal to start a computation that exceeds a configured size cap."""


class ConsistencyError(MagiclatError):
    """An internal cross-check failed; results are never silently wrong."""
