"""Exception hierarchy shared across the package.

Three broad categories map onto the CLI exit-code contract:
validation problems (exit 2), verification problems (exit 3), and
missing resources (exit 4).
"""


class FormalpubError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FormalpubError):
    """Input is well-formed enough to read but violates a model invariant."""


class VerificationError(FormalpubError):
    """Content-hash verification failed or could not be attempted."""


class NotFoundError(FormalpubError):
    """A referenced resource does not exist."""
