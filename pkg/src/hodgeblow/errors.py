"""Exception hierarchy.

Each class carries the CLI exit code it maps to, so the front end never has
to pattern-match on messages.
"""


class HodgeError(Exception):
    exit_code = 1


class ValidationError(HodgeError, ValueError):
    """Input data violates a model invariant."""

    exit_code = 2

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations) if violations else [message]


class ManifestSyntaxError(ValidationError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class InconsistentDataError(ValidationError):
    """Data admits no non-negative completion."""


class NameResolutionError(HodgeError, LookupError):
    exit_code = 3

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class PreconditionError(HodgeError, ValueError):
    exit_code = 4


class CodimensionError(PreconditionError):
    pass


class DimensionMismatchError(PreconditionError):
    pass


class BettiRequiredError(PreconditionError):
    def __init__(self, name=""):
        suffix = f" for {name!r}" if name else ""
        super().__init__(f"Betti data required{suffix}")


class InapplicableStepError(PreconditionError):
    def __init__(self, message, index=None):
        if index is not None:
            message = f"step {index}: {message}"
        super().__init__(message)
        self.index = index


class ContractError(HodgeError, AssertionError):
    """An engine identity failed to hold on computed data."""

    exit_code = 5
