"""Exception hierarchy.

Every error raised for malformed input derives from :class:`GameError`, so
callers (and the CLI) can separate bad input from internal bugs, which raise
:class:`InvariantViolation`.
"""


class GameError(ValueError):
    """Base class for all input errors."""


class DuplicateActionLabel(GameError):
    pass


class EmptyActionSet(GameError):
    pass


class MissingPayoffEntry(GameError):
    def __init__(self, profile):
        self.profile = tuple(profile)
        super().__init__(f"no payoff entry for profile ({','.join(self.profile)})")


class InfeasibleProfile(GameError):
    pass


class InfeasiblePartialProfile(InfeasibleProfile):
    pass


class DimensionMismatch(GameError):
    pass


class InvalidMixedStrategy(GameError):
    pass


class NotTwoPlayers(GameError):
    pass


class CandidateNotEquilibrium(GameError):
    pass


class InfeasibleTransferKey(GameError):
    pass


class UnknownAction(GameError):
    pass


class WouldEmptyActionSet(GameError):
    pass


class DuplicateAction(GameError):
    pass


class IncompleteSlice(GameError):
    pass


class UnknownRefinement(GameError):
    pass


class StatusQuoNotEquilibrium(GameError):
    pass


class TargetEqualsStatusQuoAction(GameError):
    pass


class DocumentSyntaxError(GameError):
    """Document text is not well-formed; carries a 1-based line and column."""

    def __init__(self, msg: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{msg} (line {line}, column {column})")


class SchemaError(GameError):
    """Document is well-formed but violates the schema; names the field."""

    def __init__(self, field: str, msg: str):
        self.field = field
        super().__init__(f"{field}: {msg}")


class InvariantViolation(AssertionError):
    """An internal consistency check failed. Always a bug, never bad input."""
