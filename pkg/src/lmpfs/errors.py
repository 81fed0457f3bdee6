"""Exception types shared across the package."""


class GroupValidationError(ValueError):
    """A multiplication table violates one of the group axioms."""


class CapacityError(RuntimeError):
    """An operation was asked to exceed its configured size cap."""


class SpecParseError(ValueError):
    """A group-spec or set-literal string is malformed.

    Carries the character position at which parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
