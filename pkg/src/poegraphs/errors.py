"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """A size cap (group order, matrix dimension, ...) was exceeded."""


class SpecSyntaxError(ValueError):
    """A group-spec string failed to parse.

    ``position`` is the 0-based offset of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
