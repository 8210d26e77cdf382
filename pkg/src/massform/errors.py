"""Exception types. Each carries the CLI exit code it maps to."""


class MassformError(Exception):
    exit_code = 1


class ParseError(MassformError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class IncompatibleCountingError(MassformError, ValueError):
    """Counting expression does not structurally match the group."""
    exit_code = 3


class StructureError(IncompatibleCountingError):
    """An operation needed a wreath/product structure tag that is absent or wrong."""


class SizeCapError(MassformError):
    exit_code = 4


class InvalidResidueError(MassformError, ValueError):
    exit_code = 5


class NotInGroupError(MassformError, ValueError):
    pass


class InvalidPairError(MassformError, ValueError):
    pass
