"""
Rootboard - Error hierarchy
Every failure carries an error code for JSON bodies and an exit code for the CLI
"""


class RootboardError(Exception):
    """Base class for all rootboard errors"""

    error_code = "ROOTBOARD_ERROR"
    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(RootboardError, ValueError):
    """Input text is not a canonical decimal natural or fraction"""

    error_code = "PARSE_ERROR"
    exit_code = 1


class UsageError(RootboardError, ValueError):
    """Options that cannot be combined"""

    error_code = "USAGE_ERROR"
    exit_code = 1


class PreconditionError(RootboardError, ValueError):
    """An operation was called outside its domain"""

    error_code = "PRECONDITION_ERROR"
    exit_code = 2


class CorruptTraceError(RootboardError, ValueError):
    """A board that the extraction engine could not have produced"""

    error_code = "CORRUPT_TRACE"
    exit_code = 2
