"""Exception hierarchy shared by all oodoc modules."""

from __future__ import annotations


class OodocError(Exception):
    """Base class for every error raised by this package."""


class InputError(OodocError):
    """Bad user-supplied input: missing paths, malformed names, bad flags."""


class ParseFailure(OodocError):
    """A source file could not be parsed.

    Carries the file path and the 1-based line where parsing gave up so a
    batch run can report the file and move on.
    """

    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
        self.message = message


class ModelError(OodocError):
    """The parsed declarations cannot form a consistent project model."""


class SchemaError(OodocError):
    """An XML document does not follow the exchange vocabulary."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


class ConsistencyError(OodocError):
    """An XML count attribute disagrees with the children it describes."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


class DotParseError(OodocError):
    """DOT text rejected by the built-in validator."""
