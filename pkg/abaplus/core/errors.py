"""Exception types raised by the abaplus engine."""

from __future__ import annotations


class AbaPlusError(Exception):
    """Base class for every error raised by abaplus."""


class FrameworkParseError(AbaPlusError, ValueError):
    """Input text does not conform to the framework or PAF grammar."""

    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        super().__init__(message)
        self.message = message
        self.line = line
        self.source = source

    def with_source(self, source: str) -> "FrameworkParseError":
        return FrameworkParseError(self.message, line=self.line, source=source)

    def __str__(self) -> str:
        if self.line is None:
            return f"{self.source}: {self.message}"
        return f"{self.source}:{self.line}: {self.message}"


class CapacityError(AbaPlusError, RuntimeError):
    """A configured cap was exceeded; results would be truncated."""

    def __init__(self, limit_name: str, limit: int, detail: str = ""):
        message = f"{limit_name} exceeded (limit {limit})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.limit_name = limit_name
        self.limit = limit


class LimitError(CapacityError):
    """Enumeration size (assumptions or arguments) is over the cap."""


class FlatnessError(AbaPlusError, ValueError):
    """An operation defined only for flat frameworks got a non-flat one."""


class NameCollisionError(AbaPlusError, ValueError):
    """An identifier clashes with a reserved token."""
