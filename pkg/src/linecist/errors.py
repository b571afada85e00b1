from __future__ import annotations


class ContractViolation(ValueError):
    """An operation was called outside its documented preconditions."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Infeasible(Exception):
    """No structure of the requested kind exists (or none could be found)."""


class ValidationError(Exception):
    """A constructed or supplied structure failed verification."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
