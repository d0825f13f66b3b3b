"""Exception types shared across the package."""

from __future__ import annotations


class HgParseError(ValueError):
    """Malformed ``.hg`` input."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class SearchTimeout(RuntimeError):
    """An exact search hit its deadline before reaching a verdict."""


class SizeLimitError(ValueError):
    """Instance exceeds the exhaustive-search guardrail and ``force`` was not set."""


class ProcedureFailure(RuntimeError):
    """A constructive procedure could not complete.

    ``stage`` names the step that failed, ``log`` carries the stage trace.
    """

    def __init__(self, stage: str, message: str, log: list[str] | None = None) -> None:
        self.stage = stage
        self.log = list(log or [])
        super().__init__(f"{stage}: {message}")
