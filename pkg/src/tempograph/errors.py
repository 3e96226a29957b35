"""Error hierarchy shared by the library, the CLI, and the HTTP service.

Every error carries a stable machine-readable ``code`` so the CLI and the
service can map failures to the same wire-level categories without
inspecting exception types.
"""
from __future__ import annotations


class TempographError(Exception):
    """Base class for all expected failures."""

    code = "contract_error"

    def __init__(self, message: str, *, detail: object = None):
        super().__init__(message)
        self.message = message
        self.detail = detail


class ContractError(TempographError):
    """A caller broke an operation precondition (bad interval, k <= 0, ...)."""

    code = "contract_error"


class DomainError(TempographError):
    """A time point or interval falls outside the graph's time domain."""

    code = "domain_error"


class SchemaError(TempographError):
    """Attribute names, kinds, or values disagree with the declared schema."""

    code = "schema_error"


class ReferentialError(SchemaError):
    """An element references another element that does not exist."""

    code = "schema_error"


class ParseError(TempographError):
    """An input file could not be parsed.  ``line`` is 1-based when known."""

    code = "parse_error"

    def __init__(self, message: str, *, line: int | None = None, detail: object = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, detail=detail)
        self.line = line


class NotFoundError(TempographError):
    """A named dataset (or similar registry entry) does not exist."""

    code = "not_found"


class CacheIntegrityError(ParseError):
    """A cache file is corrupt; no partial graph is ever returned."""


class CacheVersionError(ParseError):
    """A cache file was written by an incompatible format version."""
