"""Domain-error type shared across the pipeline."""

from __future__ import annotations


class DomainError(Exception):
    """A mathematical-contract violation (CLI exit code 2).

    Carries the citation string of the result whose hypothesis failed, and
    optionally the offending object (e.g. a common factor).
    """

    def __init__(self, message: str, citation: str | None = None, payload=None):
        self.citation = citation
        self.payload = payload
        super().__init__(message if citation is None else f"{message} [{citation}]")
