"""Exceptions raised by the quantumgraphs package."""

from __future__ import annotations


class QuantumGraphsError(Exception):
    """Base class for every error raised by this package."""


class GraphValidationError(QuantumGraphsError, ValueError):
    """Raised when a graph, vertex or weight violates a graph invariant."""


class GraphFormatError(GraphValidationError):
    """Raised when a graph file cannot be parsed.

    Inherits from GraphValidationError so callers that only care about bad
    input can catch a single type.
    """


class EmptyCandidateSetError(QuantumGraphsError, ValueError):
    """Raised when a minimum or maximum is requested over no candidates."""


class OracleLimitError(QuantumGraphsError, ValueError):
    """Raised when an exhaustive oracle is asked for a graph that is too large."""


class RunConfigError(QuantumGraphsError, ValueError):
    """Raised when an experiment configuration is invalid."""


class FitError(QuantumGraphsError, ValueError):
    """Raised when an exponent fit does not have enough distinct sizes."""
