"""Exception hierarchy shared across the toolkit."""


class RoadTriageError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRoadError(RoadTriageError):
    """A road test violates a geometric precondition (degenerate points,
    self-intersecting polygon, too-tight turn, ...)."""


class InvalidDataError(RoadTriageError):
    """Malformed or non-finite input data (files, CSV rows, feature arrays)."""


class InvalidConfigError(RoadTriageError):
    """A configuration object violates its invariants."""


class GenerationExhaustedError(RoadTriageError):
    """The rejection-sampling budget ran out before enough valid roads
    were produced."""


class DegenerateTrainingError(RoadTriageError):
    """Training data contains a single class; no classifier can be fit."""


class UnsupportedModelError(RoadTriageError):
    """An operation was requested for a model family that does not support
    it (e.g. impurity importance on a non-tree model)."""


class UsageError(RoadTriageError):
    """Bad command-line usage (maps to exit code 1)."""
