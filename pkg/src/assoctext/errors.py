"""Exception hierarchy shared across the package."""


class AssocTextError(Exception):
    """Base class for all package errors."""


class ResourceMissingError(AssocTextError):
    """A required resource file is absent from the bundle directory."""

    def __init__(self, resource, path):
        self.resource = resource
        self.path = path
        super().__init__(f"missing resource {resource!r} (expected at {path})")


class ResourceFormatError(AssocTextError):
    """A resource file or serialized artifact failed to parse or validate."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        loc = ""
        if path is not None:
            loc = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + loc)


class CoverageError(AssocTextError):
    """A lexicon lookup hit an item the tables do not cover."""


class NodeNotFoundError(AssocTextError):
    """Queried a graph for a node it does not contain."""


class UnreachableError(AssocTextError):
    """No path exists between two graph nodes."""


class InvalidDatasetError(AssocTextError):
    """Labeled dataset violates its invariants (e.g. single class)."""


class OracleUnavailableError(AssocTextError):
    """Remote victim could not be reached within the retry policy."""


class ProtocolError(AssocTextError):
    """Remote victim answered with a malformed payload."""


class IncompatibleModelError(AssocTextError):
    """Model file has a version this build cannot load."""


class NoCandidatesError(AssocTextError):
    """No substitution target has any associative candidates."""

    def __init__(self, message="no target position has candidates", queries=0):
        self.queries = queries
        super().__init__(message)


class InvalidPositionError(AssocTextError):
    """A swarm position without substitutions cannot be scored."""


class UndefinedDistanceError(AssocTextError):
    """Transport distance undefined: one side has no embeddable token."""


class InvalidEvaluationError(AssocTextError):
    """Evaluation inputs are degenerate (e.g. empty perturbed set)."""
