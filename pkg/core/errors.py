"""
Error types shared by the graph, engine, theorem and walk modules.
"""


class FSError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(FSError, ValueError):
    """Invalid parameters or unmet theorem hypotheses."""


class CapabilityError(FSError, RuntimeError):
    """A computation would exceed the configured budget or enumeration limit."""

    def __init__(self, message, required_bytes=None):
        super().__init__(message)
        self.required_bytes = required_bytes


class ValidationError(FSError, ValueError):
    """A walk, cycle vector or anchored walk failed validation."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class MoveError(ValidationError):
    """A Coxeter move is not applicable at the requested position."""

    def __init__(self, message, positions=(), labels=()):
        super().__init__(message, step=positions[0] if positions else None)
        self.positions = tuple(positions)
        self.labels = tuple(labels)


class TheoremViolation(FSError, AssertionError):
    """An executable theorem produced a result its statement rules out."""


class ReductionInvariantError(FSError, RuntimeError):
    """The anchored-walk reduction reached a state its case analysis excludes."""

    def __init__(self, message, log=None):
        super().__init__(message)
        self.log = log
