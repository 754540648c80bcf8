"""
Cliquebound exception hierarchy
"""


class CliqueBoundException(Exception):
    """Base class for all cliquebound exceptions."""
    pass


class CommandError(CliqueBoundException):
    """CLI errors that are printed without a traceback."""
    pass


class ConfigLoadError(CliqueBoundException, ValueError):
    pass


class InvalidConfiguration(CliqueBoundException):
    pass


class GraphInputError(CliqueBoundException, ValueError):
    """A graph or generator was given arguments outside its domain."""
    pass


class Graph6ParseError(GraphInputError):
    """
    A graph6 line could not be decoded. The offset is the zero-based byte position
    in the line where decoding failed.
    """

    def __init__(self, message: str, offset: int = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class LoaderError(CliqueBoundException):
    """Errors related to corpus loaders."""
    pass


class UnsupportedLoader(LoaderError, ValueError):
    pass


class SolverError(CliqueBoundException):
    pass


class NonSymmetricMatrix(SolverError, ValueError):
    pass


class ConvergenceError(SolverError):
    pass


class SolveAborted(SolverError):
    """An exact solver ran out of its node or time budget."""
    pass


class ConsistencyError(CliqueBoundException):
    """
    A trace identity or a proven theorem failed on a computed value. This signals a
    numerical or programming bug, never bad input.
    """
    pass


class ReportError(CliqueBoundException):
    """A report could not be written or read back."""
    pass
