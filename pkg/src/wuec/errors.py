"""Exception hierarchy shared by every module of the package."""


class WuecError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WuecError, ValueError):
    """Malformed graph, edge set or parameter supplied by the caller."""


class InvalidEdgeError(InputError):
    """An edge id does not belong to the host graph."""


class NotAStarForest(InputError):
    """Some component of the edge set is neither a star nor a single vertex."""


class ForcedConflict(WuecError):
    """Normalisation would have to drop a forced edge."""


class CannotAttach(WuecError):
    """A trivial vertex has no neighbouring star centre to join."""


class NotAForest(InputError):
    pass


class NotAKTree(InputError):
    """Raised by k-tree recognition; ``vertex`` is where elimination got stuck."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class WrongClass(InputError):
    """The instance is outside the graph class an engine requires."""


class DegreeViolation(WuecError):
    pass


class Infeasible(WuecError):
    """The instance admits no feasible solution (e.g. an isolated vertex)."""


class BudgetExceeded(WuecError):
    """An exact search ran out of node/time budget or was cancelled."""

    def __init__(self, message, nodes_explored=0):
        super().__init__(message)
        self.nodes_explored = nodes_explored


class ParseError(InputError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
