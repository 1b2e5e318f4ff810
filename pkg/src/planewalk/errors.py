"""Exception hierarchy for planewalk."""


class PlanewalkError(Exception):
    """Base class for all errors raised by the package."""


class SemanticError(PlanewalkError):
    """Input is well-formed but violates an invariant."""


class GraphError(SemanticError):
    pass


class LoopEdge(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class CoincidentCoordinates(GraphError):
    pass


class CoincidentDirections(GraphError):
    pass


class RotationCoordMismatch(GraphError):
    pass


class NonPlanarRotation(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class WalkError(SemanticError):
    pass


class NotAWalk(WalkError):
    pass


class DegenerateClosed(WalkError):
    pass


class ZeroLengthInput(SemanticError):
    pass


class InputSyntaxError(PlanewalkError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class TransversalPresent(PlanewalkError):
    def __init__(self, level, witness=None):
        self.level = level
        self.witness = witness
        super().__init__(f"transversal self-intersection at derivative level {level}")


class IterationCapExceeded(PlanewalkError):
    """Derivative tower did not stabilise within the theoretical bound (a bug)."""


class AmbientMismatch(PlanewalkError):
    pass


class NoCoordinates(PlanewalkError):
    pass


class GenericityExhausted(PlanewalkError):
    pass


class BudgetExceeded(PlanewalkError):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"search budget of {bound} partial assignments exceeded")
