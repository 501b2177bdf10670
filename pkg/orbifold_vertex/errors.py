class OrbifoldVertexError(Exception):
    """
    Base class for every error raised while computing vertices, running checks or gluing web diagrams.

    Attributes:
        witness (dict): Machine-readable description of the inputs (and the first mismatch, for failed checks)
    """

    def __init__(self,message,witness=None):
        super().__init__(message)
        self.witness = {} if witness is None else witness


class EmptyPartition(OrbifoldVertexError): pass
class CellOutOfShape(OrbifoldVertexError): pass
class InconsistentDerivation(OrbifoldVertexError): pass # Maya-diagram and closed-form r/c/rc disagree

class VarTableMismatch(OrbifoldVertexError): pass
class NotAUnit(OrbifoldVertexError): pass
class NonConvergent(OrbifoldVertexError): pass

class PatchTooSmall(OrbifoldVertexError): pass
class Unstable(OrbifoldVertexError): pass

class OutOfValidity(OrbifoldVertexError): pass
class MethodsDisagree(OrbifoldVertexError): pass # closed formula, enumeration or DT ratio
class LemmaViolated(OrbifoldVertexError): pass
class RecurrenceViolated(OrbifoldVertexError): pass

class InvalidDiagram(OrbifoldVertexError): pass
