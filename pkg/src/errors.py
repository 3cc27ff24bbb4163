class GraphError(ValueError):
    """Raised when an edit or query violates a graph precondition"""


class Graph6ParseError(GraphError):
    """Malformed graph6 input; `offset` is the byte position of the fault"""

    def __init__(self, message, offset, line=None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}: byte {offset}"
        super().__init__(f"{where}: {message}")


class CatalogError(RuntimeError):
    """An oracle-defined catalog graph is missing or not unique"""


class ChainError(RuntimeError):
    """A 4-connected graph outside C and L had no 4-connected contraction"""


class ClassificationError(RuntimeError):
    """A non-Hamiltonian input matched none of the known exception classes"""
