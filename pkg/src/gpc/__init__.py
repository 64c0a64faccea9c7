"""Graph polynomials, the chain complexes refining them, and their integer
homology: chromatic and dichromatic polynomials, Potts partition functions,
Penrose-style polynomials of matched cubic graphs, and color-algebra
complexes, all with exact arithmetic."""

from .errors import (BudgetError, CapacityError, GpcError, IntegrityError,
                     ParseError, TheoryViolationError, ValidationError)
from .graphs import Multigraph, SubgraphState, catalog, components, \
    enumerate_states, parse_graph, reduce
from .poly import MultiPoly
from .linalg import SparseIntMatrix, smith_normal_form
from .complexes import GradedComplex, HomologySummary, homology

__all__ = [
    "BudgetError", "CapacityError", "GpcError", "IntegrityError",
    "ParseError", "TheoryViolationError", "ValidationError",
    "Multigraph", "SubgraphState", "catalog", "components",
    "enumerate_states", "parse_graph", "reduce",
    "MultiPoly", "SparseIntMatrix", "smith_normal_form",
    "GradedComplex", "HomologySummary", "homology",
]

__version__ = "0.1.0"
