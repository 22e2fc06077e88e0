"""Independence polynomials and the degree of the h-polynomial of edge ideals."""

from .engine import IndependenceProfile, indpoly
from .graph import Graph, GraphError
from .hilbert import DegreeReport, degree_report

__all__ = ["DegreeReport", "Graph", "GraphError", "IndependenceProfile", "degree_report", "indpoly"]
__version__ = "0.1.0"
