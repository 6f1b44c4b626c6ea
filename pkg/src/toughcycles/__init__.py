"""Exact graph analysis around toughness, hamiltonian cycles and
(P2 u kP1)-free graphs: invariants with witnesses, theorem-preset
verification, longest-cycle proof replay, and counterexample search."""

from .errors import Graph6Error, ResourceLimitError
from .graph import Graph, parse_graph6, write_graph6
from .cycles import Cycle
from ._kernels import NUMBA_ENABLED

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Cycle",
    "Graph6Error",
    "ResourceLimitError",
    "parse_graph6",
    "write_graph6",
    "NUMBA_ENABLED",
    "__version__",
]
