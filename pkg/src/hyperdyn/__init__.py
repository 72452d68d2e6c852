"""hyperdyn: exact dynamics of induced maps on hyperspaces of graph subcontinua."""

from .continua import (
    Continuum,
    diameter,
    dist_point_to_set,
    hausdorff_distance,
    neighborhood,
)
from .graphs import Graph, PointOnGraph, build_graph

__version__ = "0.1.0"

__all__ = [
    "Continuum",
    "Graph",
    "PointOnGraph",
    "build_graph",
    "diameter",
    "dist_point_to_set",
    "hausdorff_distance",
    "neighborhood",
    "__version__",
]
