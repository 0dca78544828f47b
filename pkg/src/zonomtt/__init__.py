"""Exact zonotope volumes, cocircuit lattices and matrix-tree checks for regular matroids."""

from .errors import (
    DimensionError,
    InstanceTooLarge,
    InvariantViolation,
    NotUnimodularError,
    SingularMatrixError,
    ZonoMTTError,
)
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    incidence_matrix,
    laplacian,
    path_graph,
    reduced_incidence,
    spanning_tree_count,
    weighted_tree_sum,
)
from .lattice import Lattice, hnf, lattices_equal, normalized_volume
from .linalg import char_poly, det, product_nonzero_eigenvalues
from .matroid import RepMatroid, SignVector, is_totally_unimodular, is_unimodular
from .theorems import CheckReport, THEOREM_IDS
from .zonotope import Rearrangement, Zonotope, contains, facet_barycenter_matrix, volume

__version__ = "0.1.0"
