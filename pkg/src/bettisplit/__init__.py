"""Graded Betti numbers of edge and facet ideals by splitting recursions,
checked against a Hochster-formula oracle."""

from .betti import (
    betti_k1d,
    edge_split_betti,
    facet_split_betti,
    forest_betti,
    has_linear_resolution,
    linear_strand_no_C4,
    n2p_max,
    pure_forest_linear_strand,
    reg_and_pd_forest,
    reg_forest_via_matching,
    reg_pd_lower_bounds,
    simplicial_forest_betti,
    tensor_combine,
    vertex_split_betti,
)
from .complex import SimplicialComplex, is_simplicial_forest
from .errors import BettiSplitError, InputError, PreconditionError, ResourceError
from .graph import Graph
from .ideal import MonomialIdeal, edge_ideal, facet_ideal, intersect
from .oracle import GF2, QQ, FieldSpec, betti_oracle, calibrate
from .splitting import verify_splitting
from .table import BettiTable

__all__ = [
    "BettiSplitError", "BettiTable", "FieldSpec", "GF2", "Graph", "InputError",
    "MonomialIdeal", "PreconditionError", "QQ", "ResourceError", "SimplicialComplex",
    "betti_k1d", "betti_oracle", "calibrate", "edge_ideal", "edge_split_betti",
    "facet_ideal", "facet_split_betti", "forest_betti", "has_linear_resolution",
    "intersect", "is_simplicial_forest", "linear_strand_no_C4", "n2p_max",
    "pure_forest_linear_strand", "reg_and_pd_forest", "reg_forest_via_matching",
    "reg_pd_lower_bounds", "simplicial_forest_betti", "tensor_combine",
    "verify_splitting", "vertex_split_betti",
]
