"""Embracing bases and embracing exchange sequences in oriented matroids."""

from .affine import (
    AffineOracle,
    PointConfiguration,
    affine_signed_circuit,
    build_example2,
    check_general_position,
    is_zero_embracing,
    lifted_rank,
)
from .core import (
    ElementAnchor,
    ExchangeSequence,
    ExplicitOracle,
    OrientedMatroidOracle,
    SignedCircuit,
    VertexPairAnchor,
    is_embracing,
    validate_circuit_axioms,
    verify_exchange_sequence,
)
from .distance import (
    INFINITE,
    SearchOptions,
    embracing_distance,
    monotone_embracing_distance,
    symmetric_exchange_reachability,
    unoriented_distance,
)
from .graphic import (
    Digraph,
    GraphicOracle,
    build_example1,
    claim1_exchange,
    graphic_anchored_circuit,
    is_st_embracing,
    theorem2_sequence,
    tree_path,
)

__version__ = "0.1.0"

__all__ = [
    "AffineOracle",
    "Digraph",
    "ElementAnchor",
    "ExchangeSequence",
    "ExplicitOracle",
    "GraphicOracle",
    "INFINITE",
    "OrientedMatroidOracle",
    "PointConfiguration",
    "SearchOptions",
    "SignedCircuit",
    "VertexPairAnchor",
    "affine_signed_circuit",
    "build_example1",
    "build_example2",
    "check_general_position",
    "claim1_exchange",
    "embracing_distance",
    "graphic_anchored_circuit",
    "is_embracing",
    "is_st_embracing",
    "is_zero_embracing",
    "lifted_rank",
    "monotone_embracing_distance",
    "symmetric_exchange_reachability",
    "theorem2_sequence",
    "tree_path",
    "unoriented_distance",
    "validate_circuit_axioms",
    "verify_exchange_sequence",
]
