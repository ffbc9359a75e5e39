"""
Beaded pair partitions, the abacus product, and the classical diagram algebras.
"""

from blobalg.diagrams.diagram import (
    Diagram,
    Pair,
    Vertex,
    abacus_concat,
    canonical_loop,
    exposure_levels,
    is_planar,
    north,
    scalar_reduce,
    south,
)
from blobalg.diagrams.element import AlgebraElement
from blobalg.diagrams.families import (
    ContourAlgebra,
    bead_generator,
    blob_generator,
    blob_mul,
    blob_product,
    check_generation,
    enumerate_basis,
    u_generator,
)
from blobalg.diagrams.presentation import PresentationReport, RelationSet, verify_presentation

__all__ = [
    "Diagram",
    "Pair",
    "Vertex",
    "abacus_concat",
    "canonical_loop",
    "exposure_levels",
    "is_planar",
    "north",
    "scalar_reduce",
    "south",
    "AlgebraElement",
    "ContourAlgebra",
    "bead_generator",
    "blob_generator",
    "blob_mul",
    "blob_product",
    "check_generation",
    "enumerate_basis",
    "u_generator",
    "PresentationReport",
    "RelationSet",
    "verify_presentation",
]
