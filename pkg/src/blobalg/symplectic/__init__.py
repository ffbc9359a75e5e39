"""
The symplectic blob algebra: periodic wall diagrams, left-right blob
diagrams, the symmetric algebra on 2m strands, and localisation.
"""

from blobalg.symplectic.localisation import (
    globalise_insert,
    globalise_insert_right,
    localise,
    localise_blob,
    localise_element,
    localise_right,
    swap_left,
    swap_right,
)
from blobalg.symplectic.periodic import (
    End,
    FeatureCount,
    PeriodicSymDiagram,
    compose_features,
    compose_phi,
    enumerate_phi,
    glue,
    halves,
    reduce_features,
    stack,
)
from blobalg.symplectic.symmetric import (
    bprime_product,
    compose_bprime,
    enumerate_bprime,
    fold_blob_mu,
    is_symmetric,
    localise_bprime,
)
from blobalg.symplectic.xdiagram import (
    compose_x,
    enumerate_Bx,
    enumerate_Bx_prime,
    find_noninjectivity_witness,
    fold_nu,
    mirror_x,
    rectangular_reduce,
    unfold_mux,
    x_product,
)

__all__ = [
    "globalise_insert",
    "globalise_insert_right",
    "localise",
    "localise_blob",
    "localise_element",
    "localise_right",
    "swap_left",
    "swap_right",
    "End",
    "FeatureCount",
    "PeriodicSymDiagram",
    "compose_features",
    "compose_phi",
    "enumerate_phi",
    "glue",
    "halves",
    "reduce_features",
    "stack",
    "bprime_product",
    "compose_bprime",
    "enumerate_bprime",
    "fold_blob_mu",
    "is_symmetric",
    "localise_bprime",
    "compose_x",
    "enumerate_Bx",
    "enumerate_Bx_prime",
    "find_noninjectivity_witness",
    "fold_nu",
    "mirror_x",
    "rectangular_reduce",
    "unfold_mux",
    "x_product",
]
