"""
The scalar ring: Laurent polynomials in the six parameters and the K catalogue.
"""

from blobalg.params.kpoly import (
    CATALOGUE,
    Factorisation,
    KOperator,
    KPolynomial,
    factor_against_klist,
    phi,
    psi,
)
from blobalg.params.laurent import (
    PARAMS,
    LaurentPoly,
    ParamName,
    evaluate,
    poly_mul,
    resolve_param,
)

__all__ = [
    "PARAMS",
    "LaurentPoly",
    "ParamName",
    "evaluate",
    "poly_mul",
    "resolve_param",
    "CATALOGUE",
    "Factorisation",
    "KOperator",
    "KPolynomial",
    "factor_against_klist",
    "phi",
    "psi",
]
