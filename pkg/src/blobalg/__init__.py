"""
blobalg - exact diagram calculus for Temperley-Lieb type algebras

Structure constants, bases, standard modules and Gram determinants for the
Temperley-Lieb, blob, contour and symplectic blob algebras, computed exactly
over a six-parameter Laurent polynomial ring.
"""

__version__ = "0.3.0"
__license__ = "Apache-2.0"

__all__ = [
    "__version__",
]
