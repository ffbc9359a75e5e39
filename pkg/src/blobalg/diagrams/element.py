"""Finite formal sums of basis diagrams with Laurent polynomial coefficients."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterator, Mapping
from typing import Generic, TypeVar

from blobalg.params.laurent import ONE, LaurentPoly

K = TypeVar("K", bound=Hashable)

Product = Callable[[K, K], tuple[LaurentPoly, K]]


class AlgebraElement(Generic[K]):
    """Immutable map basis diagram -> nonzero coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, LaurentPoly] | None = None):
        self._terms: dict[K, LaurentPoly] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, diagram: K, coeff: LaurentPoly = ONE) -> AlgebraElement[K]:
        return cls({diagram: coeff})

    @classmethod
    def zero(cls) -> AlgebraElement[K]:
        return cls()

    def items(self) -> list[tuple[K, LaurentPoly]]:
        return sorted(self._terms.items(), key=lambda kv: str(kv[0]))

    def __iter__(self) -> Iterator[tuple[K, LaurentPoly]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, diagram: K) -> LaurentPoly:
        return self._terms.get(diagram, LaurentPoly.zero())

    def support(self) -> set[K]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial_term(self) -> bool:
        """Exactly one diagram with a single-term coefficient."""
        return len(self._terms) == 1 and next(iter(self._terms.values())).is_monomial()

    def __add__(self, other: AlgebraElement[K]) -> AlgebraElement[K]:
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, LaurentPoly.zero()) + c
        return AlgebraElement(terms)

    def __neg__(self) -> AlgebraElement[K]:
        return AlgebraElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement[K]) -> AlgebraElement[K]:
        return self + (-other)

    def scale(self, coeff: LaurentPoly | int) -> AlgebraElement[K]:
        return AlgebraElement({k: c * coeff for k, c in self._terms.items()})

    def map_coefficients(self, f: Callable[[LaurentPoly], LaurentPoly]) -> AlgebraElement[K]:
        return AlgebraElement({k: f(c) for k, c in self._terms.items()})

    def map_basis(self, f: Callable[[K], tuple[LaurentPoly, K]]) -> AlgebraElement:
        """Apply a linear map given on basis diagrams as (scalar, image)."""
        terms: dict = {}
        for k, c in self._terms.items():
            scalar, image = f(k)
            terms[image] = terms.get(image, LaurentPoly.zero()) + c * scalar
        return AlgebraElement(terms)

    def multiply(
        self,
        other: AlgebraElement[K],
        product: Product,
        structure: Callable[[LaurentPoly], LaurentPoly] | None = None,
    ) -> AlgebraElement[K]:
        """
        Bilinear extension of a basis product.

        structure, if given, transforms each structure constant before it is
        combined with the coefficients.
        """
        terms: dict[K, LaurentPoly] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                scalar, d = product(a, b)
                if structure is not None:
                    scalar = structure(scalar)
                terms[d] = terms.get(d, LaurentPoly.zero()) + ca * cb * scalar
        return AlgebraElement(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})·{k}" for k, c in self.items())

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"
