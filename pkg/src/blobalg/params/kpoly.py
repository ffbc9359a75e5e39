"""
K-polynomials and catalogue factorisation.

The Gram determinants of the symplectic blob algebra factor into the six
parameters and the polynomials K0, K1, K2, K3, K13 together with their images
under the commuting involutions Phi (dL <-> kL) and Psi (dR <-> kR).
``factor_against_klist`` recovers such factorisations by greedy trial division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Union

from blobalg.params.laurent import (
    D,
    DL,
    DR,
    KL,
    KLR,
    KR,
    ONE,
    PARAMS,
    LaurentPoly,
    ParamName,
)


def phi(p: LaurentPoly) -> LaurentPoly:
    """Swap dL and kL."""
    return p.swap(ParamName.DELTA_L, ParamName.KAPPA_L)


def psi(p: LaurentPoly) -> LaurentPoly:
    """Swap dR and kR."""
    return p.swap(ParamName.DELTA_R, ParamName.KAPPA_R)


class KOperator(str, Enum):
    """Operator tag applied to a base K-polynomial."""
    ID = "id"
    PHI = "Phi"
    PSI = "Psi"
    PHIPSI = "PhiPsi"

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        if self is KOperator.PHI:
            return phi(p)
        if self is KOperator.PSI:
            return psi(p)
        if self is KOperator.PHIPSI:
            return phi(psi(p))
        return p


K_BASE: dict[str, LaurentPoly] = {
    "K0": KLR,
    "K1": DL * DR - KLR,
    "K2": KLR - DL * KR - KL * DR + D * DL * DR,
    "K3": D * D * DL * DR - D * DL * KR - D * DR * KL - DL * DR + KL * KR,
    "K13": D * D * DL * DR - D * DL * KR - D * DR * KL + KL * KR - KLR,
}


@dataclass(frozen=True)
class KPolynomial:
    """A named K-polynomial with its operator tag."""

    name: str
    operator: KOperator = KOperator.ID

    def __post_init__(self) -> None:
        if self.name not in K_BASE:
            raise ValueError(f"Unknown K-polynomial '{self.name}'")

    @cached_property
    def expansion(self) -> LaurentPoly:
        return self.operator.apply(K_BASE[self.name])

    @property
    def label(self) -> str:
        if self.operator is KOperator.ID:
            return self.name
        return f"{self.operator.value}({self.name})"

    def __str__(self) -> str:
        return self.label


Factor = Union[KPolynomial, ParamName]


def factor_label(factor: Factor) -> str:
    return factor.value if isinstance(factor, ParamName) else factor.label


def factor_expansion(factor: Factor) -> LaurentPoly:
    if isinstance(factor, ParamName):
        return LaurentPoly.variable(factor)
    return factor.expansion


def _build_catalogue() -> list[KPolynomial]:
    seen = {LaurentPoly.variable(p) for p in PARAMS}
    entries = []
    for name in K_BASE:
        for op in KOperator:
            k = KPolynomial(name, op)
            if k.expansion in seen:
                continue
            seen.add(k.expansion)
            entries.append(k)
    return entries


CATALOGUE: tuple[KPolynomial, ...] = tuple(_build_catalogue())


@dataclass(frozen=True)
class Factorisation:
    """p == remainder * prod(f ** k for f, k in factors)."""

    factors: tuple[tuple[Factor, int], ...] = ()
    remainder: LaurentPoly = field(default_factory=LaurentPoly.one)

    def product(self) -> LaurentPoly:
        result = self.remainder
        for factor, power in self.factors:
            result = result * factor_expansion(factor) ** power
        return result

    def as_dict(self) -> dict[str, int]:
        return {factor_label(f): k for f, k in self.factors}

    def __str__(self) -> str:
        parts = [
            factor_label(f) if k == 1 else f"{factor_label(f)}^{k}" for f, k in self.factors
        ]
        if self.remainder != ONE or not parts:
            rem = str(self.remainder)
            parts.append(f"({rem})" if len(self.remainder) > 1 and parts else rem)
        return " * ".join(parts)


def factor_against_klist(p: LaurentPoly) -> Factorisation:
    """
    Greedy trial division against the parameters and the K catalogue.

    Parameters are extracted as the positive part of their common exponent;
    catalogue polynomials are divided out while they divide exactly.
    """
    if p.is_zero():
        return Factorisation((), p)

    factors: list[tuple[Factor, int]] = []
    remainder = p
    low = remainder.min_exponents()
    content = tuple(max(e, 0) for e in low)
    for param, power in zip(PARAMS, content):
        if power:
            factors.append((param, power))
    remainder = remainder.shift(tuple(-e for e in content))

    for k in CATALOGUE:
        power = 0
        while True:
            quotient = remainder.exact_divide(k.expansion)
            if quotient is None:
                break
            remainder = quotient
            power += 1
        if power:
            factors.append((k, power))
    return Factorisation(tuple(factors), remainder)
