"""
Gram matrices of the standard modules and their determinants.

For kets a, b of weight l and a fixed reference ket r, the product
|r><a| * |b><r| is <a|b> |r><r| when no propagating line is lost and
lies in a lower ideal otherwise (entry 0). For l = 0 the reference choice
moves an overall power of kLR; the lower power is used.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Union

from blobalg.core.exceptions import UnboundParameterError, ZeroParameterError
from blobalg.core.models import FactorModel, GramReportModel
from blobalg.params.kpoly import (
    Factorisation,
    KOperator,
    KPolynomial,
    factor_against_klist,
    factor_label,
)
from blobalg.params.laurent import ONE, PARAMS, ZERO, LaurentPoly, ParamName, resolve_param
from blobalg.reptheory.turnstrings import TurnString, check_weight, standard_basis, weights
from blobalg.symplectic.periodic import compose_phi, glue, ket_profile
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)

Matrix = list[list[LaurentPoly]]
Point = Mapping[Union[str, ParamName], Union[int, Fraction, str]]


# =============================================================================
# Exact linear algebra
# =============================================================================

def determinant(matrix: Matrix) -> LaurentPoly:
    """Fraction-free (Bareiss) elimination with row swaps; every division is exact."""
    n = len(matrix)
    if n == 0:
        return ONE
    rows = [list(row) for row in matrix]
    sign = 1
    previous = ONE
    for k in range(n - 1):
        if rows[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not rows[i][k].is_zero()), None)
            if pivot is None:
                return ZERO
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                quotient = numerator.exact_divide(previous)
                if quotient is None:
                    raise ArithmeticError(f"inexact division by {previous} at pivot {k}")
                rows[i][j] = quotient
        previous = rows[k][k]
    result = rows[n - 1][n - 1]
    return -result if sign < 0 else result


def evaluate_matrix(matrix: Matrix, point: Point) -> list[list[Fraction]]:
    return [[entry.evaluate(point) for entry in row] for row in matrix]


def _eliminate(rows: list[list[Fraction]]) -> tuple[int, Fraction]:
    """Rank and determinant (square input) by Gaussian elimination over Q."""
    rows = [list(row) for row in rows]
    size = len(rows[0]) if rows else 0
    rank, det = 0, Fraction(1)
    for col in range(size):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            det = Fraction(0)
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            det = -det
        det *= rows[rank][col]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col] / rows[rank][col]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank, det


def evaluated_rank(matrix: Matrix, point: Point) -> int:
    return _eliminate(evaluate_matrix(matrix, point))[0] if matrix else 0


def evaluated_determinant(matrix: Matrix, point: Point) -> Fraction:
    return _eliminate(evaluate_matrix(matrix, point))[1] if matrix else Fraction(1)


# =============================================================================
# Gram matrices
# =============================================================================

def _pairing(ref: str, a: str, b: str) -> LaurentPoly:
    scalar, result = compose_phi(glue(ref, a), glue(b, ref))
    return scalar if result == glue(ref, ref) else ZERO


def _matrix(ref: str, kets: list[str]) -> Matrix:
    return [[_pairing(ref, a, b) for b in kets] for a in kets]


def _klr_floor(matrix: Matrix) -> int:
    degrees = [e.min_degree(ParamName.KAPPA_LR) for row in matrix for e in row if not e.is_zero()]
    return min(degrees, default=0)


@dataclass
class GramReport:
    """Gram matrix of one standard module with its determinant."""

    m: int
    weight: int
    basis: list[TurnString]
    matrix: Matrix = field(repr=False)
    reference: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @cached_property
    def determinant(self) -> LaurentPoly:
        return determinant(self.matrix)

    @cached_property
    def factorisation(self) -> Factorisation:
        return factor_against_klist(self.determinant)

    def rank_at(self, point: Point) -> int:
        return evaluated_rank(self.matrix, point)

    def to_model(self) -> GramReportModel:
        fact = self.factorisation
        return GramReportModel(
            m=self.m,
            weight=self.weight,
            dimension=self.dimension,
            basis=[str(t) for t in self.basis],
            matrix=[[str(e) for e in row] for row in self.matrix],
            determinant=str(self.determinant),
            factors=[FactorModel(factor=factor_label(f), multiplicity=k) for f, k in fact.factors],
            remainder=str(fact.remainder),
        )


@lru_cache(maxsize=None)
def gram_matrix(m: int, l: int) -> GramReport:
    """
    Gram matrix of S_l(2m) in the standard basis order.

    Rows are bras, columns kets; entry (a, b) is <a|b>.
    """
    check_weight(m, l)
    basis = standard_basis(m, l)
    kets = [t.to_ket() for t in basis]
    if l != 0:
        ref = kets[0]
        report = GramReport(m, l, basis, _matrix(ref, kets), ref)
    else:
        even = next(k for k in kets if ket_profile(k).ur0 % 2 == 0)
        odd = next((k for k in kets if ket_profile(k).ur0 % 2 == 1), None)
        ref, matrix = even, _matrix(even, kets)
        if odd is not None:
            alternative = _matrix(odd, kets)
            if _klr_floor(alternative) < _klr_floor(matrix):
                ref, matrix = odd, alternative
        report = GramReport(m, l, basis, matrix, ref)
    logger.debug(f"Gram matrix m={m} l={l}: dimension {report.dimension}, reference {ref!r}")
    return report


# =============================================================================
# Semisimplicity
# =============================================================================

def applicable_conditions(m: int) -> list[KPolynomial]:
    """K-manifolds whose vanishing breaks semisimplicity at this rank."""
    if m < 3:
        return []
    if m % 2:
        ops = [KOperator.ID] + ([KOperator.PHIPSI] if m >= 5 else [])
    else:
        ops = [KOperator.PHI, KOperator.PSI] if m >= 4 else []
    return [KPolynomial(name, op) for op in ops for name in ("K3", "K13")]


@dataclass
class ScanReport:
    """Determinant values and K-conditions at one parameter point."""

    m: int
    point: dict[str, Fraction]
    determinants: dict[int, Fraction]
    conditions: dict[str, bool]

    @property
    def singular_weights(self) -> list[int]:
        return [l for l, value in self.determinants.items() if value == 0]

    @property
    def semisimple(self) -> bool:
        return not self.singular_weights


def _check_point(point: Point) -> dict[ParamName, Fraction]:
    values = {resolve_param(k): Fraction(v) for k, v in point.items()}
    for param in PARAMS:
        if param not in values:
            raise UnboundParameterError(param.value)
    zeros = [p.value for p in PARAMS if values[p] == 0]
    if zeros:
        raise ZeroParameterError(zeros)
    return values


def semisimplicity_scan(m: int, point: Point, ranks: Optional[list[int]] = None) -> ScanReport:
    """Evaluate every Gram determinant of rank m at a point with unit parameters."""
    values = _check_point(point)
    dets = {l: gram_matrix(m, l).determinant.evaluate(values) for l in (ranks or weights(m))}
    conditions = {k.label: k.expansion.evaluate(values) == 0 for k in applicable_conditions(m)}
    report = ScanReport(m, {p.value: v for p, v in values.items()}, dets, conditions)
    logger.info(
        f"scan m={m}: singular weights {report.singular_weights or 'none'}, "
        f"vanishing K {[k for k, hit in conditions.items() if hit] or 'none'}"
    )
    return report
