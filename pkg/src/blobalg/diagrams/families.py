"""
Classical diagram algebras on the abacus calculus.

Temperley-Lieb diagrams are beadless planar matchings. Blob diagrams put at
most one bead L on western-exposed lines; contour diagrams put fewer than
``period`` beads on lines of exposure at most ``bound``. The blob bead plays
the role of the left wall, so its parameters are dL (double blob) and kL
(blobbed loop).
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Optional, Union

from blobalg.core.exceptions import (
    InvalidDiagramError,
    UnknownLoopClassError,
    UnsupportedFamilyError,
)
from blobalg.core.models import FamilyName
from blobalg.diagrams.diagram import (
    Diagram,
    Pair,
    Vertex,
    abacus_concat,
    exposure_levels,
    north,
    south,
)
from blobalg.diagrams.element import AlgebraElement
from blobalg.params.laurent import D, DL, KL, ONE, LaurentPoly
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)

BLOB = "L"


# =============================================================================
# Enumeration
# =============================================================================

def noncrossing_matchings(size: int) -> list[list[tuple[int, int]]]:
    """All noncrossing perfect matchings of positions 0..size-1."""
    if size % 2:
        return []

    def place(lo: int, hi: int) -> list[list[tuple[int, int]]]:
        if lo >= hi:
            return [[]]
        result = []
        for partner in range(lo + 1, hi, 2):
            for inner in place(lo + 1, partner):
                for outer in place(partner + 1, hi):
                    result.append([(lo, partner), *inner, *outer])
        return result

    return place(0, size)


def tl_diagrams(n: int) -> list[Diagram]:
    """Beadless planar diagrams on V^n_n."""

    def vertex(pos: int) -> Vertex:
        return north(pos + 1) if pos < n else south(2 * n - pos)

    diagrams = [
        Diagram.build(n, n, [(vertex(a), vertex(b)) for a, b in matching])
        for matching in noncrossing_matchings(2 * n)
    ]
    return sorted(diagrams, key=Diagram.sort_key)


def decorate(shape: Diagram, bound: int, words: tuple[str, ...]) -> list[Diagram]:
    """Every way of putting one of words on each line of exposure <= bound."""
    levels = exposure_levels(shape)
    free = [p for p in shape.pairs if levels[p] <= bound]
    result = []
    for choice in itertools.product(words, repeat=len(free)):
        result.append(shape.with_words(dict(zip(free, choice))))
    return result


def enumerate_basis(
    family: Union[FamilyName, str],
    rank: int,
    period: Optional[int] = None,
    bound: Optional[int] = None,
) -> list[Diagram]:
    """Complete duplicate-free basis in lexicographic order of the text form."""
    family = FamilyName(family)
    if rank < 0:
        raise UnsupportedFamilyError(family.value, "rank must be nonnegative")
    if family is FamilyName.TL:
        return tl_diagrams(rank)
    if family is FamilyName.BLOB:
        return ContourAlgebra(rank, 2, 0).basis()
    if family is FamilyName.CONTOUR:
        if period is None or bound is None:
            raise UnsupportedFamilyError(family.value, "period and bound are required")
        return ContourAlgebra(rank, period, bound).basis()
    raise UnsupportedFamilyError(family.value, "not a diagram-core family")


# =============================================================================
# Generators
# =============================================================================

def identity(n: int) -> Diagram:
    return Diagram.identity(n)


def u_generator(n: int, i: int) -> Diagram:
    """TL generator U_i: cup and cap at i, i+1."""
    if not 1 <= i < n:
        raise InvalidDiagramError(f"U_{i} needs 1 <= i < {n}")
    lines: list[tuple] = [(north(i), north(i + 1)), (south(i), south(i + 1))]
    lines += [(north(j), south(j)) for j in range(1, n + 1) if j not in (i, i + 1)]
    return Diagram.build(n, n, lines)


def bead_generator(n: int, i: int, letter: str = BLOB) -> Diagram:
    """Identity with a single bead on line i."""
    lines = [(north(j), south(j), letter if j == i else "") for j in range(1, n + 1)]
    return Diagram.build(n, n, lines)


def blob_generator(n: int) -> Diagram:
    """The blob e on the first line."""
    return bead_generator(n, 1)


# =============================================================================
# Blob algebra
# =============================================================================

def blob_product(a: Diagram, b: Diagram) -> tuple[LaurentPoly, Diagram]:
    """
    Structure constant and basis diagram of a*b in the blob algebra.

    A line with k blobs keeps one and contributes dL^(k-1); a plain loop gives
    d and a loop with k blobs gives dL^(k-1) * kL.
    """
    pseudo = abacus_concat(a, b)
    scalar = ONE
    lines = []
    for p in pseudo.pairs:
        if set(p.word) - {BLOB}:
            raise InvalidDiagramError(f"blob diagrams only carry '{BLOB}' beads", {"line": str(p)})
        k = len(p.word)
        if k > 1:
            scalar = scalar * DL ** (k - 1)
        lines.append(Pair(p.start, p.end, BLOB if k else ""))
    for loop in pseudo.loops:
        k = len(loop)
        scalar = scalar * (D if k == 0 else DL ** (k - 1) * KL)
    return scalar, Diagram.build(pseudo.n, pseudo.m, lines)


def blob_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a.multiply(b, blob_product)


# =============================================================================
# Contour algebras
# =============================================================================

def default_loop_rules(period: int) -> dict[int, LaurentPoly]:
    """Loop parameter by bead count mod period; period 2 matches the blob algebra."""
    rules = {0: D}
    if period == 2:
        rules[1] = KL
    return rules


@dataclass
class ContourAlgebra:
    """Contour algebra C_{n,period}(bound) with bead L satisfying L^period = 1."""

    n: int
    period: int
    bound: int
    loop_rules: Mapping[int, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.period < 2:
            raise UnsupportedFamilyError("contour", f"period must be >= 2, got {self.period}")
        if self.bound < 0:
            raise UnsupportedFamilyError("contour", f"bound must be >= 0, got {self.bound}")
        if not self.loop_rules:
            self.loop_rules = default_loop_rules(self.period)

    def basis(self) -> list[Diagram]:
        words = tuple(BLOB * k for k in range(self.period))
        result = []
        for shape in tl_diagrams(self.n):
            result.extend(decorate(shape, self.bound, words))
        return sorted(result, key=Diagram.sort_key)

    def generators(self) -> list[Diagram]:
        gens = [identity(self.n)]
        gens += [bead_generator(self.n, i) for i in range(1, min(self.bound + 1, self.n) + 1)]
        gens += [u_generator(self.n, i) for i in range(1, self.n)]
        return gens

    def _reduce_lines(self, pseudo: Diagram) -> Diagram:
        lines = [Pair(p.start, p.end, BLOB * (len(p.word) % self.period)) for p in pseudo.pairs]
        return Diagram.build(pseudo.n, pseudo.m, lines)

    def product(self, a: Diagram, b: Diagram) -> tuple[LaurentPoly, Diagram]:
        pseudo = abacus_concat(a, b)
        scalar = ONE
        for loop in pseudo.loops:
            k = len(loop) % self.period
            if k not in self.loop_rules:
                raise UnknownLoopClassError(loop)
            scalar = scalar * self.loop_rules[k]
        return scalar, self._reduce_lines(pseudo)

    def shape_product(self, a: Diagram, b: Diagram) -> Diagram:
        """Product diagram with loops discarded."""
        return self._reduce_lines(abacus_concat(a, b))

    def mul(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        return x.multiply(y, self.product)


def check_generation(n: int, period: int, bound: int) -> bool:
    """True iff right multiplication closes the generators onto the basis."""
    algebra = ContourAlgebra(n, period, bound)
    gens = algebra.generators()
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        d = frontier.pop()
        for g in gens:
            e = algebra.shape_product(d, g)
            if e not in seen:
                seen.add(e)
                frontier.append(e)
    basis = set(algebra.basis())
    logger.debug(f"contour({n},{period},{bound}): closure {len(seen)}, basis {len(basis)}")
    return seen == basis
