"""
Generator-and-relation checks for the blob and affine-C diagram algebras.

Relations are words in the generator names U1..U{n-1}, e and f; each is
checked as an identity of AlgebraElements under the diagram product. The
Hecke parameters enter only through the identifications dL = q0 + 1/q0 and
kL = (q0^2 + q^2)/(q0 q) (and their right-wall mirrors), so the checks are
stated directly in dL, kL, dR, kR and kLR.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

from blobalg.core.exceptions import UnsupportedFamilyError
from blobalg.diagrams.diagram import Diagram
from blobalg.diagrams.element import AlgebraElement, Product
from blobalg.diagrams.families import bead_generator, blob_product, identity, u_generator
from blobalg.params.laurent import D, DL, DR, KL, KLR, KR, ONE, LaurentPoly
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)

MAX_PRESENTATION_RANK = 6


class RelationSet(str, Enum):
    """Named relation families."""
    TLB = "TLb"
    AFFINE_C = "affineC"


@dataclass(frozen=True)
class Relation:
    """lhs = scalar * rhs, both sides words in generator names."""

    name: str
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    scalar: LaurentPoly = ONE

    def __str__(self) -> str:
        left = "".join(self.lhs) or "1"
        right = "".join(self.rhs) or "1"
        return f"{left} = {right}" if self.scalar == ONE else f"{left} = ({self.scalar}) {right}"


@dataclass
class RelationResult:
    relation: Relation
    passed: bool
    lhs: str
    rhs: str


@dataclass
class PresentationReport:
    """Pass/fail of every relation checked at one rank."""

    relations: RelationSet
    n: int
    results: list[RelationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[str]:
        return [f"{r.relation.name}: {r.relation}" for r in self.results if not r.passed]


def _u(i: int) -> str:
    return f"U{i}"


def tlb_relations(n: int) -> list[Relation]:
    """The blob relations together with the symmetriser identity."""
    rels = []
    for i in range(1, n):
        rels.append(Relation("TL001", (_u(i), _u(i)), (_u(i),), D))
    for i in range(1, n - 1):
        rels.append(Relation("TL002", (_u(i), _u(i + 1), _u(i)), (_u(i),)))
        rels.append(Relation("TL002", (_u(i + 1), _u(i), _u(i + 1)), (_u(i + 1),)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation("TL003", (_u(i), _u(j)), (_u(j), _u(i))))
    if n >= 2:
        rels.append(Relation("TL004", ("U1", "e", "U1"), ("U1",), KL))
    rels.append(Relation("TL005", ("e", "e"), ("e",), DL))
    for i in range(2, n):
        rels.append(Relation("TL006", (_u(i), "e"), ("e", _u(i))))
    if n >= 2:
        rels.append(Relation("SYM-L", ("e", "U1", "e", "U1"), ("e", "U1"), KL))
    return rels


def _topological(n: int) -> list[Relation]:
    if n == 1:
        return [
            Relation("TOP", ("e", "f", "e"), ("e",), KLR),
            Relation("TOP", ("f", "e", "f"), ("f",), KLR),
        ]
    odd = tuple(_u(i) for i in range(1, n, 2))
    even = tuple(_u(i) for i in range(2, n, 2))
    if n % 2 == 0:
        big_i, big_j = odd, ("e", *even, "f")
    else:
        big_i, big_j = ("e", *even), (*odd, "f")
    return [Relation("TOP", (*big_i, *big_j, *big_i), big_i, KLR)]


def affine_c_relations(n: int) -> list[Relation]:
    """TLb relations, their right-wall mirrors for f, and the topological relation."""
    rels = tlb_relations(n)
    last = _u(n - 1)
    rels.append(Relation("TL005-R", ("f", "f"), ("f",), DR))
    if n >= 2:
        rels.append(Relation("TL004-R", (last, "f", last), (last,), KR))
        rels.append(Relation("SYM-R", ("f", last, "f", last), ("f", last), KR))
        rels.append(Relation("EF", ("e", "f"), ("f", "e")))
    for i in range(1, n - 1):
        rels.append(Relation("TL006-R", (_u(i), "f"), ("f", _u(i))))
    rels.extend(_topological(n))
    return rels


def _generator_table(n: int, right_wall: bool) -> dict[str, Diagram]:
    table = {_u(i): u_generator(n, i) for i in range(1, n)}
    table["e"] = bead_generator(n, 1, "L")
    if right_wall:
        table["f"] = bead_generator(n, n, "R")
    return table


def evaluate_word(
    word: tuple[str, ...],
    generators: dict[str, Diagram],
    product: Product,
    n: int,
) -> AlgebraElement:
    """The product of the named generators, left to right."""
    result = AlgebraElement.basis(identity(n))
    for name in word:
        result = result.multiply(AlgebraElement.basis(generators[name]), product)
    return result


def _x_product() -> Callable[[Diagram, Diagram], tuple[LaurentPoly, Diagram]]:
    # symplectic imports diagram-core, so resolve it at call time
    from blobalg.symplectic.xdiagram import x_product

    return x_product


def verify_presentation(relations: Union[RelationSet, str], n: int) -> PresentationReport:
    """Check every relation of the named family at rank n."""
    relations = RelationSet(relations)
    if not 1 <= n <= MAX_PRESENTATION_RANK:
        raise UnsupportedFamilyError(relations.value, f"rank must be in 1..{MAX_PRESENTATION_RANK}")

    if relations is RelationSet.TLB:
        rels, product = tlb_relations(n), blob_product
        generators = _generator_table(n, right_wall=False)
    else:
        rels, product = affine_c_relations(n), _x_product()
        generators = _generator_table(n, right_wall=True)

    report = PresentationReport(relations, n)
    for rel in rels:
        lhs = evaluate_word(rel.lhs, generators, product, n)
        rhs = evaluate_word(rel.rhs, generators, product, n).scale(rel.scalar)
        report.results.append(RelationResult(rel, lhs == rhs, str(lhs), str(rhs)))

    logger.info(
        f"{relations.value} n={n}: {len(report.results)} relations, "
        f"{len(report.failures)} failed"
    )
    return report
