"""
Left-right symmetric Temperley-Lieb diagrams on 2m strands.

Unfolding a blob diagram in its left wall gives a diagram symmetric about
the axis between strands m and m+1. Products close loops of three kinds:
mirror pairs of off-axis loops (one d per pair), and loops astride the axis,
which are white (dL) or black (kL) according to the parity of their upper
axis crossing counted from the top of the stacked picture.
"""

from __future__ import annotations

from blobalg.core.exceptions import InvalidDiagramError, NotInIdempotentSubalgebraError
from blobalg.diagrams.diagram import Diagram, Pair, Vertex, abacus_concat
from blobalg.diagrams.element import AlgebraElement
from blobalg.diagrams.families import BLOB, tl_diagrams
from blobalg.params.laurent import D, DL, KL, ONE, LaurentPoly
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)


def fold_blob_mu(d: Diagram) -> Diagram:
    """
    Unfold a blob diagram on n strands into a symmetric diagram on 2n.

    Vertex k has images n+k and n+1-k; a plain line maps to its two mirror
    images, a blobbed line to the two arcs across the axis.
    """
    if d.n != d.m or d.loops:
        raise InvalidDiagramError("expected a blob basis diagram", {"diagram": str(d)})
    n = d.n

    def right(v: Vertex) -> Vertex:
        return Vertex(n + v.index, v.primed)

    def left(v: Vertex) -> Vertex:
        return Vertex(n + 1 - v.index, v.primed)

    lines = []
    for p in d.pairs:
        if p.word == BLOB:
            lines += [(right(p.start), left(p.start)), (right(p.end), left(p.end))]
        elif not p.word:
            lines += [(right(p.start), right(p.end)), (left(p.start), left(p.end))]
        else:
            raise InvalidDiagramError(f"blob lines carry at most one {BLOB}", {"line": str(p)})
    return Diagram.build(2 * n, 2 * n, lines)


def is_symmetric(d: Diagram) -> bool:
    return (
        d.n == d.m
        and d.n % 2 == 0
        and d.is_beadless
        and not d.loops
        and d.mirror() == d
    )


def enumerate_bprime(m: int) -> list[Diagram]:
    """Symmetric diagrams on 2m strands."""
    return [d for d in tl_diagrams(2 * m) if d.mirror() == d]


def _check(d: Diagram) -> int:
    if d.n % 2:
        raise InvalidDiagramError("symmetric diagrams need an even number of strands", {"n": d.n})
    if not is_symmetric(d):
        raise InvalidDiagramError("diagram is not left-right symmetric", {"diagram": str(d)})
    return d.n // 2


def _axis_arcs(d: Diagram, m: int, primed: bool, inner_first: bool) -> list[Pair]:
    arcs = [
        p
        for p in d.pairs
        if p.start.primed == primed
        and p.end.primed == primed
        and min(p.start.index, p.end.index) <= m < max(p.start.index, p.end.index)
    ]
    arcs.sort(key=lambda p: min(p.start.index, p.end.index), reverse=inner_first)
    return arcs


def bprime_product(a: Diagram, b: Diagram) -> tuple[LaurentPoly, Diagram]:
    """Structure constant and diagram of a*b in the symmetric algebra."""
    m = _check(a)
    if _check(b) != m:
        raise InvalidDiagramError("ranks differ", {"a": a.n, "b": b.n})

    order = (
        [(0, p) for p in _axis_arcs(a, m, primed=False, inner_first=True)]
        + [(0, p) for p in _axis_arcs(a, m, primed=True, inner_first=False)]
        + [(1, p) for p in _axis_arcs(b, m, primed=False, inner_first=True)]
    )
    crossing = {arc: i for i, arc in enumerate(order)}

    white = black = off_axis = 0
    seen: set[int] = set()
    for k in range(1, 2 * m + 1):
        if k in seen:
            continue
        component, arcs, closed = [k], set(), True
        seen.add(k)
        while component:
            j = component.pop()
            for layer, diagram, v in ((0, a, Vertex(j, True)), (1, b, Vertex(j))):
                w, _ = diagram.partners[v]
                if w.primed != v.primed:
                    closed = False
                    continue
                arcs.add((layer, diagram.pair_at(v)))
                if w.index not in seen:
                    seen.add(w.index)
                    component.append(w.index)
        if not closed:
            continue
        indices = [crossing[arc] for arc in arcs if arc in crossing]
        if not indices:
            off_axis += 1
        elif min(indices) % 2:
            white += 1
        else:
            black += 1

    scalar = ONE
    for param, count in ((D, off_axis // 2), (DL, white), (KL, black)):
        if count:
            scalar = scalar * param ** count
    return scalar, abacus_concat(a, b).underlying()


def compose_bprime(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a.multiply(b, bprime_product)


def _localise_central(d: Diagram) -> tuple[LaurentPoly, Diagram]:
    m = _check(d)
    if m == 0:
        raise NotInIdempotentSubalgebraError(str(d), "no strands to remove")
    cup, cap = Vertex(m), Vertex(m, True)
    if d.partners[cup][0] != Vertex(m + 1) or d.partners[cap][0] != Vertex(m + 1, True):
        raise NotInIdempotentSubalgebraError(str(d), "missing the central cup or cap")

    def shift(v: Vertex) -> Vertex:
        return v.shifted(-2) if v.index > m + 1 else v

    lines = [(shift(p.start), shift(p.end)) for p in d.pairs if p.start not in (cup, cap)]
    return DL, Diagram.build(2 * m - 2, 2 * m - 2, lines)


def localise_bprime(element: AlgebraElement) -> AlgebraElement:
    """Remove the central cup and cap from every term; coefficients gain dL."""
    return element.map_basis(_localise_central)
