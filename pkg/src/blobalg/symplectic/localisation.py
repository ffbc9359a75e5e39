"""
Localisation and globalisation on periodic and blob diagrams.

Localising removes the first strand, whose northern and southern vertices
must run straight to the top and bottom 0-wall contacts; globalising inserts
such a strand. The image algebra has dL and kL interchanged, so the right
comparison of products is with ``swap_left`` applied to structure constants.
The right-wall versions use strand m and the 1-wall, interchanging dR and kR.
"""

from __future__ import annotations

from collections.abc import Callable

from blobalg.core.exceptions import NotInIdempotentSubalgebraError
from blobalg.diagrams.diagram import Diagram
from blobalg.diagrams.element import AlgebraElement
from blobalg.params.laurent import DL, DR, LaurentPoly, ParamName
from blobalg.symplectic.periodic import End, EndKind, PeriodicSymDiagram, n_end, s_end, w0, w1
from blobalg.symplectic.xdiagram import fold_nu, unfold_mux


def swap_left(p: LaurentPoly) -> LaurentPoly:
    return p.swap(ParamName.DELTA_L, ParamName.KAPPA_L)


def swap_right(p: LaurentPoly) -> LaurentPoly:
    return p.swap(ParamName.DELTA_R, ParamName.KAPPA_R)


def _remove(
    d: PeriodicSymDiagram, top: End, bottom: End, shift: Callable[[End], End]
) -> PeriodicSymDiagram:
    dropped = {top, bottom}
    lines = [(shift(u), shift(v)) for u, v in d.lines if u not in dropped and v not in dropped]
    return PeriodicSymDiagram.build(d.m - 1, lines, d.loops)


def localise(d: PeriodicSymDiagram) -> tuple[LaurentPoly, PeriodicSymDiagram]:
    """Remove strand 1 and its 0-wall contacts; the coefficient gains dL."""
    if d.m == 0 or d.k0 < 2:
        raise NotInIdempotentSubalgebraError(str(d), "no 0-wall strand to remove")
    top, bottom = w0(0), w0(d.k0 - 1)
    if d.partners[n_end(1)] != top or d.partners[s_end(1)] != bottom:
        raise NotInIdempotentSubalgebraError(str(d), "strand 1 does not meet the 0-wall")

    def shift(e: End) -> End:
        if e.kind is EndKind.WALL1:
            return e
        return End(e.kind, e.index - 1)

    return DL, _remove(d, n_end(1), s_end(1), shift)


def globalise_insert(d: PeriodicSymDiagram) -> PeriodicSymDiagram:
    """Insert a new strand 1 joined to new top and bottom 0-wall contacts."""

    def shift(e: End) -> End:
        if e.kind is EndKind.WALL1:
            return e
        return End(e.kind, e.index + 1)

    lines = [(shift(u), shift(v)) for u, v in d.lines]
    lines += [(n_end(1), w0(0)), (s_end(1), w0(d.k0 + 1))]
    return PeriodicSymDiagram.build(d.m + 1, lines, d.loops)


def localise_right(d: PeriodicSymDiagram) -> tuple[LaurentPoly, PeriodicSymDiagram]:
    """Remove strand m and its 1-wall contacts; the coefficient gains dR."""
    if d.m == 0 or d.k1 < 2:
        raise NotInIdempotentSubalgebraError(str(d), "no 1-wall strand to remove")
    top, bottom = w1(0), w1(d.k1 - 1)
    if d.partners[n_end(d.m)] != top or d.partners[s_end(d.m)] != bottom:
        raise NotInIdempotentSubalgebraError(str(d), f"strand {d.m} does not meet the 1-wall")

    def shift(e: End) -> End:
        if e.kind is EndKind.WALL1:
            return w1(e.index - 1)
        return e

    return DR, _remove(d, n_end(d.m), s_end(d.m), shift)


def globalise_insert_right(d: PeriodicSymDiagram) -> PeriodicSymDiagram:
    """Insert a new strand m+1 joined to new top and bottom 1-wall contacts."""

    def shift(e: End) -> End:
        if e.kind is EndKind.WALL1:
            return w1(e.index + 1)
        return e

    m = d.m + 1
    lines = [(shift(u), shift(v)) for u, v in d.lines]
    lines += [(n_end(m), w1(0)), (s_end(m), w1(d.k1 + 1))]
    return PeriodicSymDiagram.build(m, lines, d.loops)


def localise_element(element: AlgebraElement, right: bool = False) -> AlgebraElement:
    return element.map_basis(localise_right if right else localise)


def localise_blob_diagram(d: Diagram) -> tuple[LaurentPoly, Diagram]:
    """Localise a blob diagram through its unfolding; vertices 1 and 1' must be blobbed."""
    scalar, image = localise(unfold_mux(d))
    return scalar, fold_nu(image)


def localise_blob(element: AlgebraElement) -> AlgebraElement:
    return element.map_basis(localise_blob_diagram)
