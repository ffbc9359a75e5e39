"""
Left-right blob diagrams and the fold/unfold maps to periodic diagrams.

An x-diagram is a planar diagram on V^m_m whose lines carry words over
{L, R}: L records a visit to the 0-wall (west edge), R a visit to the
1-wall (east edge). ``unfold_mux`` turns every bead into a pair of wall
contacts on the strip; ``fold_nu`` joins consecutive wall contacts back into
beads. Products are computed on the periodic side and folded back.

An independent rewriting oracle reduces x-pseudodiagrams directly:
LL -> dL L, RR -> dR R, LRL -> kLR L, RLR -> kLR R on lines, the same on
loops (doubled beads first) ending in d, kL, kR or kLR, and the topological
relation via fold, belt stripping and unfold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from blobalg.core.exceptions import InvalidDiagramError
from blobalg.diagrams.diagram import Diagram, Pair, Vertex, abacus_concat, boundary_position
from blobalg.diagrams.element import AlgebraElement
from blobalg.diagrams.families import tl_diagrams
from blobalg.params.laurent import D, DL, DR, KL, KLR, KR, ONE, LaurentPoly
from blobalg.symplectic.periodic import (
    End,
    EndKind,
    PeriodicSymDiagram,
    compose_phi,
    enumerate_phi,
    n_end,
    reduce_features,
    s_end,
    stack,
    w0,
    w1,
)
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)

LEFT, RIGHT = "L", "R"
REDUCED_WORDS = ("", "L", "R", "LR", "RL")


def _end(v: Vertex) -> End:
    return s_end(v.index) if v.primed else n_end(v.index)


def _vertex(e: End) -> Vertex:
    return Vertex(e.index, e.kind is EndKind.SOUTH)


# =============================================================================
# Unfold and fold
# =============================================================================

@dataclass(frozen=True)
class _Bead:
    key: tuple[int, int]
    pair: Pair
    index: int
    forward: bool


@lru_cache(maxsize=None)
def unfold_mux(d: Diagram) -> PeriodicSymDiagram:
    """
    Periodic strip of an x-diagram.

    L beads are numbered along the west edge top to bottom and take contacts
    (2k, 2k+1), first-met contact above; R beads are numbered along the east
    edge bottom to top and take contacts counted up from the bottom.
    """
    if d.n != d.m:
        raise InvalidDiagramError("x-diagrams are square", {"n": d.n, "m": d.m})
    if d.loops:
        raise InvalidDiagramError("x-diagrams carry no loops", {"diagram": str(d)})
    m = d.m
    west: list[_Bead] = []
    east: list[_Bead] = []
    for p in d.pairs:
        if set(p.word) - {LEFT, RIGHT}:
            raise InvalidDiagramError(f"bead alphabet is {{L, R}}", {"line": str(p)})
        a, b = boundary_position(d, p.start), boundary_position(d, p.end)
        size = len(p.word)
        for walls, (x, y), letter in (
            (west, (a, b), LEFT),
            (east, ((a - m) % (2 * m), (b - m) % (2 * m)), RIGHT),
        ):
            forward = x < y
            walk = p.word if forward else p.word[::-1]
            for t, ch in enumerate(walk):
                if ch == letter:
                    walls.append(_Bead((min(x, y), t), p, t if forward else size - 1 - t, forward))

    contacts: dict[tuple[Pair, int], tuple[End, End]] = {}
    west.sort(key=lambda bead: bead.key)
    for k, bead in enumerate(west):
        first, second = w0(2 * k), w0(2 * k + 1)
        contacts[(bead.pair, bead.index)] = (first, second) if bead.forward else (second, first)
    east.sort(key=lambda bead: bead.key)
    k1 = 2 * len(east)
    for k, bead in enumerate(east):
        first, second = w1(k1 - 1 - 2 * k), w1(k1 - 2 - 2 * k)
        contacts[(bead.pair, bead.index)] = (first, second) if bead.forward else (second, first)

    lines = []
    for p in d.pairs:
        current = _end(p.start)
        for t in range(len(p.word)):
            entry, exit_ = contacts[(p, t)]
            lines.append((current, entry))
            current = exit_
        lines.append((current, _end(p.end)))
    result = PeriodicSymDiagram.build(m, lines)
    if not result.is_planar():
        raise InvalidDiagramError("beads are not reachable from their walls", {"diagram": str(d)})
    return result


def fold_nu(d: PeriodicSymDiagram) -> Diagram:
    """
    Join wall contacts (2k, 2k+1) into an L bead (0-wall) or R bead (1-wall).

    Chains that never reach a vertex become loops of the result.
    """
    partners = d.partners

    def bead(e: End) -> tuple[str, End]:
        letter = LEFT if e.kind is EndKind.WALL0 else RIGHT
        return letter, End(e.kind, e.index ^ 1)

    seen: set[End] = set()
    lines = []
    vertices = [n_end(i) for i in range(1, d.m + 1)] + [s_end(i) for i in range(1, d.m + 1)]
    for start in vertices:
        if start in seen:
            continue
        word, current = [], start
        seen.add(current)
        while True:
            other = partners[current]
            seen.add(other)
            if other.is_vertex:
                break
            letter, current = bead(other)
            word.append(letter)
            seen.add(current)
        lines.append((_vertex(start), _vertex(other), "".join(word)))

    loops = ["" for _ in range(d.loops)]
    for start in partners:
        if start in seen:
            continue
        word, current = [], start
        while current not in seen:
            seen.add(current)
            other = partners[current]
            seen.add(other)
            letter, current = bead(other)
            word.append(letter)
        loops.append("".join(word))
    return Diagram.build(d.m, d.m, lines, loops)


# =============================================================================
# Bases
# =============================================================================

def is_reduced_word(word: str) -> bool:
    return word in REDUCED_WORDS


def two_letter_lines(d: Diagram) -> int:
    return sum(1 for p in d.pairs if len(p.word) == 2)


def is_x_admissible(d: Diagram) -> bool:
    """Reduced words, no loops, and every bead reachable from its wall."""
    if d.loops or not all(is_reduced_word(p.word) for p in d.pairs):
        return False
    try:
        unfold_mux(d)
    except InvalidDiagramError:
        return False
    return True


@lru_cache(maxsize=None)
def enumerate_Bx(m: int) -> tuple[Diagram, ...]:
    """Basis of b^x_m: the folds of the periodic basis."""
    result = sorted((fold_nu(d) for d in enumerate_phi(m)), key=Diagram.sort_key)
    logger.debug(f"B^x_{m}: {len(result)} diagrams")
    return tuple(result)


@lru_cache(maxsize=None)
def enumerate_Bx_prime(m: int) -> tuple[Diagram, ...]:
    """Reduced x-diagrams before the topological quotient (any number of two-letter lines)."""
    result = []
    for shape in tl_diagrams(m):
        for words in _word_choices(len(shape.pairs)):
            d = shape.with_words(dict(zip(shape.pairs, words)))
            if is_x_admissible(d):
                result.append(d)
    result.sort(key=Diagram.sort_key)
    return tuple(result)


def _word_choices(count: int):
    if count == 0:
        yield ()
        return
    for word in REDUCED_WORDS:
        for rest in _word_choices(count - 1):
            yield (word, *rest)


# =============================================================================
# Products
# =============================================================================

def x_product(a: Diagram, b: Diagram) -> tuple[LaurentPoly, Diagram]:
    """Structure constant and basis diagram of a*b, computed on the periodic side."""
    scalar, result = compose_phi(unfold_mux(a), unfold_mux(b))
    return scalar, fold_nu(result)


def compose_x(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a.multiply(b, x_product)


def mirror_x(d: Diagram) -> Diagram:
    """Left-right reflection exchanging L and R."""
    return d.mirror({LEFT: RIGHT, RIGHT: LEFT})


# =============================================================================
# Rewriting oracle
# =============================================================================

_LINE_RULES = (("LL", "L", DL), ("RR", "R", DR), ("LRL", "L", KLR), ("RLR", "R", KLR))
_TERMINAL_LOOPS = {"": D, "L": KL, "R": KR, "LR": KLR}


def _sites(word: str, rules) -> list[tuple[int, str, str, LaurentPoly]]:
    sites = []
    for lhs, rhs, factor in rules:
        start = word.find(lhs)
        while start != -1:
            sites.append((start, lhs, rhs, factor))
            start = word.find(lhs, start + 1)
    return sites


def reduce_line_word(word: str, rng: Optional[random.Random] = None) -> tuple[LaurentPoly, str]:
    """Rewrite a line word to normal form, choosing sites at random when rng is given."""
    scalar = ONE
    while True:
        sites = _sites(word, _LINE_RULES)
        if not sites:
            return scalar, word
        start, lhs, rhs, factor = rng.choice(sites) if rng else sites[0]
        word = word[:start] + rhs + word[start + len(lhs):]
        scalar = scalar * factor


def reduce_loop_word(word: str, rng: Optional[random.Random] = None) -> LaurentPoly:
    """Factor of a closed loop: doubled beads collapse first, then alternations."""
    scalar = ONE
    while len(word) > 1:
        doubled = [i for i in range(len(word)) if word[i] == word[(i + 1) % len(word)]]
        if not doubled:
            break
        i = rng.choice(doubled) if rng else doubled[0]
        scalar = scalar * (DL if word[i] == LEFT else DR)
        word = word[:i] + word[i + 1:]
    while len(word) > 2:
        # alternating: drop one LR period
        scalar = scalar * KLR
        word = word[2:]
    return scalar * _TERMINAL_LOOPS[word if word != "RL" else "LR"]


def rectangular_reduce(
    pseudo: Diagram, rng: Optional[random.Random] = None
) -> tuple[LaurentPoly, Diagram]:
    """Normal form of an x-pseudodiagram by direct rewriting."""
    scalar = ONE
    lines = []
    for p in pseudo.pairs:
        factor, word = reduce_line_word(p.word, rng)
        scalar = scalar * factor
        lines.append(Pair(p.start, p.end, word))
    for loop in pseudo.loops:
        scalar = scalar * reduce_loop_word(loop, rng)
    reduced = Diagram.build(pseudo.n, pseudo.m, lines)
    if two_letter_lines(reduced) >= 2:
        counts, strip = reduce_features(unfold_mux(reduced))
        scalar = scalar * counts.scalar()
        reduced = fold_nu(strip)
    return scalar, reduced


def periodic_route(a: Diagram, b: Diagram) -> tuple[LaurentPoly, Diagram]:
    """Product of two admissible x-diagrams through the periodic picture."""
    counts, result = reduce_features(stack(unfold_mux(a), unfold_mux(b)))
    return counts.scalar(), fold_nu(result)


def rectangular_route(
    a: Diagram, b: Diagram, rng: Optional[random.Random] = None
) -> tuple[LaurentPoly, Diagram]:
    return rectangular_reduce(abacus_concat(a, b), rng)


# =============================================================================
# Non-injectivity
# =============================================================================

@dataclass(frozen=True)
class InjectivityWitness:
    """d1 outside B^x whose periodic image is scalar times the image of d2 in B^x."""

    m: int
    d1: Diagram
    d2: Diagram
    scalar: LaurentPoly


def find_noninjectivity_witness(max_m: int = 3) -> Optional[InjectivityWitness]:
    """Search B^x' \\ B^x for an element whose unfolding reduces onto a basis image."""
    for m in range(1, max_m + 1):
        basis = set(enumerate_Bx(m))
        for d1 in enumerate_Bx_prime(m):
            if d1 in basis:
                continue
            counts, image = reduce_features(unfold_mux(d1))
            d2 = fold_nu(image)
            if d2 in basis and d2 != d1:
                logger.info(f"non-injectivity witness at m={m}: {d1} ~ ({counts.scalar()}) {d2}")
                return InjectivityWitness(m, d1, d2, counts.scalar())
    return None
