"""
Periodic symmetric diagrams in their fundamental-domain (wall) form.

A diagram of period 2m is stored as a planar perfect matching on the
boundary of one strip: northern vertices 1..m, southern vertices 1'..m', and
the points where lines meet the 0-wall (west, indexed top to bottom from 0)
and the 1-wall (east, likewise). The rest of the periodic picture is the
reflection of the strip in its walls. In cyclic order the boundary reads
north 1..m, 1-wall top to bottom, south m'..1', 0-wall bottom to top.

A line from one wall to the other closes up into a belt (a noncontractible
loop); a line with both ends on the same wall closes up into a loop astride
that wall's reflection line. Composition stacks strips and strips all such
features into a monomial.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Optional, Union

from blobalg.core.exceptions import InvalidDiagramError, NotCCError, RankMismatchError
from blobalg.core.models import PeriodicDiagramModel, WallLineModel
from blobalg.params.laurent import D, DL, DR, KL, KLR, KR, ONE, LaurentPoly
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)


class EndKind(str, Enum):
    NORTH = "n"
    SOUTH = "s"
    WALL0 = "w0"
    WALL1 = "w1"

    @property
    def is_wall(self) -> bool:
        return self in (EndKind.WALL0, EndKind.WALL1)


_KIND_ORDER = {EndKind.NORTH: 0, EndKind.SOUTH: 1, EndKind.WALL0: 2, EndKind.WALL1: 3}


@dataclass(frozen=True)
class End:
    """A line endpoint: a vertex or a wall contact."""

    kind: EndKind
    index: int

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    @property
    def is_vertex(self) -> bool:
        return not self.kind.is_wall

    def __str__(self) -> str:
        if self.kind is EndKind.NORTH:
            return str(self.index)
        if self.kind is EndKind.SOUTH:
            return f"{self.index}p"
        return f"{self.kind.value}:{self.index}"

    @classmethod
    def parse(cls, label: str) -> End:
        text = label.strip()
        if text.startswith(("w0:", "w1:")):
            kind, _, index = text.partition(":")
            if not index.isdigit():
                raise InvalidDiagramError(f"bad wall label '{label}'")
            return cls(EndKind(kind), int(index))
        primed = text.endswith(("p", "'", "′"))
        digits = text[:-1] if primed else text
        if not digits.isdigit() or int(digits) < 1:
            raise InvalidDiagramError(f"bad endpoint label '{label}'")
        return cls(EndKind.SOUTH if primed else EndKind.NORTH, int(digits))


def n_end(i: int) -> End:
    return End(EndKind.NORTH, i)


def s_end(i: int) -> End:
    return End(EndKind.SOUTH, i)


def w0(j: int) -> End:
    return End(EndKind.WALL0, j)


def w1(j: int) -> End:
    return End(EndKind.WALL1, j)


Line = tuple[End, End]


def _line(u: End, v: End) -> Line:
    return (u, v) if u.sort_key <= v.sort_key else (v, u)


# =============================================================================
# Feature counts
# =============================================================================

@dataclass(frozen=True)
class FeatureCount:
    """Multiplicities of the six features removed by reduction."""

    delta: int = 0
    delta_l: int = 0
    kappa_l: int = 0
    delta_r: int = 0
    kappa_r: int = 0
    kappa_lr: int = 0

    def __add__(self, other: FeatureCount) -> FeatureCount:
        return FeatureCount(
            self.delta + other.delta,
            self.delta_l + other.delta_l,
            self.kappa_l + other.kappa_l,
            self.delta_r + other.delta_r,
            self.kappa_r + other.kappa_r,
            self.kappa_lr + other.kappa_lr,
        )

    def dominates(self, other: FeatureCount) -> bool:
        """Componentwise >=."""
        return all(a >= b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def as_tuple(self) -> tuple[int, ...]:
        return (self.delta, self.delta_l, self.kappa_l, self.delta_r, self.kappa_r, self.kappa_lr)

    def scalar(self) -> LaurentPoly:
        result = ONE
        for param, count in zip((D, DL, KL, DR, KR, KLR), self.as_tuple()):
            if count:
                result = result * param ** count
        return result


# =============================================================================
# Diagrams
# =============================================================================

@dataclass(frozen=True)
class PeriodicSymDiagram:
    """
    Fundamental strip of a left-right symmetric periodic diagram.

    ``loops`` counts interior contractible loops of a pseudodiagram; basis
    diagrams have none, no same-wall lines and at most one belt.
    """

    m: int
    k0: int
    k1: int
    lines: tuple[Line, ...]
    loops: int = field(default=0)

    def __post_init__(self) -> None:
        expected = {n_end(i) for i in range(1, self.m + 1)}
        expected |= {s_end(i) for i in range(1, self.m + 1)}
        expected |= {w0(j) for j in range(self.k0)} | {w1(j) for j in range(self.k1)}
        seen = [e for line in self.lines for e in line]
        if len(seen) != len(set(seen)) or set(seen) != expected:
            raise InvalidDiagramError(
                "lines must partition the strip boundary",
                {"m": self.m, "k0": self.k0, "k1": self.k1, "lines": [_fmt(l) for l in self.lines]},
            )
        if self.k0 % 2:
            raise NotCCError("0-wall", self.k0)
        if self.k1 % 2:
            raise NotCCError("1-wall", self.k1)

    @classmethod
    def build(
        cls,
        m: int,
        lines: Iterable[tuple[Union[End, str], Union[End, str]]],
        loops: int = 0,
    ) -> PeriodicSymDiagram:
        """Canonical diagram from endpoint pairs; wall counts are inferred."""
        pairs = []
        for u, v in lines:
            u = u if isinstance(u, End) else End.parse(u)
            v = v if isinstance(v, End) else End.parse(v)
            pairs.append(_line(u, v))
        pairs.sort(key=lambda p: (p[0].sort_key, p[1].sort_key))
        ends = [e for p in pairs for e in p]
        k0 = sum(1 for e in ends if e.kind is EndKind.WALL0)
        k1 = sum(1 for e in ends if e.kind is EndKind.WALL1)
        return cls(m, k0, k1, tuple(pairs), loops)

    @classmethod
    def identity(cls, m: int) -> PeriodicSymDiagram:
        return cls.build(m, [(n_end(i), s_end(i)) for i in range(1, m + 1)])

    # -- structure ---------------------------------------------------------

    @cached_property
    def partners(self) -> dict[End, End]:
        table = {}
        for u, v in self.lines:
            table[u] = v
            table[v] = u
        return table

    def position(self, e: End) -> int:
        """Position in the cyclic boundary order."""
        m, k0, k1 = self.m, self.k0, self.k1
        if e.kind is EndKind.NORTH:
            return e.index - 1
        if e.kind is EndKind.WALL1:
            return m + e.index
        if e.kind is EndKind.SOUTH:
            return m + k1 + (m - e.index)
        return 2 * m + k1 + (k0 - 1 - e.index)

    def is_planar(self) -> bool:
        spans = sorted(tuple(sorted((self.position(u), self.position(v)))) for u, v in self.lines)
        owner = {}
        for a, b in spans:
            owner[a] = (a, b)
            owner[b] = (a, b)
        stack: list[tuple[int, int]] = []
        for pos in sorted(owner):
            span = owner[pos]
            if span[0] == pos:
                stack.append(span)
            elif not stack or stack.pop() != span:
                return False
        return True

    @property
    def belts(self) -> int:
        return sum(1 for u, v in self.lines if {u.kind, v.kind} == {EndKind.WALL0, EndKind.WALL1})

    @property
    def propagating_count(self) -> int:
        return sum(1 for u, v in self.lines if {u.kind, v.kind} == {EndKind.NORTH, EndKind.SOUTH})

    def same_wall_lines(self) -> list[Line]:
        return [(u, v) for u, v in self.lines if u.kind.is_wall and u.kind is v.kind]

    @property
    def is_basis(self) -> bool:
        return self.loops == 0 and not self.same_wall_lines() and self.belts <= 1

    # -- symmetries --------------------------------------------------------

    def _relabel(self, f: Callable[[End], End]) -> PeriodicSymDiagram:
        return PeriodicSymDiagram.build(self.m, [(f(u), f(v)) for u, v in self.lines], self.loops)

    def flip(self) -> PeriodicSymDiagram:
        """Upside-down reflection."""
        k0, k1 = self.k0, self.k1

        def f(e: End) -> End:
            if e.kind is EndKind.NORTH:
                return s_end(e.index)
            if e.kind is EndKind.SOUTH:
                return n_end(e.index)
            size = k0 if e.kind is EndKind.WALL0 else k1
            return End(e.kind, size - 1 - e.index)

        return self._relabel(f)

    def mirror(self) -> PeriodicSymDiagram:
        """Left-right reflection, exchanging the walls."""
        m = self.m

        def f(e: End) -> End:
            if e.kind is EndKind.WALL0:
                return w1(e.index)
            if e.kind is EndKind.WALL1:
                return w0(e.index)
            return End(e.kind, m + 1 - e.index)

        return self._relabel(f)

    # -- text and JSON -----------------------------------------------------

    def __str__(self) -> str:
        parts = [_fmt(line) for line in self.lines]
        parts.extend("{}" for _ in range(self.loops))
        return "{" + ", ".join(parts) + "}"

    def sort_key(self) -> str:
        return str(self)

    def to_model(self) -> PeriodicDiagramModel:
        return PeriodicDiagramModel(
            m=self.m,
            wall0=self.k0,
            wall1=self.k1,
            belts=self.belts,
            lines=[WallLineModel(ends=[str(u), str(v)]) for u, v in self.lines],
        )

    @classmethod
    def from_model(cls, model: PeriodicDiagramModel) -> PeriodicSymDiagram:
        d = cls.build(model.m, [(line.ends[0], line.ends[1]) for line in model.lines])
        if (d.k0, d.k1, d.belts) != (model.wall0, model.wall1, model.belts):
            raise InvalidDiagramError(
                "wall counts disagree with lines",
                {"wall0": model.wall0, "wall1": model.wall1, "belts": model.belts},
            )
        return d

    def to_json(self) -> str:
        return self.to_model().model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> PeriodicSymDiagram:
        return cls.from_model(PeriodicDiagramModel.model_validate_json(text))


def _fmt(line: Line) -> str:
    return f"{{{line[0]},{line[1]}}}"


# =============================================================================
# Composition
# =============================================================================

def stack(a: PeriodicSymDiagram, b: PeriodicSymDiagram) -> PeriodicSymDiagram:
    """Put strip a on top of strip b and trace every chain, keeping all features."""
    if a.m != b.m:
        raise RankMismatchError(a.m, b.m)
    m = a.m

    def outer(layer: int, e: End) -> Optional[End]:
        if layer == 0:
            if e.kind is EndKind.SOUTH:
                return None
            return e
        if e.kind is EndKind.NORTH:
            return None
        if e.kind is EndKind.WALL0:
            return w0(e.index + a.k0)
        if e.kind is EndKind.WALL1:
            return w1(e.index + a.k1)
        return e

    visited: set[int] = set()

    def walk(layer: int, e: End) -> End:
        while True:
            other = (a if layer == 0 else b).partners[e]
            target = outer(layer, other)
            if target is not None:
                return target
            visited.add(other.index)
            layer, e = (1, n_end(other.index)) if layer == 0 else (0, s_end(other.index))

    starts = [(0, e) for e in a.partners if e.kind is not EndKind.SOUTH]
    starts += [(1, e) for e in b.partners if e.kind is not EndKind.NORTH]
    done: set[End] = set()
    lines = []
    for layer, e in starts:
        here = outer(layer, e)
        if here in done:
            continue
        there = walk(layer, e)
        done.update((here, there))
        lines.append((here, there))

    loops = a.loops + b.loops
    for i in range(1, m + 1):
        if i in visited:
            continue
        layer, e = 1, n_end(i)
        while True:
            visited.add(e.index)
            other = (a if layer == 0 else b).partners[e]
            layer, e = (1, n_end(other.index)) if layer == 0 else (0, s_end(other.index))
            if layer == 1 and e.index == i:
                break
        loops += 1
    return PeriodicSymDiagram.build(m, lines, loops)


def reduce_features(d: PeriodicSymDiagram) -> tuple[FeatureCount, PeriodicSymDiagram]:
    """
    Strip every feature from a pseudodiagram.

    A same-wall line whose upper contact has odd index encloses a white
    region and gives dL (dR on the 1-wall); even index gives kL (kR). Belts
    pair off into kLR; an odd belt count leaves the uppermost belt.
    """
    delta_l = kappa_l = delta_r = kappa_r = 0
    keep: list[Line] = []
    belts: list[Line] = []
    for u, v in d.lines:
        if u.kind.is_wall and u.kind is v.kind:
            white = min(u.index, v.index) % 2 == 1
            if u.kind is EndKind.WALL0:
                delta_l, kappa_l = delta_l + white, kappa_l + (not white)
            else:
                delta_r, kappa_r = delta_r + white, kappa_r + (not white)
        elif {u.kind, v.kind} == {EndKind.WALL0, EndKind.WALL1}:
            belts.append((u, v))
        else:
            keep.append((u, v))
    belts.sort(key=lambda line: line[0].index)
    keep.extend(belts[: len(belts) % 2])

    survivors0 = sorted(e.index for line in keep for e in line if e.kind is EndKind.WALL0)
    survivors1 = sorted(e.index for line in keep for e in line if e.kind is EndKind.WALL1)
    rank0 = {j: r for r, j in enumerate(survivors0)}
    rank1 = {j: r for r, j in enumerate(survivors1)}

    def renumber(e: End) -> End:
        if e.kind is EndKind.WALL0:
            return w0(rank0[e.index])
        if e.kind is EndKind.WALL1:
            return w1(rank1[e.index])
        return e

    counts = FeatureCount(d.loops, delta_l, kappa_l, delta_r, kappa_r, len(belts) // 2)
    reduced = PeriodicSymDiagram.build(d.m, [(renumber(u), renumber(v)) for u, v in keep])
    return counts, reduced


def compose_features(
    a: PeriodicSymDiagram, b: PeriodicSymDiagram
) -> tuple[FeatureCount, PeriodicSymDiagram]:
    return reduce_features(stack(a, b))


def compose_phi(a: PeriodicSymDiagram, b: PeriodicSymDiagram) -> tuple[LaurentPoly, PeriodicSymDiagram]:
    """Monomial and basis diagram of the product a*b."""
    counts, result = compose_features(a, b)
    return counts.scalar(), result


# =============================================================================
# Enumeration
# =============================================================================

def _matchings(points: list[End], allowed) -> Iterator[list[Line]]:
    """Noncrossing perfect matchings of points (in cyclic order) using allowed pairs."""

    def place(lo: int, hi: int) -> Iterator[list[Line]]:
        if lo >= hi:
            yield []
            return
        for partner in range(lo + 1, hi, 2):
            if not allowed(points[lo], points[partner]):
                continue
            for inner in place(lo + 1, partner):
                for outer in place(partner + 1, hi):
                    yield [(points[lo], points[partner]), *inner, *outer]

    yield from place(0, len(points))


def boundary(m: int, k0: int, k1: int) -> list[End]:
    """Strip boundary in cyclic order."""
    points = [n_end(i) for i in range(1, m + 1)]
    points += [w1(j) for j in range(k1)]
    points += [s_end(i) for i in range(m, 0, -1)]
    points += [w0(j) for j in range(k0 - 1, -1, -1)]
    return points


@lru_cache(maxsize=None)
def enumerate_phi(m: int, max_belts: int = 1) -> tuple[PeriodicSymDiagram, ...]:
    """Diagrams with no loops, no same-wall lines and at most max_belts belts."""

    def allowed(u: End, v: End) -> bool:
        return not (u.kind.is_wall and u.kind is v.kind)

    result = []
    for k0 in range(0, 2 * m + max_belts + 1, 2):
        for k1 in range(0, 2 * m + 2 * max_belts - k0 + 1, 2):
            for lines in _matchings(boundary(m, k0, k1), allowed):
                d = PeriodicSymDiagram.build(m, lines)
                if d.belts <= max_belts:
                    result.append(d)
    result.sort(key=PeriodicSymDiagram.sort_key)
    logger.debug(f"B^phi_{2 * m}: {len(result)} diagrams (max belts {max_belts})")
    return tuple(result)


# =============================================================================
# Half-diagrams
# =============================================================================

@dataclass(frozen=True)
class HalfProfile:
    """Arcs and unmatched directions of a ket over {L, R, o}."""

    arcs: tuple[tuple[int, int], ...]
    unmatched_l: tuple[int, ...]
    unmatched_r: tuple[int, ...]
    through: tuple[int, ...]

    @property
    def ur0(self) -> int:
        return len(self.unmatched_l)

    @property
    def ur(self) -> int:
        return len(self.unmatched_r)


def ket_profile(ket: str) -> HalfProfile:
    """
    Parse a ket: R opens, L closes, o is a propagating line.

    Matched pairs may not span an o, an unmatched L may not follow an o, and
    an unmatched R may not precede one. Positions are 1-based vertices.
    """
    stack: list[int] = []
    arcs, unmatched_l, through = [], [], []
    for pos, ch in enumerate(ket, start=1):
        if ch == "R":
            stack.append(pos)
        elif ch == "L":
            if stack:
                arcs.append((stack.pop(), pos))
            elif through:
                raise InvalidDiagramError(f"ket '{ket}': unmatched L after a propagating line")
            else:
                unmatched_l.append(pos)
        elif ch == "o":
            if stack:
                raise InvalidDiagramError(f"ket '{ket}': propagating line inside an arc")
            through.append(pos)
        else:
            raise InvalidDiagramError(f"ket '{ket}': unknown symbol '{ch}'")
    return HalfProfile(tuple(sorted(arcs)), tuple(unmatched_l), tuple(stack), tuple(through))


def is_valid_ket(ket: str) -> bool:
    try:
        ket_profile(ket)
    except InvalidDiagramError:
        return False
    return True


def glue(top: str, bottom: str) -> PeriodicSymDiagram:
    """
    The diagram |top><bottom|.

    Propagating lines join in order. Wall contacts are ordered top to bottom:
    the 0-wall takes the top half's unmatched L's left to right, then the
    belt, then the bottom half's right to left; the 1-wall takes the top
    half's unmatched R's right to left, the belt, then the bottom half's
    left to right. Without propagating lines a belt is inserted exactly when
    the 0-wall count would otherwise be odd.
    """
    if len(top) != len(bottom):
        raise RankMismatchError(len(top), len(bottom))
    m = len(top)
    t, b = ket_profile(top), ket_profile(bottom)
    if len(t.through) != len(b.through):
        raise InvalidDiagramError(
            "halves have different propagating numbers", {"top": top, "bottom": bottom}
        )
    parity = (t.ur0 + b.ur0) % 2
    belt = False
    if parity:
        if t.through:
            raise NotCCError("0-wall", t.ur0 + b.ur0)
        belt = True

    lines: list[tuple[End, End]] = []
    lines += [(n_end(i), n_end(j)) for i, j in t.arcs]
    lines += [(s_end(i), s_end(j)) for i, j in b.arcs]
    lines += [(n_end(i), s_end(j)) for i, j in zip(t.through, b.through)]

    wall0: list[Optional[End]] = [n_end(i) for i in t.unmatched_l]
    wall1: list[Optional[End]] = [n_end(i) for i in reversed(t.unmatched_r)]
    if belt:
        lines.append((w0(len(wall0)), w1(len(wall1))))
        wall0.append(None)
        wall1.append(None)
    wall0 += [s_end(i) for i in reversed(b.unmatched_l)]
    wall1 += [s_end(i) for i in b.unmatched_r]
    lines += [(v, w0(j)) for j, v in enumerate(wall0) if v is not None]
    lines += [(v, w1(j)) for j, v in enumerate(wall1) if v is not None]
    return PeriodicSymDiagram.build(m, lines)


def halves(d: PeriodicSymDiagram) -> tuple[str, str]:
    """Inverse of glue on basis diagrams: (top ket, bottom ket)."""

    def read(kind: EndKind) -> str:
        chars = []
        for i in range(1, d.m + 1):
            other = d.partners[End(kind, i)]
            if other.kind is EndKind.WALL0:
                chars.append("L")
            elif other.kind is EndKind.WALL1:
                chars.append("R")
            elif other.kind is kind:
                chars.append("R" if other.index > i else "L")
            else:
                chars.append("o")
        return "".join(chars)

    return read(EndKind.NORTH), read(EndKind.SOUTH)
