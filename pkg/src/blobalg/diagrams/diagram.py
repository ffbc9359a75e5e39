"""
Beaded pair partitions and the abacus product.

A Diagram on V^n_m is a perfect matching of the northern vertices 1..n and
southern vertices 1'..m', each line carrying a bead word, plus (for
pseudodiagrams) a sorted tuple of closed-loop classes.

Bead words are read from i to j', from i to j when i < j, and from i' to j'
when i < j. ``Diagram.build`` accepts lines in any orientation and reverses
the word where needed.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from blobalg.core.exceptions import (
    InvalidDiagramError,
    NotPlanarError,
    RankMismatchError,
    UnknownLoopClassError,
)
from blobalg.core.models import DiagramModel, PairModel
from blobalg.params.laurent import ONE, LaurentPoly


@dataclass(frozen=True)
class Vertex:
    """Northern vertex i (primed=False) or southern vertex i' (primed=True)."""

    index: int
    primed: bool = False

    @property
    def key(self) -> tuple[bool, int]:
        return (self.primed, self.index)

    def flipped(self) -> Vertex:
        return Vertex(self.index, not self.primed)

    def shifted(self, offset: int) -> Vertex:
        return Vertex(self.index + offset, self.primed)

    def __str__(self) -> str:
        return f"{self.index}p" if self.primed else str(self.index)

    @classmethod
    def parse(cls, label: Union[str, int, Vertex]) -> Vertex:
        if isinstance(label, Vertex):
            return label
        if isinstance(label, int):
            return cls(label)
        text = label.strip()
        primed = text.endswith(("p", "'", "′"))
        digits = text[:-1] if primed else text
        if not digits.isdigit() or int(digits) < 1:
            raise InvalidDiagramError(f"bad vertex label '{label}'")
        return cls(int(digits), primed)


def north(i: int) -> Vertex:
    return Vertex(i)


def south(i: int) -> Vertex:
    return Vertex(i, True)


def reads_forward(u: Vertex, v: Vertex) -> bool:
    """True if the reading convention runs from u to v."""
    if u.primed != v.primed:
        return not u.primed
    return u.index < v.index


@dataclass(frozen=True)
class Pair:
    """A line {start, end} whose word is read from start to end."""

    start: Vertex
    end: Vertex
    word: str = ""

    @classmethod
    def make(cls, u: Vertex, v: Vertex, word: str = "") -> Pair:
        """Orient a line given with word read from u to v."""
        if u == v:
            raise InvalidDiagramError(f"line joins {u} to itself")
        if reads_forward(u, v):
            return cls(u, v, word)
        return cls(v, u, word[::-1])

    @property
    def ends(self) -> tuple[Vertex, Vertex]:
        return (self.start, self.end)

    @property
    def is_propagating(self) -> bool:
        return self.start.primed != self.end.primed

    def word_from(self, v: Vertex) -> str:
        return self.word if v == self.start else self.word[::-1]

    def other(self, v: Vertex) -> Vertex:
        return self.end if v == self.start else self.start

    def __str__(self) -> str:
        body = f"{{{self.start},{self.end}}}"
        return f"{body}_{self.word}" if self.word else body


def canonical_loop(word: str) -> str:
    """Least rotation of the word or its reverse."""
    if not word:
        return ""
    candidates = []
    for w in (word, word[::-1]):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates)


LineSpec = Union[Pair, tuple]


@dataclass(frozen=True)
class Diagram:
    """Decorated pair partition on V^n_m, possibly with closed loops."""

    n: int
    m: int
    pairs: tuple[Pair, ...]
    loops: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        expected = {north(i) for i in range(1, self.n + 1)}
        expected |= {south(i) for i in range(1, self.m + 1)}
        seen: list[Vertex] = [v for p in self.pairs for v in p.ends]
        if len(seen) != len(set(seen)) or set(seen) != expected:
            raise InvalidDiagramError(
                "lines must partition the vertex set",
                {"n": self.n, "m": self.m, "pairs": [str(p) for p in self.pairs]},
            )

    # -- construction ------------------------------------------------------

    @classmethod
    def build(
        cls,
        n: int,
        m: int,
        lines: Iterable[LineSpec],
        loops: Iterable[str] = (),
    ) -> Diagram:
        """
        Build a canonical diagram.

        Lines are Pair objects or tuples (u, v) / (u, v, word) with vertex
        labels such as 3 or '3p'; the word is read from u to v.
        """
        pairs = []
        for line in lines:
            if isinstance(line, Pair):
                pairs.append(Pair.make(line.start, line.end, line.word))
                continue
            u, v, *rest = line
            word = rest[0] if rest else ""
            pairs.append(Pair.make(Vertex.parse(u), Vertex.parse(v), word))
        pairs.sort(key=lambda p: min(p.start.key, p.end.key))
        return cls(n, m, tuple(pairs), tuple(sorted(canonical_loop(w) for w in loops)))

    @classmethod
    def identity(cls, n: int) -> Diagram:
        return cls.build(n, n, [(north(i), south(i)) for i in range(1, n + 1)])

    # -- structure ---------------------------------------------------------

    @cached_property
    def partners(self) -> dict[Vertex, tuple[Vertex, str]]:
        """Vertex -> (partner, word read from the vertex)."""
        table = {}
        for p in self.pairs:
            table[p.start] = (p.end, p.word)
            table[p.end] = (p.start, p.word[::-1])
        return table

    def pair_at(self, v: Vertex) -> Pair:
        for p in self.pairs:
            if v in p.ends:
                return p
        raise KeyError(str(v))

    @property
    def is_pseudo(self) -> bool:
        return bool(self.loops)

    @property
    def propagating_count(self) -> int:
        return sum(1 for p in self.pairs if p.is_propagating)

    @property
    def is_beadless(self) -> bool:
        return not any(p.word for p in self.pairs) and not any(self.loops)

    def underlying(self) -> Diagram:
        """The diagram c_d with loops removed."""
        if not self.loops:
            return self
        return Diagram(self.n, self.m, self.pairs)

    def shape(self) -> Diagram:
        """Beadless, loop-free underlying pair partition."""
        return Diagram.build(self.n, self.m, [(p.start, p.end) for p in self.pairs])

    def with_words(self, words: Mapping[Pair, str]) -> Diagram:
        return Diagram.build(
            self.n,
            self.m,
            [Pair(p.start, p.end, words.get(p, p.word)) for p in self.pairs],
            self.loops,
        )

    def flip(self) -> Diagram:
        """Upside-down reflection, the anti-involution *."""
        return Diagram.build(
            self.m,
            self.n,
            [(p.start.flipped(), p.end.flipped(), p.word) for p in self.pairs],
            self.loops,
        )

    def mirror(self, letters: Mapping[str, str] | None = None) -> Diagram:
        """Left-right reflection; beads are renamed through letters."""
        table = letters or {}

        def reflect(v: Vertex) -> Vertex:
            size = self.m if v.primed else self.n
            return Vertex(size + 1 - v.index, v.primed)

        def rename(word: str) -> str:
            return "".join(table.get(c, c) for c in word)

        return Diagram.build(
            self.n,
            self.m,
            [(reflect(p.start), reflect(p.end), rename(p.word)) for p in self.pairs],
            [rename(w) for w in self.loops],
        )

    # -- text and JSON -----------------------------------------------------

    def __str__(self) -> str:
        parts = [str(p) for p in self.pairs]
        parts.extend(f"{{}}_{w}" if w else "{}" for w in self.loops)
        return "{" + ", ".join(parts) + "}"

    def sort_key(self) -> str:
        return str(self)

    def to_model(self) -> DiagramModel:
        return DiagramModel(
            n=self.n,
            m=self.m,
            pairs=[PairModel(ends=[str(p.start), str(p.end)], word=p.word) for p in self.pairs],
            loops=list(self.loops),
        )

    @classmethod
    def from_model(cls, model: DiagramModel) -> Diagram:
        return cls.build(
            model.n,
            model.m,
            [(p.ends[0], p.ends[1], p.word) for p in model.pairs],
            model.loops,
        )

    def to_json(self) -> str:
        return self.to_model().model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> Diagram:
        return cls.from_model(DiagramModel.model_validate_json(text))


# =============================================================================
# Abacus product and scalar reduction
# =============================================================================

def abacus_concat(d1: Diagram, d2: Diagram) -> Diagram:
    """
    Stack d1 on top of d2 and trace every chain.

    Bead words accumulate along each chain; chains that close up become loop
    classes of the result.
    """
    if d1.m != d2.n:
        raise RankMismatchError(d1.m, d2.n)
    upper, lower = d1.partners, d2.partners
    visited: set[int] = set()
    lines: list[tuple[Vertex, Vertex, str]] = []

    def trace(layer: int, v: Vertex) -> tuple[Vertex, str]:
        word: list[str] = []
        while True:
            w, seg = (upper if layer == 1 else lower)[v]
            word.append(seg)
            if layer == 1 and not w.primed:
                return w, "".join(word)
            if layer == 2 and w.primed:
                return w, "".join(word)
            visited.add(w.index)
            if layer == 1:
                layer, v = 2, north(w.index)
            else:
                layer, v = 1, south(w.index)

    done: set[Vertex] = set()
    for i in range(1, d1.n + 1):
        start = north(i)
        if start in done:
            continue
        end, word = trace(1, start)
        if end in done or end == start:
            continue
        done.update((start, end))
        lines.append((start, end, word))
    for i in range(1, d2.m + 1):
        start = south(i)
        if start in done:
            continue
        end, word = trace(2, start)
        done.update((start, end))
        lines.append((start, end, word))

    loops = list(d1.loops) + list(d2.loops)
    for k in range(1, d1.m + 1):
        if k in visited:
            continue
        # closed chain through middle vertex k: leave downward first
        word: list[str] = []
        layer, v = 2, north(k)
        while True:
            visited.add(v.index)
            w, seg = (upper if layer == 1 else lower)[v]
            word.append(seg)
            if layer == 2:
                layer, v = 1, south(w.index)
            else:
                layer, v = 2, north(w.index)
            if layer == 2 and v.index == k:
                break
        loops.append("".join(word))
    return Diagram.build(d1.n, d2.m, lines, loops)


LoopRules = Union[Mapping[str, LaurentPoly], Callable[[str], LaurentPoly]]


def scalar_reduce(d: Diagram, rules: LoopRules) -> tuple[LaurentPoly, Diagram]:
    """Replace every loop by its rule value; returns (k_d, c_d)."""
    if isinstance(rules, Mapping):
        table = {canonical_loop(k): v for k, v in rules.items()}

        def rule(word: str) -> LaurentPoly:
            if word not in table:
                raise UnknownLoopClassError(word)
            return table[word]
    else:
        rule = rules

    scalar = ONE
    for loop in d.loops:
        scalar = scalar * rule(loop)
    return scalar, d.underlying()


# =============================================================================
# Planarity and exposure
# =============================================================================

def boundary_position(d: Diagram, v: Vertex) -> int:
    """Position in the boundary order 1..n, m'..1' (west edge between 1' and 1)."""
    if v.primed:
        return d.n + d.m - v.index
    return v.index - 1


def chords(d: Diagram) -> dict[Pair, tuple[int, int]]:
    """Each line as an interval (a, b), a < b, in boundary order."""
    result = {}
    for p in d.pairs:
        a, b = boundary_position(d, p.start), boundary_position(d, p.end)
        result[p] = (min(a, b), max(a, b))
    return result


def is_planar(d: Diagram) -> bool:
    """True iff no two lines cross in the boundary order."""
    owner: dict[int, Pair] = {}
    spans = chords(d)
    for p, (a, b) in spans.items():
        owner[a] = p
        owner[b] = p
    stack: list[Pair] = []
    for pos in sorted(owner):
        p = owner[pos]
        if spans[p][0] == pos:
            stack.append(p)
        elif not stack or stack.pop() != p:
            return False
    return True


def exposure_levels(d: Diagram) -> dict[Pair, int]:
    """
    Western exposure level of every line.

    Level-0 lines are those not nested inside another line in the boundary
    order that starts just after the west edge; peel them off and repeat.
    """
    if not is_planar(d):
        raise NotPlanarError(str(d))
    remaining = chords(d)
    levels: dict[Pair, int] = {}
    level = 0
    while remaining:
        exposed = [
            p
            for p, (a, b) in remaining.items()
            if not any(c < a and b < e for q, (c, e) in remaining.items() if q != p)
        ]
        for p in exposed:
            levels[p] = level
            del remaining[p]
        level += 1
    return levels
