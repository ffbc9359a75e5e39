"""
Turn strings, weights and the dimension formulas of the standard modules.

A turn string over {L, R, o} describes the lower half of a basis diagram
read as a bra: R opens an arc, L closes one, o is a propagating line, an
unmatched L runs to the 0-wall and an unmatched R to the 1-wall. The ket of
the same half is its mirror image (reversed, L and R exchanged).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb

from blobalg.core.exceptions import InvalidDiagramError, WeightOutOfRangeError
from blobalg.symplectic.periodic import HalfProfile, ket_profile

_MIRROR = str.maketrans("LR", "RL")


def mirror_half(text: str) -> str:
    """Exchange the bra and ket readings of a half diagram."""
    return text[::-1].translate(_MIRROR)


def weights(m: int) -> list[int]:
    """The index set {-m, ..., m-1}, or {0} when m = 0."""
    return list(range(-m, m)) if m else [0]


def check_weight(m: int, l: int) -> None:
    if l not in weights(m):
        raise WeightOutOfRangeError(m, l)


def signed_weight(x: int, ur: int) -> int:
    if x == 0:
        return 0
    return x if ur % 2 else -x


@dataclass(frozen=True)
class TurnString:
    """A valid string over {L, R, o}."""

    text: str

    def __post_init__(self) -> None:
        ket_profile(self.text)

    @cached_property
    def profile(self) -> HalfProfile:
        return ket_profile(self.text)

    @property
    def m(self) -> int:
        return len(self.text)

    @property
    def x(self) -> int:
        return len(self.profile.through)

    @property
    def ur(self) -> int:
        return self.profile.ur

    @property
    def ur0(self) -> int:
        return self.profile.ur0

    @property
    def weight(self) -> int:
        return signed_weight(self.x, self.ur)

    def to_ket(self) -> str:
        return mirror_half(self.text)

    @classmethod
    def from_ket(cls, ket: str) -> TurnString:
        return cls(mirror_half(ket))

    def __str__(self) -> str:
        return self.text


def is_valid_turn_string(text: str) -> bool:
    try:
        TurnString(text)
    except InvalidDiagramError:
        return False
    return True


def standard_basis(m: int, l: int) -> list[TurnString]:
    """Turn strings of weight l, in lexicographic order."""
    check_weight(m, l)
    x = abs(l)
    alphabet = "LR" if x == 0 else "LRo"
    result = []
    for chars in itertools.product(alphabet, repeat=m):
        text = "".join(chars)
        if text.count("o") != x or not is_valid_turn_string(text):
            continue
        t = TurnString(text)
        if t.weight == l:
            result.append(t)
    return sorted(result, key=str)


def standard_kets(m: int, l: int) -> list[str]:
    return [t.to_ket() for t in standard_basis(m, l)]


def dimension(m: int, l: int) -> int:
    """Closed-form rank of the standard module."""
    check_weight(m, l)
    if l == 0:
        return 2 ** m
    x = abs(l)
    if (m - x) % 2:
        eps = 1
    else:
        eps = 2 if l > 0 else 0
    k = (m - x - eps) // 2
    return sum(comb(m, i) for i in range(k + 1))


@dataclass(frozen=True)
class RestrictionSection:
    """One layer of the filtration by ur, isomorphic to a blob standard module."""

    ur: int
    blob_weight: int
    dimension: int


def restrict_to_blob(m: int, l: int) -> list[RestrictionSection]:
    """Sections of the restriction to the left blob subalgebra, highest ur first."""
    check_weight(m, l)
    x = abs(l)
    if l == 0:
        urs = list(range(m, -1, -1))
    else:
        parity = 1 if l > 0 else 0
        urs = [r for r in range(m - x, -1, -1) if r % 2 == parity]
    sections = []
    for r in urs:
        t = -(x + r + 1) if (m - x - r) % 2 else x + r
        sections.append(RestrictionSection(r, t, comb(m, (m - abs(t)) // 2)))
    return sections
