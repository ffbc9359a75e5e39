"""
Exact Laurent polynomials in the six symplectic blob parameters.

A LaurentPoly is a finite map from exponent vectors (one signed integer per
parameter, in the order of ``PARAMS``) to nonzero integer coefficients.
Values are immutable; arithmetic returns new objects in normal form.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping
from enum import Enum
from fractions import Fraction
from typing import Union

from blobalg.core.exceptions import (
    PolynomialParseError,
    UnboundParameterError,
    UnknownParameterError,
    ZeroDenominatorError,
)


class ParamName(str, Enum):
    """The six independent parameters, valued by their text-format names."""
    DELTA = "d"
    DELTA_L = "dL"
    DELTA_R = "dR"
    KAPPA_L = "kL"
    KAPPA_R = "kR"
    KAPPA_LR = "kLR"

    @property
    def index(self) -> int:
        return PARAMS.index(self)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


PARAMS: tuple[ParamName, ...] = tuple(ParamName)
NVARS = len(PARAMS)

_SYMBOLS = {
    ParamName.DELTA: "δ",
    ParamName.DELTA_L: "δ_L",
    ParamName.DELTA_R: "δ_R",
    ParamName.KAPPA_L: "κ_L",
    ParamName.KAPPA_R: "κ_R",
    ParamName.KAPPA_LR: "κ_LR",
}

# Names used by the blob, b' and rectangular presentations for the same parameters.
_ALIASES: dict[str, ParamName] = {
    "delta": ParamName.DELTA,
    "δ": ParamName.DELTA,
    "deltaL": ParamName.DELTA_L,
    "delta_L": ParamName.DELTA_L,
    "δ_L": ParamName.DELTA_L,
    "delta_e": ParamName.DELTA_L,
    "de": ParamName.DELTA_L,
    "δ_e": ParamName.DELTA_L,
    "deltaR": ParamName.DELTA_R,
    "delta_R": ParamName.DELTA_R,
    "δ_R": ParamName.DELTA_R,
    "kappaL": ParamName.KAPPA_L,
    "kappa_L": ParamName.KAPPA_L,
    "κ_L": ParamName.KAPPA_L,
    "gamma": ParamName.KAPPA_L,
    "γ": ParamName.KAPPA_L,
    "kappa": ParamName.KAPPA_L,
    "κ": ParamName.KAPPA_L,
    "kappaR": ParamName.KAPPA_R,
    "kappa_R": ParamName.KAPPA_R,
    "κ_R": ParamName.KAPPA_R,
    "kappaLR": ParamName.KAPPA_LR,
    "kappa_LR": ParamName.KAPPA_LR,
    "κ_LR": ParamName.KAPPA_LR,
    "kappa_prime": ParamName.KAPPA_LR,
    "κ′": ParamName.KAPPA_LR,
    "k_L": ParamName.KAPPA_LR,
    "k_R": ParamName.KAPPA_LR,
}


def resolve_param(name: Union[str, ParamName]) -> ParamName:
    """Resolve a parameter name or alias to its ParamName."""
    if isinstance(name, ParamName):
        return name
    try:
        return ParamName(name)
    except ValueError:
        pass
    if name in _ALIASES:
        return _ALIASES[name]
    raise UnknownParameterError(name)


Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

_ZERO_EXPS: Exponents = (0,) * NVARS


class LaurentPoly:
    """Integer Laurent polynomial in the six parameters."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != NVARS:
                raise ValueError(f"Exponent vector must have {NVARS} entries, got {exps}")
            if coeff:
                clean[exps] = int(coeff)
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({_ZERO_EXPS: 1})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({_ZERO_EXPS: value})

    @classmethod
    def variable(cls, param: Union[str, ParamName]) -> LaurentPoly:
        return cls.monomial({resolve_param(param): 1})

    @classmethod
    def monomial(
        cls,
        powers: Mapping[Union[str, ParamName], int] | Exponents,
        coeff: int = 1,
    ) -> LaurentPoly:
        """Build coeff times a product of parameter powers."""
        if isinstance(powers, Mapping):
            exps = [0] * NVARS
            for name, power in powers.items():
                exps[resolve_param(name).index] += power
            return cls({tuple(exps): coeff})
        return cls({tuple(powers): coeff})

    # -- inspection --------------------------------------------------------

    def terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self._terms.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (self.is_monomial() and _ZERO_EXPS in self._terms)

    def coefficient(self, exps: Exponents) -> int:
        return self._terms.get(tuple(exps), 0)

    def leading_term(self) -> tuple[Exponents, int]:
        if not self._terms:
            raise ValueError("Zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def degree(self, param: Union[str, ParamName]) -> int:
        """Largest exponent of param (0 for the zero polynomial)."""
        i = resolve_param(param).index
        return max((e[i] for e in self._terms), default=0)

    def min_degree(self, param: Union[str, ParamName]) -> int:
        i = resolve_param(param).index
        return min((e[i] for e in self._terms), default=0)

    def min_exponents(self) -> Exponents:
        if not self._terms:
            return _ZERO_EXPS
        return tuple(min(e[i] for e in self._terms) for i in range(NVARS))

    def max_exponents(self) -> Exponents:
        if not self._terms:
            return _ZERO_EXPS
        return tuple(max(e[i] for e in self._terms) for i in range(NVARS))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, coeff in rhs._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if not self.is_monomial() or abs(self.leading_term()[1]) != 1:
                raise ValueError("Only unit monomials have negative powers")
            exps, coeff = self.leading_term()
            return LaurentPoly({tuple(-e * -power for e in exps): coeff ** (-power)})
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def shift(self, exps: Exponents) -> LaurentPoly:
        """Multiply by the monomial with exponent vector exps."""
        return LaurentPoly(
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    def swap(self, a: Union[str, ParamName], b: Union[str, ParamName]) -> LaurentPoly:
        """Interchange two parameters."""
        i, j = resolve_param(a).index, resolve_param(b).index
        terms = {}
        for exps, coeff in self._terms.items():
            e = list(exps)
            e[i], e[j] = e[j], e[i]
            terms[tuple(e)] = coeff
        return LaurentPoly(terms)

    def exact_divide(self, other: LaurentPoly) -> LaurentPoly | None:
        """
        Return q with self == q * other, or None if no such Laurent polynomial exists.

        Division by leading terms in lex order. Exponents of any exact quotient
        lie in the box [min(self) - min(other), max(self) - max(other)], which
        bounds the search when other does not divide self.
        """
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        lo = tuple(a - b for a, b in zip(self.min_exponents(), other.min_exponents()))
        hi = tuple(a - b for a, b in zip(self.max_exponents(), other.max_exponents()))
        if any(a > b for a, b in zip(lo, hi)):
            return None

        lead_exps, lead_coeff = other.leading_term()
        remainder = dict(self._terms)
        quotient: dict[Exponents, int] = {}
        while remainder:
            exps = max(remainder)
            coeff = remainder[exps]
            if coeff % lead_coeff:
                return None
            t_exps = tuple(a - b for a, b in zip(exps, lead_exps))
            if any(t < a or t > b for t, a, b in zip(t_exps, lo, hi)):
                return None
            t_coeff = coeff // lead_coeff
            quotient[t_exps] = t_coeff
            for e, c in other._terms.items():
                key = tuple(a + b for a, b in zip(e, t_exps))
                value = remainder.get(key, 0) - t_coeff * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentPoly(quotient)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Mapping[Union[str, ParamName], Union[Scalar, str]]) -> Fraction:
        """Exact rational value at a point; every occurring parameter must be bound."""
        values: dict[ParamName, Fraction] = {
            resolve_param(k): Fraction(v) for k, v in point.items()
        }
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            value = Fraction(coeff)
            for param, power in zip(PARAMS, exps):
                if power == 0:
                    continue
                if param not in values:
                    raise UnboundParameterError(param.value)
                x = values[param]
                if power < 0 and x == 0:
                    raise ZeroDenominatorError(param.value)
                value *= x ** power
            total += value
        return total

    # -- text format -------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.terms():
            factors = [
                p.value if e == 1 else f"{p.value}^{e}"
                for p, e in zip(PARAMS, exps)
                if e != 0
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = " * ".join(factors)
            else:
                body = " * ".join([str(magnitude), *factors])
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def pretty(self) -> str:
        """Human-oriented rendering with Greek symbols."""
        text = str(self)
        for param in sorted(PARAMS, key=lambda p: -len(p.value)):
            text = re.sub(rf"\b{param.value}\b", param.symbol, text)
        return text

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the text format produced by str()."""
        return _Parser(text).parse()


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[^\W\d]\w*)|(?P<op>[-+*^]))")


class _Parser:
    """Recursive-descent parser for sums of signed monomial products."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = self._tokenise(text.strip())
        self.pos = 0

    def _tokenise(self, text: str) -> list[tuple[str, str]]:
        tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match or match.end() == pos:
                raise PolynomialParseError(self.text, f"unexpected character at position {pos}")
            kind = match.lastgroup or ""
            tokens.append((kind, match.group(kind)))
            pos = match.end()
        return tokens

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            raise PolynomialParseError(self.text, "unexpected end of input")
        self.pos += 1
        return token

    def parse(self) -> LaurentPoly:
        if not self.tokens:
            raise PolynomialParseError(self.text, "empty input")
        result = LaurentPoly.zero()
        first = True
        while self._peek() is not None:
            sign = 1
            token = self._peek()
            if token in (("op", "+"), ("op", "-")):
                sign = -1 if token[1] == "-" else 1
                self.pos += 1
            elif not first:
                raise PolynomialParseError(self.text, f"expected '+' or '-' before '{token[1]}'")
            result = result + self._term() * sign
            first = False
        return result

    def _term(self) -> LaurentPoly:
        value = self._factor()
        while self._peek() == ("op", "*"):
            self.pos += 1
            value = value * self._factor()
        return value

    def _factor(self) -> LaurentPoly:
        kind, text = self._take()
        if kind == "int":
            return LaurentPoly.constant(int(text))
        if kind != "name":
            raise PolynomialParseError(self.text, f"unexpected '{text}'")
        try:
            base = LaurentPoly.variable(text)
        except UnknownParameterError as e:
            raise PolynomialParseError(self.text, e.message) from e
        if self._peek() != ("op", "^"):
            return base
        self.pos += 1
        sign = 1
        if self._peek() == ("op", "-"):
            sign = -1
            self.pos += 1
        kind, text = self._take()
        if kind != "int":
            raise PolynomialParseError(self.text, f"expected an integer exponent, got '{text}'")
        return base ** (sign * int(text))


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product in normal form."""
    return a * b


def evaluate(
    p: LaurentPoly, point: Mapping[Union[str, ParamName], Union[Scalar, str]]
) -> Fraction:
    """Exact rational value of p at point."""
    return p.evaluate(point)


ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()

D = LaurentPoly.variable(ParamName.DELTA)
DL = LaurentPoly.variable(ParamName.DELTA_L)
DR = LaurentPoly.variable(ParamName.DELTA_R)
KL = LaurentPoly.variable(ParamName.KAPPA_L)
KR = LaurentPoly.variable(ParamName.KAPPA_R)
KLR = LaurentPoly.variable(ParamName.KAPPA_LR)
