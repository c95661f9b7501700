"""Exact rational target vectors for the inverse centrality problem."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .errors import ParseError, ValidationError


def parse_rational(token: str) -> Fraction:
    """Parse "p/q" or a decimal literal into an exact Fraction."""
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {token!r}") from exc


@dataclass(frozen=True)
class CentralityTarget:
    """Positive rational vector c, with componentwise squares precomputed.

    values[k] is the entry for vertex k+1; use :meth:`value` /
    :meth:`square` for 1-indexed access.
    """

    values: Tuple[Fraction, ...]
    squares: Tuple[Fraction, ...]

    @classmethod
    def from_values(cls, values: Iterable[Fraction | int]) -> "CentralityTarget":
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise ValidationError("target vector is empty")
        for k, v in enumerate(vals):
            if v <= 0:
                raise ValidationError(f"target entry {k + 1} is not positive: {v}")
        return cls(values=vals, squares=tuple(v * v for v in vals))

    @property
    def n(self) -> int:
        return len(self.values)

    def value(self, v: int) -> Fraction:
        return self.values[v - 1]

    def square(self, v: int) -> Fraction:
        return self.squares[v - 1]

    def sum_squares(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.squares[v - 1] for v in vertices), Fraction(0))

    def scaled(self, alpha: Fraction | int) -> "CentralityTarget":
        alpha = Fraction(alpha)
        if alpha <= 0:
            raise ValidationError(f"scale factor must be positive, got {alpha}")
        return CentralityTarget.from_values(v * alpha for v in self.values)


def parse_target(text: str) -> CentralityTarget:
    """Parse a target vector document: one rational per line.

    Entries are "p/q" or decimal literals (converted exactly). Lines
    starting with '#' and blank lines are skipped.
    """
    values = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        values.append(parse_rational(ln))
    if not values:
        raise ParseError("empty target vector document")
    return CentralityTarget.from_values(values)
