"""Monomial and quasimonomial valuations given by a pair of weights.

A valuation here is ``mu_{r,s}`` at a point with local coordinates ``(z, w)``:
it sends a series to ``min(r*i + s*j)`` over the exponents ``(i, j)`` in its
support.  Polynomials are therefore handled as supports only, frozensets of
exponent pairs, which is all a monomial valuation can see.

The point where the weights live is an :class:`Anchor`: either the smooth
origin (coordinate axes ``Lz = {z=0}``, ``Lw = {w=0}``) or a satellite point
``E ∩ F`` of a blow-up model, with ``E = {z=0}`` and ``F = {w=0}``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .numerics import InvalidInputError, QuadNumber, as_quad, quad_sign

__all__ = [
    "AXIS_W",
    "AXIS_Z",
    "Anchor",
    "MonomialWeights",
    "ORIGIN",
    "Support",
    "center",
    "classify",
    "evaluate",
    "evaluate_ideal",
    "format_support",
    "log_discrepancy",
    "minkowski_sum",
    "normalize",
    "parse_support",
]

AXIS_Z = "Lz"
AXIS_W = "Lw"

Support = frozenset


def _support(terms: Iterable[tuple[int, int]]) -> frozenset:
    out = set()
    for i, j in terms:
        if i < 0 or j < 0:
            raise InvalidInputError(f"negative exponent in ({i}, {j})")
        out.add((int(i), int(j)))
    return frozenset(out)


_TERM = re.compile(r"^(?:z(?:\^(\d+))?)?\s*\*?\s*(?:w(?:\^(\d+))?)?$")


def parse_support(text: str) -> frozenset:
    """Parse ``z^i w^j`` terms joined by ``+`` (``1`` is the constant term)."""
    terms = []
    for raw in text.split("+"):
        t = raw.strip()
        if not t:
            raise InvalidInputError(f"empty term in {text!r}")
        if t == "1":
            terms.append((0, 0))
            continue
        m = _TERM.match(t)
        if not m or t in ("*",):
            raise InvalidInputError(f"cannot parse term {t!r}")
        has_z, has_w = "z" in t, "w" in t
        i = int(m.group(1) or 1) if has_z else 0
        j = int(m.group(2) or 1) if has_w else 0
        terms.append((i, j))
    return _support(terms)


def format_support(p: Iterable[tuple[int, int]]) -> str:
    def term(i, j):
        parts = []
        if i:
            parts.append("z" if i == 1 else f"z^{i}")
        if j:
            parts.append("w" if j == 1 else f"w^{j}")
        return " ".join(parts) or "1"

    return " + ".join(term(i, j) for i, j in sorted(p)) or "0"


def minkowski_sum(p: Iterable[tuple[int, int]], q: Iterable[tuple[int, int]]) -> frozenset:
    """Support of a generic product."""
    q = list(q)
    return frozenset((i + k, j + l) for i, j in p for k, l in q)


@dataclass(frozen=True)
class Anchor:
    """A point carrying adapted coordinates, with the data of its two curves.

    ``a_*`` are log-discrepancies and ``b_*`` the multiplicities of the maximal
    ideal along the curves through the point (boundary curves have ``a = 1``
    and ``b = 0``).  ``level`` is the length of the blow-up prefix in which the
    point lives.
    """

    first: str = AXIS_Z
    second: str = AXIS_W
    level: int = 0
    a_first: Fraction = Fraction(1)
    a_second: Fraction = Fraction(1)
    b_first: int = 0
    b_second: int = 0
    origin: bool = True

    def maximal_ideal(self) -> list[frozenset]:
        if self.origin:
            return [frozenset({(1, 0)}), frozenset({(0, 1)})]
        return [frozenset({(self.b_first, self.b_second)})]

    def swapped(self) -> Anchor:
        return replace(
            self,
            first=self.second,
            second=self.first,
            a_first=self.a_second,
            a_second=self.a_first,
            b_first=self.b_second,
            b_second=self.b_first,
        )


ORIGIN = Anchor()


@dataclass(frozen=True)
class MonomialWeights:
    """Weights ``(r, s) = (nu(z), nu(w))`` at ``anchor``."""

    r: QuadNumber
    s: QuadNumber
    anchor: Anchor = ORIGIN

    def __post_init__(self):
        r, s = as_quad(self.r), as_quad(self.s)
        if quad_sign(r) < 0 or quad_sign(s) < 0:
            raise InvalidInputError("weights must be non-negative")
        if not r and not s:
            raise InvalidInputError("weights must not both vanish")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    @property
    def slope(self) -> QuadNumber | None:
        """``s / r``, or ``None`` for the boundary direction ``r = 0``."""
        return None if not self.r else self.s / self.r

    def scaled(self, factor) -> MonomialWeights:
        return replace(self, r=self.r * factor, s=self.s * factor)

    def swapped(self) -> MonomialWeights:
        return MonomialWeights(self.s, self.r, self.anchor.swapped())

    def __str__(self) -> str:
        return f"({self.r}, {self.s}) at {self.anchor.first}∩{self.anchor.second}"


def _qmin(values):
    it = iter(values)
    best = next(it)
    for v in it:
        if v < best:
            best = v
    return best


def evaluate(w: MonomialWeights, p: Iterable[tuple[int, int]]):
    """``min(r*i + s*j)`` over the support; ``math.inf`` for the empty support."""
    p = list(p)
    if not p:
        return math.inf
    return _qmin(w.r * i + w.s * j for i, j in p)


def evaluate_ideal(w: MonomialWeights, gens: Sequence[Iterable[tuple[int, int]]]):
    """Minimum over listed generators.

    Exact for monomial ideals (and generic generators); for an arbitrary ideal
    this is only an upper bound, since cancellation is invisible on supports.
    """
    gens = [list(g) for g in gens]
    if not gens:
        raise InvalidInputError("an ideal needs at least one generator")
    vals = [evaluate(w, g) for g in gens]
    finite = [v for v in vals if v is not math.inf]
    return _qmin(finite) if finite else math.inf


def normalize(w: MonomialWeights) -> MonomialWeights:
    """Rescale so that the maximal ideal has value 1."""
    m = evaluate_ideal(w, w.anchor.maximal_ideal())
    if m is math.inf or not m:
        raise InvalidInputError(f"{w} does not dominate the maximal ideal")
    return w.scaled(QuadNumber(1) / m)


def classify(w: MonomialWeights) -> str:
    """``'divisorial'`` if ``r/s`` is rational (or a weight vanishes), else ``'irrational'``."""
    if not w.r or not w.s:
        return "divisorial"
    return "divisorial" if (w.r / w.s).is_rational() else "irrational"


def log_discrepancy(w: MonomialWeights) -> QuadNumber:
    return w.r * w.anchor.a_first + w.s * w.anchor.a_second


def center(w: MonomialWeights, model):
    """Center of ``w`` in a blow-up model; see :meth:`BlowupSequence.center`."""
    return model.center(w)
