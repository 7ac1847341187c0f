"""Strict germs in normal form and their action on monomial weights.

Three normal forms are supported::

    Class2   (lambda*z, z^c*w + P(z))
    Class4   (z^a, mu*z^c*w + P(z) + eps*z^(ac/(a-1)))
    Class6   (z^a * w^b, z^c * w^d)

Only supports matter here.  For Class 6 the action on weights is exact.  For
Classes 2 and 4 it is the *monomial shadow*: supports cannot see
cancellations along an invariant curve, so the fixed slope computed is the
monomial approximation, and the eigenvaluation type comes from the class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

from .numerics import InvalidInputError, QuadNumber, is_square, quad_sign
from .valuation import MonomialWeights, classify, normalize

__all__ = [
    "Class2",
    "Class4",
    "Class6",
    "EigenReport",
    "InvalidGermError",
    "check",
    "contracted_curves",
    "eigenvaluation",
    "iterate_weights",
    "parse_germ",
    "pushforward_weights",
    "shadow_slope",
    "topdeg",
    "topdeg_fk",
    "validate",
]


class InvalidGermError(ValueError):
    """A normal form violating the parameter constraints of its class."""


def _ints(values: Iterable[int]) -> frozenset:
    return frozenset(int(k) for k in values)


@dataclass(frozen=True)
class Class2:
    c: int
    P_support: frozenset = field(default_factory=frozenset)
    lambda_modulus_lt_one: bool = True

    def __post_init__(self):
        object.__setattr__(self, "P_support", _ints(self.P_support))


@dataclass(frozen=True)
class Class4:
    a: int
    c: int
    P_support: frozenset = field(default_factory=frozenset)
    special: bool = False
    epsilon_nonzero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "P_support", _ints(self.P_support))

    @property
    def resonant_exponent(self) -> Fraction:
        """``ac/(a-1)``, integral exactly when the form may be special."""
        return Fraction(self.a * self.c, self.a - 1)


@dataclass(frozen=True)
class Class6:
    a: int
    b: int
    c: int
    d: int

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def discriminant(self) -> int:
        return self.trace**2 - 4 * self.det


Germ = Class2 | Class4 | Class6


def validate(nf: Germ) -> list[str]:
    """Every violated constraint, as a list of messages (empty means valid)."""
    errs: list[str] = []
    if isinstance(nf, Class2):
        if nf.c < 1:
            errs.append(f"c must be positive, got {nf.c}")
        bad = sorted(k for k in nf.P_support if not 1 <= k <= nf.c)
        if bad:
            errs.append(f"P exponents must lie in 1..c={nf.c}, got {bad}")
        if not nf.lambda_modulus_lt_one:
            errs.append("|lambda| < 1 is required")
    elif isinstance(nf, Class4):
        if nf.a < 2:
            errs.append(f"a must be at least 2, got {nf.a}")
        if nf.c < 1:
            errs.append(f"c must be positive, got {nf.c}")
        bad = sorted(k for k in nf.P_support if not 1 <= k <= nf.c)
        if bad:
            errs.append(f"P exponents must lie in 1..c={nf.c}, got {bad}")
        g = nf.a
        for k in nf.P_support:
            g = gcd(g, k)
        if g != 1:
            errs.append(f"gcd of a and P exponents is {g}, must be 1")
        if nf.a >= 2 and nf.special and nf.resonant_exponent.denominator != 1:
            errs.append(f"special form needs ac/(a-1) integral, got {nf.resonant_exponent}")
        if nf.epsilon_nonzero and not nf.special:
            errs.append("eps may be nonzero only for a special form")
    elif isinstance(nf, Class6):
        if min(nf.a, nf.b, nf.c, nf.d) < 0:
            errs.append("matrix entries must be non-negative")
        if abs(nf.det) != 1:
            errs.append(f"|det A| must be 1 for a strict germ, got det {nf.det}")
        sq = _square(nf.matrix)
        if not all(x > 0 for row in sq for x in row):
            errs.append(f"A^2 = {sq} must have positive entries")
    else:
        errs.append(f"unknown normal form {nf!r}")
    return errs


def check(nf: Germ) -> Germ:
    errs = validate(nf)
    if errs:
        raise InvalidGermError("; ".join(errs))
    return nf


def _square(m):
    (a, b), (c, d) = m
    return ((a * a + b * c, a * b + b * d), (c * a + d * c, c * b + d * d))


# -- degrees ------------------------------------------------------------------

def topdeg(nf: Germ) -> int:
    check(nf)
    return abs(nf.det) if isinstance(nf, Class6) else 1


def topdeg_fk(a: int, c: int, k: int) -> int:
    """Topological degree of ``(z^a, z^c w + z^k)``."""
    if a < 1 or c < 1 or k < 1:
        raise InvalidInputError("a, c, k must be positive")
    return gcd(a, k) if k <= c else a


# -- weights ------------------------------------------------------------------

def _k0(nf) -> int | None:
    return min(nf.P_support) if nf.P_support else None


def _w_pieces(nf) -> list[tuple[int, int]]:
    """Pieces ``(p, q)`` of ``nu(w o f) = min(p*r + q*s)`` for Classes 2/4."""
    pieces = [(nf.c, 1)]
    if nf.P_support:
        pieces.append((_k0(nf), 0))
    if isinstance(nf, Class4) and nf.epsilon_nonzero:
        pieces.append((int(nf.resonant_exponent), 0))
    return pieces


def pushforward_weights(nf: Germ, w: MonomialWeights) -> MonomialWeights:
    """Weights of ``f_* mu`` at the origin: ``(mu(z o f), mu(w o f))``."""
    check(nf)
    if not w.anchor.origin:
        raise InvalidInputError("germ weights must be anchored at the origin")
    r, s = w.r, w.s
    if isinstance(nf, Class6):
        return MonomialWeights(nf.a * r + nf.b * s, nf.c * r + nf.d * s, w.anchor)
    s_new = min(p * r + q * s for p, q in _w_pieces(nf))
    r_new = r if isinstance(nf, Class2) else nf.a * r
    return MonomialWeights(r_new, s_new, w.anchor)


def shadow_slope(nf: Class2 | Class4) -> Fraction | None:
    """Attracting fixed point of the slope map ``t = s/r`` (``None`` means infinite).

    The map is ``t -> min(p + q*t) / scale`` over the pieces; for ``q/scale < 1``
    each increasing piece has the fixed point ``p / (scale - q)``, and the
    fixed point of the minimum is the smallest of these.
    """
    check(nf)
    scale = 1 if isinstance(nf, Class2) else nf.a
    fixed = [Fraction(p, scale - q) for p, q in _w_pieces(nf) if q < scale]
    return min(fixed) if fixed else None


# -- eigenvaluations ----------------------------------------------------------

@dataclass(frozen=True)
class EigenReport:
    type: str
    shadow_slope: QuadNumber | None
    eigenvalue: QuadNumber | None = None
    normalized_weights: MonomialWeights | None = None
    component_action: str | None = None
    warnings: tuple[str, ...] = ()


def _perron(nf: Class6) -> tuple[QuadNumber, tuple[QuadNumber, QuadNumber]]:
    disc = nf.discriminant
    lam = (QuadNumber(nf.trace) + QuadNumber.sqrt(disc)) / 2
    # (A - lam) v = 0  with  v = (b, lam - a)
    v = (QuadNumber(nf.b), lam - nf.a)
    if not v[0]:
        v = (lam - nf.d, QuadNumber(nf.c))
    m = v[0] if v[0] < v[1] else v[1]
    v = (v[0] / m, v[1] / m)
    av = (nf.a * v[0] + nf.b * v[1], nf.c * v[0] + nf.d * v[1])
    if av != (lam * v[0], lam * v[1]):
        raise ArithmeticError("eigenvector check failed")
    return lam, v


def _component_action(nf: Class6, v) -> str:
    """Do the two sides of the eigen-direction stay put or swap?

    Probe with the boundary directions (1, 0) and (0, 1), which lie on
    opposite sides of ``v``, and compare the side of each image.
    """

    def side(x, y):  # sign of the cross product v x (x, y)
        return quad_sign(v[0] * y - v[1] * x)

    below, above = side(1, 0), side(0, 1)
    after_below, after_above = side(nf.a, nf.c), side(nf.b, nf.d)
    if below == after_below and above == after_above:
        action = "preserves"
    elif below == after_above and above == after_below:
        action = "switches"
    else:
        raise ArithmeticError("probe slopes did not separate")
    if (action == "preserves") != (nf.det == 1):
        raise ArithmeticError("component action disagrees with the sign of det")
    return action


def eigenvaluation(nf: Germ) -> EigenReport:
    check(nf)
    if isinstance(nf, Class6):
        warnings = ()
        lam, v = _perron(nf)
        w = MonomialWeights(v[0], v[1])
        kind = "irrational" if not is_square(nf.discriminant) else "divisorial"
        if kind == "divisorial":
            warnings = ("rational eigen-direction: input is not a strict normal form",)
        return EigenReport(kind, v[1] / v[0], lam, w, _component_action(nf, v), warnings)
    t = shadow_slope(nf)
    kind = "curve" if isinstance(nf, Class2) else "infinitely_singular"
    return EigenReport(kind, None if t is None else QuadNumber(t))


def iterate_weights(nf: Germ, w: MonomialWeights, n: int) -> list[MonomialWeights]:
    """``[normalize(f_*^k w) for k in range(n)]``."""
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    out = [normalize(w)]
    for _ in range(n - 1):
        out.append(normalize(pushforward_weights(nf, out[-1])))
    return out


def contracted_curves(nf: Germ) -> list[tuple[str, MonomialWeights]]:
    """Coordinate curves contracted by ``f`` with the weights of their image divisor.

    The curve ``{z=0}`` has valuation ``ord_z``, weights ``(1, 0)``, so its
    image is the first column ``(a, c)``; ``{w=0}`` goes to ``(b, d)``.
    """
    check(nf)
    if isinstance(nf, Class6):
        images = (("{z=0}", nf.a, nf.c), ("{w=0}", nf.b, nf.d))
        # a curve is contracted iff both coordinates vanish on its image
        out = [(tag, MonomialWeights(r, s)) for tag, r, s in images if r and s]
    else:
        out = [("{z=0}", pushforward_weights(nf, MonomialWeights(1, 0)))]
    for _, w in out:
        assert classify(w) == "divisorial"
    return out


# -- text format --------------------------------------------------------------

def _bool(v: str) -> bool:
    low = v.lower()
    if low in ("1", "true", "yes"):
        return True
    if low in ("0", "false", "no"):
        return False
    raise InvalidInputError(f"not a boolean: {v!r}")


def _klist(v: str) -> frozenset:
    return frozenset(int(x) for x in v.split(",") if x.strip())


def parse_germ(text: str) -> Germ:
    """Parse ``class6 a b c d``, ``class4 a=.. c=.. P=.. special=.. eps=..`` or ``class2 c=.. P=..``."""
    parts = text.split()
    if not parts:
        raise InvalidInputError("empty germ description")
    kind, args = parts[0].lower(), parts[1:]
    try:
        if kind == "class6":
            if len(args) != 4:
                raise InvalidInputError("class6 takes four integers a b c d")
            return Class6(*(int(x) for x in args))
        opts = dict(a.split("=", 1) for a in args)
        if kind == "class2":
            unknown = set(opts) - {"c", "P"}
            if unknown or "c" not in opts:
                raise InvalidInputError(f"class2 needs c=, optional P=; got {sorted(opts)}")
            return Class2(int(opts["c"]), _klist(opts.get("P", "")))
        if kind == "class4":
            unknown = set(opts) - {"a", "c", "P", "special", "eps"}
            if unknown or not {"a", "c"} <= set(opts):
                raise InvalidInputError(f"class4 needs a=, c=; got {sorted(opts)}")
            return Class4(
                int(opts["a"]),
                int(opts["c"]),
                _klist(opts.get("P", "")),
                _bool(opts.get("special", "false")),
                _bool(opts.get("eps", "false")),
            )
    except ValueError as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"cannot parse germ description {text!r}") from None
    raise InvalidInputError(f"unknown germ class {parts[0]!r}")
