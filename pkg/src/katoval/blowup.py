"""Sequences of point blow-ups and the combinatorics they carry.

Each exceptional prime remembers its multiplicity ``b`` (order of vanishing of
the maximal ideal), its log-discrepancy ``A`` and its current
self-intersection.  Over a smooth base the two coordinate axes ``Lz = {z=0}``
and ``Lw = {w=0}`` are tracked as non-compact boundary curves (``b = 0``,
``A = 1``) so that satellite points on an axis and monomial weights at the
origin need no special casing.  Boundary curves never enter the dual graph.

Sequences are persistent: :meth:`BlowupSequence.apply` returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .dualgraph import DualGraph, Vertex, fundamental_cycle, log_discrepancies
from .numerics import InvalidInputError
from .valuation import AXIS_W, AXIS_Z, Anchor, MonomialWeights, normalize

__all__ = [
    "BlowupError",
    "BlowupSequence",
    "Center",
    "Free",
    "Initial",
    "PrimeRecord",
    "Satellite",
    "Skeleton",
    "parse_steps",
    "format_steps",
    "retract",
    "toric_sequence",
    "weighted_blowup_divisor",
]


class BlowupError(ValueError):
    """An invalid step: unknown prime, non-adjacent pair, misplaced Initial."""


@dataclass(frozen=True)
class Initial:
    """Blow up the origin of the smooth base."""


@dataclass(frozen=True)
class Free:
    """Blow up a free point of ``on``.

    ``curve`` optionally names a new boundary curve passing transversally
    through that point; later steps may then use it in satellite pairs.
    """

    on: str
    curve: str | None = None


@dataclass(frozen=True)
class Satellite:
    first: str
    second: str


Step = Initial | Free | Satellite


@dataclass(frozen=True)
class PrimeRecord:
    id: str
    b: int
    A: Fraction
    self_intersection: int | None
    exceptional: bool
    created: int  # step number (1-based); 0 for base primes and axes
    genus: int = 0


class Center(NamedTuple):
    """Where a valuation is centred: ``kind`` is one of
    ``'prime'``, ``'satellite'``, ``'free'`` or ``'origin'``."""

    kind: str
    primes: tuple[str, ...]


# A location during weight tracking: either ("prime", X) or
# ("sat", X, Y, r, s) meaning monomial weights r on X = {z=0}, s on Y = {w=0}.
_Loc = tuple


class BlowupSequence:
    """An ordered list of blow-ups over a smooth germ or over a resolved base.

    ``base`` is ``None`` for the smooth origin, otherwise the dual graph of a
    good resolution whose primes are already exceptional (multiplicities come
    from the fundamental cycle, log-discrepancies from adjunction).
    """

    def __init__(self, steps: Iterable[Step] = (), base: DualGraph | None = None):
        self._steps = tuple(steps)
        self._base = base
        self._curves: dict[str, PrimeRecord] = {}
        self._adj: dict[str, set[str]] = {}
        self._order: list[str] = []
        self._centers: list[tuple[str, ...]] = []  # per step: pair or (host,)
        self._created: list[str] = []
        self._init_base()
        for n, step in enumerate(self._steps, 1):
            self._replay(n, step)

    # -- construction -------------------------------------------------------

    def _add(self, rec: PrimeRecord) -> None:
        self._curves[rec.id] = rec
        self._adj.setdefault(rec.id, set())
        if rec.exceptional:
            self._order.append(rec.id)

    def _link(self, u: str, v: str) -> None:
        self._adj[u].add(v)
        self._adj[v].add(u)

    def _unlink(self, u: str, v: str) -> None:
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def _init_base(self) -> None:
        if self._base is None:
            for axis in (AXIS_Z, AXIS_W):
                self._add(PrimeRecord(axis, 0, Fraction(1), None, False, 0))
            self._link(AXIS_Z, AXIS_W)
            return
        g = self._base
        if len(g) == 0:
            raise InvalidInputError("base graph must have at least one prime")
        a = log_discrepancies(g)
        b = fundamental_cycle(g)
        for v in g.vertices:
            self._add(PrimeRecord(v.id, b[v.id], a[v.id], v.self_intersection, True, 0, v.genus))
        for u, w in g.edges:
            self._link(u, w)

    def _fresh_id(self) -> str:
        n = len(self._created) + 1 + (len(self._base) if self._base is not None else 0)
        while f"E{n}" in self._curves:
            n += 1
        return f"E{n}"

    def _require(self, pid: str, n: int) -> PrimeRecord:
        if pid not in self._curves:
            raise BlowupError(f"step {n}: unknown prime {pid!r}")
        return self._curves[pid]

    def _bump(self, pid: str) -> None:
        rec = self._curves[pid]
        if rec.exceptional:
            self._curves[pid] = replace(rec, self_intersection=rec.self_intersection - 1)

    def _replay(self, n: int, step: Step) -> None:
        new = self._fresh_id()
        if isinstance(step, Initial):
            if self._base is not None or n != 1:
                raise BlowupError(f"step {n}: Initial must be the first step over a smooth base")
            self._unlink(AXIS_Z, AXIS_W)
            self._add(PrimeRecord(new, 1, Fraction(2), -1, True, n))
            self._link(new, AXIS_Z)
            self._link(new, AXIS_W)
            self._centers.append((AXIS_Z, AXIS_W))
        elif n == 1 and self._base is None:
            raise BlowupError("step 1 over a smooth base must be Initial")
        elif isinstance(step, Free):
            host = self._require(step.on, n)
            if not host.exceptional:
                raise BlowupError(f"step {n}: free points live on exceptional primes, not {step.on!r}")
            if step.curve is not None and step.curve in self._curves:
                raise BlowupError(f"step {n}: curve name {step.curve!r} already in use")
            self._bump(step.on)
            self._add(PrimeRecord(new, host.b, host.A + 1, -1, True, n))
            self._link(new, step.on)
            if step.curve is not None:
                self._add(PrimeRecord(step.curve, 0, Fraction(1), None, False, n))
                self._link(new, step.curve)
                self._centers.append((step.on, step.curve))
            else:
                self._centers.append((step.on,))
        elif isinstance(step, Satellite):
            x = self._require(step.first, n)
            y = self._require(step.second, n)
            if step.second not in self._adj[step.first]:
                raise BlowupError(f"step {n}: {step.first} and {step.second} do not meet")
            if not (x.exceptional or y.exceptional):
                raise BlowupError(f"step {n}: satellite pair must contain an exceptional prime")
            self._bump(step.first)
            self._bump(step.second)
            self._unlink(step.first, step.second)
            self._add(PrimeRecord(new, x.b + y.b, x.A + y.A, -1, True, n))
            self._link(new, step.first)
            self._link(new, step.second)
            self._centers.append((step.first, step.second))
        else:
            raise BlowupError(f"step {n}: unknown step {step!r}")
        self._created.append(new)

    def apply(self, step: Step) -> BlowupSequence:
        return BlowupSequence(self._steps + (step,), self._base)

    def extend(self, steps: Iterable[Step]) -> BlowupSequence:
        return BlowupSequence(self._steps + tuple(steps), self._base)

    def prefix(self, m: int) -> BlowupSequence:
        if not 0 <= m <= len(self._steps):
            raise InvalidInputError(f"prefix length {m} out of range 0..{len(self._steps)}")
        return BlowupSequence(self._steps[:m], self._base)

    # -- queries ------------------------------------------------------------

    @property
    def steps(self) -> tuple[Step, ...]:
        return self._steps

    @property
    def base(self) -> DualGraph | None:
        return self._base

    @property
    def smooth_base(self) -> bool:
        return self._base is None

    def __len__(self) -> int:
        return len(self._steps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlowupSequence):
            return NotImplemented
        return self._steps == other._steps and self._base == other._base

    def __hash__(self) -> int:
        return hash(self._steps)

    def __repr__(self) -> str:
        return f"BlowupSequence({list(self._steps)!r})"

    @property
    def primes(self) -> list[str]:
        """Exceptional primes: base primes first, then in creation order."""
        return list(self._order)

    @property
    def created(self) -> list[str]:
        """The prime created by each step, in step order."""
        return list(self._created)

    @property
    def boundary_curves(self) -> list[str]:
        return [c for c, r in self._curves.items() if not r.exceptional]

    def record(self, pid: str) -> PrimeRecord:
        try:
            return self._curves[pid]
        except KeyError:
            raise BlowupError(f"unknown prime {pid!r}") from None

    def __contains__(self, pid: str) -> bool:
        return pid in self._curves

    def neighbors(self, pid: str) -> list[str]:
        self.record(pid)
        return sorted(self._adj[pid], key=self._sort_key)

    def meets(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def center_of_step(self, n: int) -> tuple[str, ...]:
        """Curves through the point blown up at step ``n`` (1-based)."""
        return self._centers[n - 1]

    def _sort_key(self, pid: str):
        rec = self._curves[pid]
        return (not rec.exceptional, self._order.index(pid) if rec.exceptional else 0, pid)

    def to_dual_graph(self) -> DualGraph:
        if not self._order:
            raise InvalidInputError("empty sequence has no exceptional primes")
        verts = tuple(
            Vertex(p, self._curves[p].genus, self._curves[p].self_intersection) for p in self._order
        )
        edges = set()
        for u in self._order:
            for v in self._adj[u]:
                if self._curves[v].exceptional:
                    edges.add(tuple(sorted((u, v), key=self._order.index)))
        return DualGraph(verts, tuple(sorted(edges, key=lambda e: (self._order.index(e[0]), self._order.index(e[1])))))

    def skeleton(self) -> Skeleton:
        return Skeleton(self)

    def anchor(self, first: str, second: str, level: int | None = None) -> Anchor:
        """Adapted coordinates at the satellite point ``first ∩ second``."""
        level = len(self) if level is None else level
        model = self if level == len(self) else self.prefix(level)
        if not model.meets(first, second):
            raise BlowupError(f"{first} and {second} do not meet at level {level}")
        x, y = model.record(first), model.record(second)
        origin = not x.exceptional and not y.exceptional
        return Anchor(first, second, level, x.A, y.A, x.b, y.b, origin)

    def divisorial(self, pid: str, level: int | None = None) -> MonomialWeights:
        """The normalized valuation ``ord_E / b_E`` in canonical form."""
        level = len(self) if level is None else level
        model = self if level == len(self) else self.prefix(level)
        rec = model.record(pid)
        if not rec.exceptional:
            raise BlowupError(f"{pid!r} is not an exceptional prime")
        other = model.neighbors(pid)
        if not other:
            raise BlowupError(f"{pid!r} meets no other curve; no adapted chart available")
        return MonomialWeights(Fraction(1, rec.b), 0, model.anchor(pid, other[0], level))

    # -- weight tracking ----------------------------------------------------

    def _forward(self, loc: _Loc, start: int, stop: int) -> _Loc:
        for n in range(start + 1, stop + 1):
            loc = _settle(loc)
            if loc[0] == "prime":
                return loc
            _, x, y, r, s = loc
            c = self._centers[n - 1]
            if len(c) != 2 or set(c) != {x, y}:
                continue
            g = self._created[n - 1]
            if r == s:
                loc = ("prime", g)
            elif r < s:
                loc = ("sat", g, y, r, s - r)
            else:
                loc = ("sat", x, g, r - s, s)
        return _settle(loc)

    def _backward(self, loc: _Loc, start: int, stop: int, collapse: bool) -> _Loc:
        n = start
        while n > stop:
            g = self._created[n - 1]
            c = self._centers[n - 1]
            if loc[0] == "prime":
                if loc[1] == g:
                    loc = ("sat", c[0], c[1], 1, 1) if len(c) == 2 else _free_point(c[0], collapse, n)
                n -= 1
                continue
            _, x, y, r, s = loc
            if g not in (x, y):
                n -= 1
                continue
            gw, ow, other = (r, s, y) if x == g else (s, r, x)
            if len(c) == 2 and other in c:
                p, q = c
                if other == q:  # G-side is {z=0} at the old point
                    loc = ("sat", p, q, gw, gw + ow)
                else:
                    loc = ("sat", p, q, gw + ow, gw)
                n -= 1
            elif len(c) == 1 and other == c[0]:
                loc = _free_point(c[0], collapse, n)
                n -= 1
            else:
                # a free point on G; its image is the centre of step n
                if not collapse:
                    raise BlowupError(f"weights are not monomial below step {n}")
                loc = ("prime", g)
        return loc

    def _finalize(self, loc: _Loc, level: int) -> MonomialWeights:
        loc = _settle(loc)
        model = self.prefix(level)
        if loc[0] == "prime":
            return model.divisorial(loc[1])
        _, x, y, r, s = loc
        ex, ey = model.record(x).exceptional, model.record(y).exceptional
        if ex and ey or not (ex or ey):
            return normalize(MonomialWeights(r, s, model.anchor(x, y)))
        return model.divisorial(x if ex else y)

    def locate(self, w: MonomialWeights, level: int | None = None) -> _Loc:
        """Track ``w`` from its anchor level up to ``level`` (default: the end)."""
        level = len(self) if level is None else level
        a = w.anchor
        if a.level > level:
            raise BlowupError("weights are anchored deeper than the target model")
        if a.level > len(self) or not self.prefix(a.level).meets(a.first, a.second):
            raise BlowupError(f"anchor {a.first}∩{a.second} is not a point of this model")
        return self._forward(("sat", a.first, a.second, w.r, w.s), a.level, level)

    def center(self, w: MonomialWeights) -> Center:
        loc = self.locate(w)
        if loc[0] == "prime":
            return Center("prime", (loc[1],))
        _, x, y, _, _ = loc
        ex, ey = self._curves[x].exceptional, self._curves[y].exceptional
        if ex and ey:
            return Center("satellite", (x, y))
        if ex or ey:
            return Center("free", (x if ex else y,))
        return Center("origin", ())

    def pull_back(self, pid: str, level: int = 0) -> tuple[str, str, object, object] | tuple[str]:
        """Exact weights of ``ord_E`` at a point of the level-``level`` model.

        Returns ``(X, Y, r, s)``, or ``(X,)`` when the valuation is a prime of
        that model.  Raises if a free blow-up in the ancestry makes the
        valuation non-monomial there.
        """
        self.record(pid)
        loc = self._backward(("prime", pid), len(self), level, collapse=False)
        return (loc[1],) if loc[0] == "prime" else loc[1:]

    def origin_weights(self, pid: str) -> tuple[int, int] | None:
        """``(ord_E z, ord_E w)`` for toric sequences; ``None`` if not monomial."""
        if not self.smooth_base:
            return None
        try:
            loc = self.pull_back(pid, 0)
        except BlowupError:
            return None
        x, y, r, s = loc
        return (r, s) if (x, y) == (AXIS_Z, AXIS_W) else (s, r)

    # -- text format --------------------------------------------------------

    @classmethod
    def from_script(cls, text: str, base: DualGraph | None = None) -> BlowupSequence:
        return cls(parse_steps(text), base)

    def to_script(self) -> str:
        return format_steps(self._steps)


def _settle(loc: _Loc) -> _Loc:
    if loc[0] == "sat":
        _, x, y, r, s = loc
        if not s:
            return ("prime", x)
        if not r:
            return ("prime", y)
    return loc


def _free_point(host: str, collapse: bool, n: int) -> _Loc:
    if not collapse:
        raise BlowupError(f"step {n} blows up a free point; weights are not monomial below it")
    return ("prime", host)


# -- the skeleton -------------------------------------------------------------

class Skeleton:
    """Dual graph plus the segment ``r*b_E + s*b_F = 1`` on every edge."""

    def __init__(self, seq: BlowupSequence):
        self.sequence = seq
        self.graph = seq.to_dual_graph()

    def segment(self, e: str, f: str) -> tuple[int, int]:
        """Coefficients ``(b_E, b_F)`` of the normalization on edge ``E-F``."""
        if f not in self.graph.neighbors(e):
            raise BlowupError(f"{e} and {f} are not adjacent")
        return self.sequence.record(e).b, self.sequence.record(f).b

    def endpoints(self, e: str, f: str) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        be, bf = self.segment(e, f)
        return (Fraction(1, be), Fraction(0)), (Fraction(0), Fraction(1, bf))

    def point(self, e: str, f: str, t) -> MonomialWeights:
        """The point at parameter ``t`` in ``[0, 1]`` from ``ν_E`` to ``ν_F``."""
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise InvalidInputError("t must lie in [0, 1]")
        be, bf = self.segment(e, f)
        return MonomialWeights((1 - t) / be, t / bf, self.sequence.anchor(e, f))


# -- retraction ---------------------------------------------------------------

def retract(w: MonomialWeights, fine: BlowupSequence, level: int) -> MonomialWeights:
    """Retraction onto the skeleton of the length-``level`` prefix of ``fine``.

    A free centre gives ``ν_E``; a satellite centre gives the normalized
    monomial valuation in adapted coordinates there.
    """
    if not 0 <= level <= len(fine):
        raise BlowupError(f"level {level} is not a prefix of a {len(fine)}-step sequence")
    a = w.anchor
    if a.level <= level:
        loc = fine.locate(w, level)
    else:
        fine.locate(w, a.level)  # validates the anchor
        loc = fine._backward(("sat", a.first, a.second, w.r, w.s), a.level, level, collapse=True)
    if level == 0 and not fine.smooth_base:
        loc = _settle(loc)
    return fine._finalize(loc, level)


# -- toric sequences ----------------------------------------------------------

def toric_sequence(rays: Sequence[tuple[int, int]]) -> tuple[BlowupSequence, dict[tuple[int, int], str]]:
    """Minimal satellite sequence whose primes include every primitive ray.

    A ray ``(r, s)`` is the divisor with ``(ord z, ord w) = (r, s)``.  Returns
    the sequence and the map from every ray created to its prime.
    """
    steps: list[Step] = []
    names = {(1, 0): AXIS_Z, (0, 1): AXIS_W}
    count = 0
    for r, s in rays:
        if r <= 0 or s <= 0 or gcd(r, s) != 1:
            raise InvalidInputError(f"ray ({r}, {s}) must be positive and primitive")
        left, right = (1, 0), (0, 1)
        while True:
            mid = (left[0] + right[0], left[1] + right[1])
            if mid not in names:
                steps.append(Initial() if not steps else Satellite(names[left], names[right]))
                count += 1
                names[mid] = f"E{count}"
            if mid == (r, s):
                break
            # s/r is the slope; compare with the mediant's slope
            if s * mid[0] < mid[1] * r:
                right = mid
            else:
                left = mid
    rays_to_prime = {k: v for k, v in names.items() if v not in (AXIS_Z, AXIS_W)}
    return BlowupSequence(steps), rays_to_prime


def weighted_blowup_divisor(r: int, s: int) -> BlowupSequence:
    """Stern-Brocot sequence ending in the divisor ``E_{s/r}`` of weight ``(r, s)``."""
    if not (isinstance(r, int) and isinstance(s, int)) or r <= 0 or s <= 0:
        raise InvalidInputError("weights must be positive integers")
    if gcd(r, s) != 1:
        raise InvalidInputError(f"weights ({r}, {s}) are not coprime")
    return toric_sequence([(r, s)])[0]


# -- script format ------------------------------------------------------------

def parse_steps(text: str) -> list[Step]:
    """Parse ``init`` / ``free <id> [curve=<name>]`` / ``sat <id> <id>`` lines."""
    out: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts == ["init"]:
            out.append(Initial())
        elif parts[0] == "free" and len(parts) == 2:
            out.append(Free(parts[1]))
        elif parts[0] == "free" and len(parts) == 3 and parts[2].startswith("curve="):
            out.append(Free(parts[1], parts[2][6:]))
        elif parts[0] == "sat" and len(parts) == 3:
            out.append(Satellite(parts[1], parts[2]))
        else:
            raise BlowupError(f"line {lineno}: cannot parse {raw.strip()!r}")
    return out


def format_steps(steps: Iterable[Step]) -> str:
    lines = []
    for st in steps:
        if isinstance(st, Initial):
            lines.append("init")
        elif isinstance(st, Free):
            lines.append(f"free {st.on}" + (f" curve={st.curve}" if st.curve else ""))
        else:
            lines.append(f"sat {st.first} {st.second}")
    return "\n".join(lines) + ("\n" if lines else "")
