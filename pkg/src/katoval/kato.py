"""Kato data at the combinatorial level and the surfaces they glue to.

A Kato datum is a modification ``pi: Y' -> (Y, y0)`` together with a marked
region of ``Y'`` where a local isomorphism ``sigma: (Y, y0) -> (Y', y1)``
lands.  Everything is recorded combinatorially:

* over a smooth base the mark is a point, either a satellite point ``P ∩ Q``
  (with ``sigma({z=0}) ⊂ P`` and ``sigma({w=0}) ⊂ Q``) or a free point of
  ``P`` (with ``sigma({z=0}) ⊂ P``);
* over a resolved quotient singularity the mark is a chain of primes of
  ``Y'`` isomorphic to the base chain, listed in base order.

Gluing the shell of ``Y'`` produces a compact surface whose curves are the
primes of ``Y'`` outside the marked region.  Each prime that runs into the
marked region closes up through ``sigma``; the gluing table records on which
prime that branch lands.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .blowup import BlowupSequence, Free, Initial, Satellite, format_steps, parse_steps, toric_sequence
from .dualgraph import DualGraph, log_discrepancies, quotient_chain
from .germdyn import Class6, EigenReport, check
from .numerics import InvalidInputError, hj_value
from .valuation import AXIS_W, AXIS_Z, MonomialWeights

__all__ = [
    "CurveConfig",
    "Glue",
    "KatoDatum",
    "KatoError",
    "Mark",
    "SurfaceCurve",
    "classify_configuration",
    "classify_surface",
    "compose",
    "datum_from_class6",
    "jacobian_divisor_coeffs",
    "jacobian_gap",
    "minimal_model",
    "quotient_family_datum",
    "surface_curves",
    "trivial_datum",
]


class KatoError(ValueError):
    """Inconsistent Kato datum (bad mark, partial gluing, base mismatch)."""


@dataclass(frozen=True)
class Mark:
    """``kind`` is ``'origin'`` (trivial datum), ``'free'``, ``'satellite'`` or ``'chain'``."""

    kind: str
    primes: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind == "origin":
            return "origin"
        if self.kind == "chain":
            return "chain " + ",".join(self.primes)
        return ",".join(self.primes)


@dataclass(frozen=True, order=True)
class Glue:
    """The branch of ``owner`` through the marked region lands on ``target``.

    ``via`` lists the boundary curves the branch runs along over a smooth
    base; every blow-up centred on one of them lowers the glued
    self-intersection by 1.
    """

    owner: str
    target: str
    via: tuple[str, ...] = ()

    @property
    def mode(self) -> str:
        return "node" if self.owner == self.target else "free"


@dataclass(frozen=True)
class KatoDatum:
    modification: BlowupSequence
    mark: Mark
    gluing: tuple[Glue, ...] = ()
    base_type: tuple[int, int] | None = None
    labels: Mapping[str, str] = field(default_factory=dict, compare=False)
    singular_points: tuple[tuple[tuple[str, ...], tuple[int, int]], ...] = field(default=(), compare=False)

    def __post_init__(self):
        seq = self.modification
        object.__setattr__(self, "labels", dict(self.labels))
        _check_mark(seq, self.mark)
        if self.gluing:
            glue = tuple(sorted(self.gluing))
            if not seq.smooth_base:
                expected = {g.owner for g in derive_gluing(seq, self.mark)}
                given = {g.owner for g in glue}
                if given != expected:
                    raise KatoError(
                        f"gluing must cover exactly the primes meeting the mark: "
                        f"missing {sorted(expected - given)}, extra {sorted(given - expected)}"
                    )
            for g in glue:
                for pid in (g.owner, g.target):
                    if pid not in seq or not seq.record(pid).exceptional:
                        raise KatoError(f"gluing refers to unknown prime {pid!r}")
        else:
            glue = derive_gluing(seq, self.mark)
        object.__setattr__(self, "gluing", glue)

    @property
    def smooth_base(self) -> bool:
        return self.modification.smooth_base

    @property
    def is_trivial(self) -> bool:
        return len(self.modification) == 0

    def label(self, pid: str) -> str:
        return self.labels.get(pid, pid)

    def correspondence(self) -> dict[str, str]:
        """Base prime ``E`` to the prime ``sigma(E)`` of ``Y'`` (chain marks)."""
        if self.mark.kind != "chain":
            raise KatoError("a prime correspondence needs a chain mark")
        return dict(zip(self.modification.base.ids, self.mark.primes))

    def push(self, w: MonomialWeights) -> tuple:
        """Weights of ``f_* mu_{r,s}`` at the origin for a satellite mark.

        ``sigma`` carries the weights to the marked point ``P ∩ Q``; pulling
        ``P ∩ Q`` back to the origin gives the monomial action of ``f``.
        """
        if self.mark.kind != "satellite" or not self.smooth_base:
            raise KatoError("push is defined for satellite marks over a smooth base")
        p, q = self.mark.primes
        seq = self.modification
        x, y, r, s = seq._backward(("sat", p, q, w.r, w.s), len(seq), 0, collapse=False)[1:]
        return (r, s) if (x, y) == (AXIS_Z, AXIS_W) else (s, r)

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        seq = self.modification
        lines = ["base smooth" if self.base_type is None else f"base quotient {self.base_type[0]} {self.base_type[1]}"]
        lines += format_steps(seq.steps).splitlines()
        if self.mark.kind != "origin":
            lines.append(f"mark {self.mark}")
        if not self.smooth_base:
            lines += [f"glue {g.owner} -> {g.target}@{g.mode}" for g in self.gluing]
        lines += [f"label {k} {v}" for k, v in sorted(self.labels.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> KatoDatum:
        """Parse the datum format (see README); errors name the line."""
        base_type = None
        step_lines: list[str] = []
        mark = None
        gluing: list[Glue] = []
        labels: dict[str, str] = {}
        seen_base = False
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "base":
                    if seen_base:
                        raise ValueError
                    seen_base = True
                    if parts[1:] == ["smooth"]:
                        base_type = None
                    elif parts[1] == "quotient" and len(parts) == 4:
                        base_type = (int(parts[2]), int(parts[3]))
                    else:
                        raise ValueError
                elif parts[0] in ("init", "free", "sat"):
                    step_lines.append(line)
                elif parts[0] == "mark":
                    if len(parts) == 3 and parts[1] == "chain":
                        mark = Mark("chain", tuple(parts[2].split(",")))
                    elif len(parts) == 2:
                        ids = tuple(parts[1].split(","))
                        if len(ids) not in (1, 2):
                            raise ValueError
                        mark = Mark("free" if len(ids) == 1 else "satellite", ids)
                    else:
                        raise ValueError
                elif parts[0] == "glue" and len(parts) == 4 and parts[2] == "->":
                    target, _, mode = parts[3].partition("@")
                    if mode not in ("", "free", "node"):
                        raise ValueError
                    g = Glue(parts[1], target)
                    if mode and mode != g.mode:
                        raise KatoError(f"line {lineno}: @{mode} does not match {parts[1]} -> {target}")
                    gluing.append(g)
                elif parts[0] == "label" and len(parts) == 3:
                    labels[parts[1]] = parts[2]
                else:
                    raise ValueError
            except (ValueError, IndexError) as exc:
                if isinstance(exc, KatoError):
                    raise
                raise KatoError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
        if not seen_base:
            raise KatoError("missing 'base' line")
        base = None if base_type is None else quotient_chain(*base_type)
        seq = BlowupSequence(parse_steps("\n".join(step_lines)), base)
        if mark is None:
            mark = _identity_mark(seq)
            if len(seq):
                raise KatoError("missing 'mark' line")
        if gluing and seq.smooth_base:
            raise KatoError("over a smooth base the gluing is determined by the mark")
        return cls(seq, mark, tuple(gluing), base_type, labels)


def _identity_mark(seq: BlowupSequence) -> Mark:
    return Mark("origin") if seq.smooth_base else Mark("chain", tuple(seq.base.ids))


def _check_mark(seq: BlowupSequence, mark: Mark) -> None:
    for pid in mark.primes:
        if pid not in seq:
            raise KatoError(f"marked prime {pid!r} is not a curve of the modification")
        if not seq.record(pid).exceptional and not (mark.kind == "satellite" and pid in (AXIS_Z, AXIS_W)):
            raise KatoError(f"marked prime {pid!r} is not an exceptional prime of the modification")
    if mark.kind == "satellite" and not any(seq.record(p).exceptional for p in mark.primes):
        raise KatoError("a satellite mark needs an exceptional prime")
    if mark.kind == "origin":
        if not seq.smooth_base or len(seq):
            raise KatoError("the origin mark is only valid for the trivial smooth datum")
    elif mark.kind == "free":
        if not seq.smooth_base or len(mark.primes) != 1:
            raise KatoError("a free mark names one prime over a smooth base")
    elif mark.kind == "satellite":
        if not seq.smooth_base or len(mark.primes) != 2 or len(set(mark.primes)) != 2:
            raise KatoError("a satellite mark names two primes over a smooth base")
        if not seq.meets(*mark.primes):
            raise KatoError(f"{mark.primes[0]} and {mark.primes[1]} do not meet")
    elif mark.kind == "chain":
        if seq.smooth_base:
            raise KatoError("chain marks need a quotient base")
        base = seq.base
        if len(mark.primes) != len(base) or len(set(mark.primes)) != len(mark.primes):
            raise KatoError("the marked chain must have as many distinct primes as the base")
        for (u, v), (x, y) in zip(zip(base.ids, base.ids[1:]), zip(mark.primes, mark.primes[1:])):
            if not seq.meets(x, y):
                raise KatoError(f"marked primes {x} and {y} do not meet")
        for b, m in zip(base.vertices, mark.primes):
            rec = seq.record(m)
            if (rec.self_intersection, rec.genus) != (b.self_intersection, b.genus):
                raise KatoError(
                    f"marked prime {m} has self-intersection {rec.self_intersection}, "
                    f"base prime {b.id} has {b.self_intersection}"
                )
    else:
        raise KatoError(f"unknown mark kind {mark.kind!r}")


def derive_gluing(seq: BlowupSequence, mark: Mark) -> tuple[Glue, ...]:
    """Gluing forced by the mark when the critical points are generic.

    Over a smooth base, ``sigma({z=0})`` lies on the first marked prime and
    closes up through the strict transform of ``{z=0}``; likewise for
    ``{w=0}``.  Over a chain, a prime ``O`` meeting the marked prime
    ``sigma(B)`` continues through a generic point of ``B``.
    """
    if mark.kind == "origin":
        return ()
    if seq.smooth_base:
        axes = (AXIS_Z, AXIS_W)
        out = []
        for owner, axis in zip(mark.primes, axes):
            if not seq.record(owner).exceptional:
                continue
            via = [axis]
            # the strict transform of an axis may itself be a marked curve,
            # in which case the branch runs on through the other axis
            while via[-1] in mark.primes:
                nxt = axes[mark.primes.index(via[-1])]
                if nxt in via:
                    raise KatoError("the glued branch never reaches a prime")
                via.append(nxt)
            landing = [n for n in seq.neighbors(via[-1]) if seq.record(n).exceptional]
            if len(landing) != 1:
                raise KatoError(f"the strict transform of {via[-1]} meets no single prime")
            out.append(Glue(owner, landing[0], tuple(via)))
        return tuple(sorted(out))
    image_to_base = dict(zip(mark.primes, seq.base.ids))
    marked = set(mark.primes)
    out = []
    for owner in seq.primes:
        if owner in marked:
            continue
        for m in seq.neighbors(owner):
            if m in marked:
                target = image_to_base[m]
                if target in marked:
                    raise KatoError(f"the branch of {owner} lands in the marked chain again")
                out.append(Glue(owner, target))
    return tuple(sorted(out))


def trivial_datum(base: DualGraph | None = None, base_type: tuple[int, int] | None = None) -> KatoDatum:
    if base is None and base_type is not None:
        base = quotient_chain(*base_type)
    seq = BlowupSequence((), base)
    return KatoDatum(seq, _identity_mark(seq), (), base_type)


# -- composition --------------------------------------------------------------

def compose(d1: KatoDatum, d2: KatoDatum) -> KatoDatum:
    """The datum of ``f1 ∘ f2``: graft ``d2``'s blow-ups at ``d1``'s mark."""
    s1, s2 = d1.modification, d2.modification
    if d1.base_type != d2.base_type or s1.base != s2.base:
        raise KatoError("cannot compose data over different bases")
    if d2.is_trivial:
        return d1
    if d1.is_trivial:
        return d2
    rename: dict[str, str] = {}
    if d1.mark.kind == "chain":
        rename.update(zip(s2.base.ids, d1.mark.primes))
    elif d1.mark.kind == "satellite":
        rename.update({AXIS_Z: d1.mark.primes[0], AXIS_W: d1.mark.primes[1]})
    seq = s1
    boundary = 0

    def fresh_curve() -> str:
        nonlocal boundary
        while True:
            boundary += 1
            name = f"T{boundary}"
            if name not in seq:
                return name

    for n, step in enumerate(s2.steps, 1):
        if isinstance(step, Initial):
            if d1.mark.kind == "satellite":
                step = Satellite(*d1.mark.primes)
            else:  # free mark: sigma({w=0}) is a new curve through the point
                rename[AXIS_Z] = d1.mark.primes[0]
                rename[AXIS_W] = fresh_curve()
                step = Free(d1.mark.primes[0], rename[AXIS_W])
        elif isinstance(step, Free):
            curve = None
            if step.curve is not None:
                curve = rename[step.curve] = fresh_curve()
            step = Free(rename[step.on], curve)
        else:
            step = Satellite(rename[step.first], rename[step.second])
        seq = seq.apply(step)
        rename[s2.created[n - 1]] = seq.created[-1]
    mark = Mark(d2.mark.kind, tuple(rename[p] for p in d2.mark.primes))
    labels = {k: v for k, v in d1.labels.items()}
    return KatoDatum(seq, mark, (), d1.base_type, labels)


# -- the quotient family ------------------------------------------------------

def family_base(k: int) -> tuple[int, int]:
    if not isinstance(k, int) or k < 2:
        raise InvalidInputError(f"k must be an integer >= 2, got {k}")
    return 5 * k - 3, 2 * k - 1


def quotient_family_datum(k: int) -> KatoDatum:
    """Strict germ over the quotient singularity ``1/(5k-3) (1, 2k-1)``.

    The base resolution is the chain ``E1, E2, E3`` of self-intersections
    ``(-3, -2, -k)``.  Blow up a free point of ``E2`` (giving ``E4``), a free
    point of ``E4`` (giving ``E5``) and ``k-1`` free points of ``E5``; the
    chain ``E2, E4, E5`` is again ``(-3, -2, -k)`` and is the marked region.
    """
    p, q = family_base(k)
    base = quotient_chain(p, q)
    if [v.self_intersection for v in base.vertices] != [-3, -2, -k]:
        raise AssertionError(f"unexpected resolution chain for k={k}")
    steps = [Free("E2"), Free("E4")] + [Free("E5")] * (k - 1)
    seq = BlowupSequence(steps, base)
    ds = seq.created[2:]
    gluing = [Glue("E1", "E1"), Glue("E3", "E1")] + [Glue(d, "E3") for d in ds]
    labels = {"E1": "C1", "E3": "C3"}
    labels.update({d: f"D{j}" for j, d in enumerate(ds, 1)})
    return KatoDatum(seq, Mark("chain", ("E2", "E4", "E5")), tuple(gluing), (p, q), labels)


def jacobian_gap(datum: KatoDatum, prime: str) -> Fraction:
    """``A(f_* ord_E) - A(ord_E)``, which the Jacobian formula equates with ``ord_E(J_f)``."""
    corr = datum.correspondence()
    if prime not in corr:
        raise KatoError(f"{prime!r} is not a base prime")
    seq = datum.modification
    return seq.record(corr[prime]).A - seq.record(prime).A


def jacobian_divisor_coeffs(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients ``(b1, b3, b)`` of the Jacobian divisor ``b1*C1 + b3*C3 + b*D``."""
    a = log_discrepancies(quotient_chain(*family_base(k)))
    return a["E1"] - 1, a["E3"] - 1, a["E2"] + 2


# -- Class 6 ------------------------------------------------------------------

def datum_from_class6(nf: Class6) -> KatoDatum:
    """Constructive factorization ``f = pi ∘ sigma`` of a monomial strict germ.

    ``Y'`` is reached by the satellite blow-ups along the Stern-Brocot paths
    of the two image divisors ``A e1 = (a, c)`` and ``A e2 = (b, d)``.  The
    extra primes of that toric resolution are recorded as cyclic quotient
    points, as they would be after contracting them.
    """
    check(nf)
    rays = [(nf.a, nf.c), (nf.b, nf.d)]
    seq, ray_prime = toric_sequence([r for r in rays if all(r)])
    prime_ray = {v: k for k, v in ray_prime.items()}
    prime_ray.update({AXIS_Z: (1, 0), AXIS_W: (0, 1)})
    ray_prime.update({(1, 0): AXIS_Z, (0, 1): AXIS_W})
    marked = tuple(ray_prime[r] for r in rays)
    mark = Mark("satellite", marked)
    if not seq.meets(*marked):
        raise KatoError(f"image divisors {rays} do not meet (lattice index {abs(nf.det)})")
    singular = []
    for chain in _chains(seq, set(marked)):
        entries = [-seq.record(p).self_intersection for p in chain]
        p, q = hj_value(entries)
        first = [n for n in seq.neighbors(chain[0]) if n not in chain]
        last = [n for n in seq.neighbors(chain[-1]) if n not in chain and n not in first[:1]]
        u, v = prime_ray[first[0]], prime_ray[last[0]]
        if abs(u[0] * v[1] - u[1] * v[0]) != p:
            raise ArithmeticError(f"lattice index disagrees with chain {entries}")
        singular.append((chain, (p, q)))
    return KatoDatum(seq, mark, (), None, {}, tuple(singular))


def _chains(seq: BlowupSequence, keep: set[str]) -> list[tuple[str, ...]]:
    """Connected pieces of the dual graph after removing ``keep``, as ordered chains."""
    rest = [p for p in seq.primes if p not in keep]
    seen: set[str] = set()
    out = []
    for start in rest:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for n in seq.neighbors(stack.pop()):
                if n in rest and n not in comp:
                    comp.add(n)
                    stack.append(n)
        seen |= comp
        inner = {p: [n for n in seq.neighbors(p) if n in comp] for p in comp}
        end = min((p for p in comp if len(inner[p]) <= 1), key=rest.index)
        chain = [end]
        while len(chain) < len(comp):
            chain.append(next(n for n in inner[chain[-1]] if n not in chain))
        out.append(tuple(chain))
    return out


# -- surfaces -----------------------------------------------------------------

@dataclass(frozen=True)
class SurfaceCurve:
    id: str
    self_intersection: int
    genus: int = 0
    nodes: int = 0


@dataclass(frozen=True)
class CurveConfig:
    """Compact curves of a surface: a nodal curve keeps its node apart from
    the pairwise intersections, which form a multiset of unordered pairs."""

    curves: tuple[SurfaceCurve, ...]
    intersections: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        ids = [c.id for c in self.curves]
        order = {c: i for i, c in enumerate(ids)}
        if len(order) != len(ids):
            raise InvalidInputError("duplicate curve id")
        pairs = []
        for u, v in self.intersections:
            if u == v or u not in order or v not in order:
                raise InvalidInputError(f"bad intersection pair ({u}, {v})")
            pairs.append((u, v) if order[u] < order[v] else (v, u))
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "intersections", tuple(sorted(pairs, key=lambda e: (order[e[0]], order[e[1]]))))

    def curve(self, cid: str) -> SurfaceCurve:
        return next(c for c in self.curves if c.id == cid)

    def multiplicity(self, u: str, v: str) -> int:
        return sum(1 for e in self.intersections if set(e) == {u, v})

    def to_text(self) -> str:
        lines = [
            f"curve {c.id} self={c.self_intersection} genus={c.genus} nodes={c.nodes}" for c in self.curves
        ]
        lines += [f"meet {u} {v}" for u, v in self.intersections]
        return "\n".join(lines) + "\n"


def surface_curves(datum: KatoDatum) -> CurveConfig:
    """Curves of the glued surface ``S``.

    One curve per prime of ``Y'`` outside the marked region.  A branch glued
    back onto its own prime adds a node and raises the self-intersection by
    2; a branch landing on another prime adds an intersection point.  Over a
    smooth base the branch is the strict transform of a coordinate axis, and
    each blow-up centred on that axis lowers the self-intersection by 1.
    """
    seq = datum.modification
    if datum.is_trivial:
        raise KatoError("the trivial datum does not define a surface")
    marked = set(datum.mark.primes) if datum.mark.kind == "chain" else set()
    outside = [p for p in seq.primes if p not in marked]
    selfs = {p: seq.record(p).self_intersection for p in outside}
    nodes = Counter()
    meets = []
    for u, v in seq.to_dual_graph().edges:
        if u in marked or v in marked:
            continue
        if datum.mark.kind == "satellite" and {u, v} == set(datum.mark.primes):
            continue
        meets.append((u, v))
    covered = {g.owner for g in datum.gluing}
    if not seq.smooth_base:
        needed = {p for p in outside if any(n in marked for n in seq.neighbors(p))}
        if needed - covered:
            raise KatoError(f"gluing is partial: no entry for {sorted(needed - covered)}")
    for g in datum.gluing:
        if g.owner == g.target:
            nodes[g.owner] += 1
            selfs[g.owner] += 2
        else:
            meets.append((g.owner, g.target))
        for curve in g.via:
            selfs[g.owner] -= sum(1 for n in range(1, len(seq) + 1) if curve in seq.center_of_step(n))
    curves = tuple(
        SurfaceCurve(datum.label(p), selfs[p], seq.record(p).genus, nodes[p]) for p in outside
    )
    return CurveConfig(curves, tuple((datum.label(u), datum.label(v)) for u, v in meets))


def _contractible(c: SurfaceCurve) -> bool:
    return c.genus == 0 and c.nodes == 0 and c.self_intersection == -1


def minimal_model(config: CurveConfig) -> CurveConfig:
    """Contract smooth rational (-1)-curves until none is left.

    A neighbour meeting the contracted curve ``m`` times gains ``m^2`` in
    self-intersection and ``m(m-1)/2`` nodes; two neighbours gain
    ``m_X * m_Y`` mutual intersections.  The last remaining curve is kept.
    """
    curves = {c.id: c for c in config.curves}
    order = [c.id for c in config.curves]
    edges = Counter(frozenset(e) for e in config.intersections)
    while len(order) > 1:
        victim = next((cid for cid in order if _contractible(curves[cid])), None)
        if victim is None:
            break
        mult = {}
        for e, m in list(edges.items()):
            if victim in e:
                (other,) = e - {victim}
                mult[other] = m
                del edges[e]
        for other, m in mult.items():
            c = curves[other]
            curves[other] = SurfaceCurve(c.id, c.self_intersection + m * m, c.genus, c.nodes + m * (m - 1) // 2)
        for x, y in combinations(sorted(mult, key=order.index), 2):
            edges[frozenset((x, y))] += mult[x] * mult[y]
        order.remove(victim)
        del curves[victim]
    pairs = []
    for e, m in edges.items():
        u, v = sorted(e, key=order.index)
        pairs += [(u, v)] * m
    return CurveConfig(tuple(curves[c] for c in order), tuple(pairs))


def _on_cycle(config: CurveConfig) -> set[str]:
    """Curves lying on a cycle of the configuration (a node is a loop)."""
    out = {c.id for c in config.curves if c.nodes}
    edges = list(config.intersections)
    for i, (u, v) in enumerate(edges):
        rest = edges[:i] + edges[i + 1:]
        reach, stack = {u}, [u]
        while stack:
            x = stack.pop()
            for a, b in rest:
                y = b if a == x else a if b == x else None
                if y is not None and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if v in reach:
            out |= {u, v}
    return out


def _components(config: CurveConfig) -> int:
    parent = {c.id: c.id for c in config.curves}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in config.intersections:
        parent[find(u)] = find(v)
    return len({find(c.id) for c in config.curves})


def classify_configuration(config: CurveConfig) -> str | None:
    """Surface class read off the curves, independently of the germ.

    After blowing down, ``D^2 = 0`` for the whole curve ``D`` means Enoki.
    Otherwise, if every curve lies on a cycle the surface is Inoue-Hirzebruch:
    hyperbolic with two cycles, half with one.  Cycles with trees attached
    mean intermediate.  ``None`` when no cycle exists at all.
    """
    m = minimal_model(config)
    cyc = _on_cycle(m)
    if not cyc:
        return None
    d2 = sum(c.self_intersection for c in m.curves) + 2 * len(m.intersections)
    if d2 == 0:
        return "Enoki"
    if len(cyc) == len(m.curves):
        return {1: "HalfInoue", 2: "HyperbolicInoue"}.get(_components(m))
    return "Intermediate"


_SURFACES = {"curve": "Enoki", "infinitely_singular": "Intermediate"}


def classify_surface(report: EigenReport) -> str:
    if report.type == "irrational":
        return "HyperbolicInoue" if report.component_action == "preserves" else "HalfInoue"
    try:
        return _SURFACES[report.type]
    except KeyError:
        raise KatoError(f"a strict germ never has a {report.type} eigenvaluation") from None
