"""Dual graphs of good resolutions and the exact lattice computations on them.

A :class:`DualGraph` records one vertex per exceptional prime (genus and
self-intersection) and one edge per transverse intersection point.  The
intersection matrix is a plain integer :mod:`numpy` array whose rows follow
``graph.ids``; all determinants, inverses and solves go through fraction-free
Bareiss elimination on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .numerics import InvalidInputError, hj_expand

__all__ = [
    "DualGraph",
    "GraphFormatError",
    "NotInvertibleError",
    "NotNegativeDefiniteError",
    "Vertex",
    "determinant",
    "divisor_dot",
    "fundamental_cycle",
    "intersection_matrix",
    "inverse_matrix",
    "is_negative_definite",
    "leading_minors",
    "log_discrepancies",
    "quotient_chain",
    "solve",
]


class GraphFormatError(ValueError):
    """Malformed graph text; the message names the offending line."""


class NotInvertibleError(ArithmeticError):
    pass


class NotNegativeDefiniteError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int = 0
    self_intersection: int = -2


@dataclass(frozen=True)
class DualGraph:
    """Weighted graph of exceptional primes.

    ``edges`` is a multiset of unordered pairs (repeated pairs are multi-edges);
    self-loops are rejected.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        index = {}
        for i, v in enumerate(verts):
            if v.id in index:
                raise InvalidInputError(f"duplicate vertex id {v.id!r}")
            if v.genus < 0:
                raise InvalidInputError(f"negative genus on {v.id!r}")
            index[v.id] = i
        edges = []
        for u, w in self.edges:
            for x in (u, w):
                if x not in index:
                    raise InvalidInputError(f"edge endpoint {x!r} is not a vertex")
            if u == w:
                raise InvalidInputError(f"self-loop on {u!r} (nodal primes are not allowed)")
            edges.append((u, w) if index[u] < index[w] else (w, u))
        edges.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_index", index)

    @classmethod
    def chain(cls, self_intersections: Sequence[int], ids: Sequence[str] | None = None) -> DualGraph:
        ids = list(ids) if ids is not None else [f"E{i + 1}" for i in range(len(self_intersections))]
        verts = tuple(Vertex(i, 0, int(n)) for i, n in zip(ids, self_intersections))
        return cls(verts, tuple(zip(ids, ids[1:])))

    @property
    def ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, vid: str) -> Vertex:
        return self.vertices[self._index[vid]]

    def index(self, vid: str) -> int:
        return self._index[vid]

    def degree(self, vid: str) -> int:
        return sum((u == vid) + (w == vid) for u, w in self.edges)

    def neighbors(self, vid: str) -> list[str]:
        out = []
        for u, w in self.edges:
            if u == vid:
                out.append(w)
            elif w == vid:
                out.append(u)
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            for n in self.neighbors(stack.pop()):
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        return len(seen) == len(self.vertices)

    # -- text formats -------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> DualGraph:
        """Parse ``vertex <id> genus=<g> self=<n>`` / ``edge <id> <id>`` lines."""
        verts: list[Vertex] = []
        edges: list[tuple[str, str]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "vertex" and len(parts) >= 2:
                    opts = dict(p.split("=", 1) for p in parts[2:])
                    unknown = set(opts) - {"genus", "self"}
                    if unknown or "self" not in opts:
                        raise ValueError
                    verts.append(Vertex(parts[1], int(opts.get("genus", 0)), int(opts["self"])))
                elif parts[0] == "edge" and len(parts) == 3:
                    edges.append((parts[1], parts[2]))
                else:
                    raise ValueError
            except ValueError:
                raise GraphFormatError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
        try:
            return cls(tuple(verts), tuple(edges))
        except InvalidInputError as exc:
            raise GraphFormatError(str(exc)) from None

    def to_text(self) -> str:
        lines = [f"vertex {v.id} genus={v.genus} self={v.self_intersection}" for v in self.vertices]
        lines += [f"edge {u} {w}" for u, w in self.edges]
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v.id}" [label="{v.id} [{v.genus}, {v.self_intersection}]"];')
        for u, w in self.edges:
            lines.append(f'  "{u}" -- "{w}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def intersection_matrix(g: DualGraph) -> np.ndarray:
    n = len(g)
    m = np.zeros((n, n), dtype=np.int64)
    for i, v in enumerate(g.vertices):
        m[i, i] = v.self_intersection
    for u, w in g.edges:
        i, j = g.index(u), g.index(w)
        m[i, j] += 1
        m[j, i] += 1
    return m


# -- exact linear algebra ---------------------------------------------------

def _int_rows(m) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in np.asarray(m, dtype=object).tolist()]
    if any(len(r) != len(rows) for r in rows):
        raise InvalidInputError("matrix must be square")
    return rows


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], int]:
    """Fraction-free forward elimination on the first ``ncols`` columns.

    Works in place on ``rows``; returns (rows, sign) where ``sign`` tracks row
    swaps.  Raises NotInvertibleError if a pivot column is zero.
    """
    n = len(rows)
    sign, prev = 1, 1
    for k in range(min(n, ncols)):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                raise NotInvertibleError("matrix is singular")
        piv = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, len(rows[i])):
                rows[i][j] = (rows[i][j] * piv - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = piv
    return rows, sign


def determinant(m) -> int:
    rows = _int_rows(m)
    if not rows:
        return 1
    try:
        rows, sign = _bareiss(rows, len(rows))
    except NotInvertibleError:
        return 0
    return sign * rows[-1][-1]


def _pivots(rows: list[list[int]]) -> list[Fraction] | None:
    """Pivots of elimination without row swaps, or ``None`` at a zero pivot.

    Only nonzero entries are touched, so sparse matrices such as chains cost
    little more than their number of entries.
    """
    n = len(rows)
    sparse = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in rows]
    out = []
    for k in range(n):
        piv = sparse[k].get(k, 0)
        if not piv:
            return None
        out.append(piv)
        pivot_row = [(j, x) for j, x in sparse[k].items() if j > k]
        for i in range(k + 1, n):
            f = sparse[i].pop(k, 0)
            if not f:
                continue
            f /= piv
            row = sparse[i]
            for j, x in pivot_row:
                y = row.get(j, 0) - f * x
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
    return out


def leading_minors(m) -> list[int]:
    rows = _int_rows(m)
    piv = _pivots(rows)
    if piv is None:
        return [determinant([r[:k] for r in rows[:k]]) for k in range(1, len(rows) + 1)]
    out, acc = [], Fraction(1)
    for p in piv:
        acc *= p
        out.append(int(acc))
    return out


def is_negative_definite(m) -> bool:
    """Sylvester's criterion: ``(-1)^k det(M_k) > 0`` for every leading minor."""
    return all((-1) ** k * d > 0 for k, d in enumerate(leading_minors(m), 1))


def solve(m, rhs: Sequence[Sequence[int]] | Sequence[int]) -> list:
    """Exact solution of ``M X = B`` (``B`` a vector or list of columns)."""
    rows = _int_rows(m)
    n = len(rows)
    vector = bool(rhs) and not isinstance(rhs[0], (list, tuple))
    cols = [list(rhs)] if vector else [list(c) for c in rhs]
    aug = [rows[i] + [int(c[i]) for c in cols] for i in range(n)]
    aug, _ = _bareiss(aug, n)
    out = []
    for c in range(len(cols)):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(aug[i][n + c]) - sum(aug[i][j] * x[j] for j in range(i + 1, n))
            x[i] = acc / aug[i][i]
        out.append(x)
    return out[0] if vector else out


def inverse_matrix(m) -> list[list[Fraction]]:
    n = len(_int_rows(m))
    cols = solve(m, [[int(i == j) for i in range(n)] for j in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# -- invariants of graphs ---------------------------------------------------

def log_discrepancies(g: DualGraph) -> dict[str, Fraction]:
    """Solve ``M A = 2g - 2 + s`` exactly (adjunction on every prime)."""
    rhs = [2 * v.genus - 2 + g.degree(v.id) for v in g.vertices]
    a = solve(intersection_matrix(g), rhs)
    return dict(zip(g.ids, a))


def quotient_chain(p: int, q: int) -> DualGraph:
    """Minimal resolution graph of the cyclic quotient singularity 1/p(1,q)."""
    return DualGraph.chain([-a for a in hj_expand(p, q)])


def divisor_dot(g: DualGraph, z: Mapping[str, int | Fraction], vid: str) -> int | Fraction:
    """Intersection number ``Z . E_vid``."""
    m = intersection_matrix(g)
    i = g.index(vid)
    return sum(z.get(u, 0) * int(m[g.index(u), i]) for u in g.ids)


def fundamental_cycle(g: DualGraph) -> dict[str, int]:
    """Laufer's algorithm for the minimal anti-nef cycle.

    Stand-in for maximal-ideal multiplicities; the two agree on rational
    singularities.
    """
    if not g.is_connected():
        raise InvalidInputError("fundamental cycle needs a connected graph")
    m = intersection_matrix(g)
    if not is_negative_definite(m):
        raise NotNegativeDefiniteError("intersection matrix is not negative definite")
    z = np.ones(len(g), dtype=object)
    while True:
        dots = m.astype(object).dot(z)
        bad = [i for i, x in enumerate(dots) if x > 0]
        if not bad:
            return {vid: int(c) for vid, c in zip(g.ids, z)}
        z[bad[0]] += 1

