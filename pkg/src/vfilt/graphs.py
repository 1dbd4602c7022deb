"""Finite simple graphs, their edge and cover ideals, and the graph families used here.

Family strings (CLI): ``Kb(2,3)``, ``K(4)``, ``C(5)``, ``Kpend(3,2)``,
``fakhari(K(3),2)``, ``hbip(2)``.

Vertex labels:

* ``Kb(p1,p2)``: sides ``x1..x{p1}`` and ``y1..y{p2}``
* ``K(m)``, ``C(u)``: ``x1..``
* ``Kpend(m,s)``: core ``x1..x{m}``, pendant ``x{j}_{l}`` hanging off ``x{j}``
* ``fakhari(G,k)``: vertex ``v`` of ``G`` becomes ``v.1 .. v.k``
* ``hbip(p)``: ``x1..x{2p}``, ``y1..y{2p}`` (renamed from ``fakhari(Kb(p,p),2)``)
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Union

from .decomp import associated_primes
from .monomial import MonomialIdeal, RingContext, intersect_all, minimalize


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        pos = {v: i for i, v in enumerate(verts)}
        norm = set()
        for e in self.edges:
            a, b = e
            if a not in pos or b not in pos:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
            if a == b:
                raise ValueError(f"loop at {a}")
            norm.add((a, b) if pos[a] < pos[b] else (b, a))
        if len(norm) != len(self.edges):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(norm, key=lambda e: (pos[e[0]], pos[e[1]]))))

    @property
    def ctx(self) -> RingContext:
        return RingContext(self.vertices)

    def neighbors(self, v: str) -> set[str]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self._edge_set or (b, a) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def relabel(self, mapping: dict[str, str]) -> Graph:
        return Graph(
            tuple(mapping.get(v, v) for v in self.vertices),
            tuple((mapping.get(a, a), mapping.get(b, b)) for a, b in self.edges),
        )

    def to_json(self) -> dict[str, Any]:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Graph:
        return cls(tuple(data["vertices"]), tuple(tuple(e) for e in data["edges"]))


# -- family tags ----------------------------------------------------------------


@dataclass(frozen=True)
class CompleteBipartite:
    p1: int
    p2: int

    def __str__(self):
        return f"Kb({self.p1},{self.p2})"


@dataclass(frozen=True)
class Complete:
    m: int

    def __str__(self):
        return f"K({self.m})"


@dataclass(frozen=True)
class Cycle:
    u: int

    def __str__(self):
        return f"C({self.u})"


@dataclass(frozen=True)
class Pendant:
    """``K_m`` with ``s`` pendant edges at every vertex."""

    m: int
    s: int

    def __str__(self):
        return f"Kpend({self.m},{self.s})"


@dataclass(frozen=True)
class Fakhari:
    """Vertices ``(v, p)`` for ``1 <= p <= k``; ``(u,p)~(v,q)`` iff ``u~v`` and ``p+q <= k+1``."""

    inner: Union["FamilyTag", Graph]
    k: int

    def __str__(self):
        inner = self.inner if not isinstance(self.inner, Graph) else "custom"
        return f"fakhari({inner},{self.k})"


@dataclass(frozen=True)
class HBip:
    p: int

    def __str__(self):
        return f"hbip({self.p})"


FamilyTag = Union[CompleteBipartite, Complete, Cycle, Pendant, Fakhari, HBip]


def _positive(*vals):
    if any(not isinstance(v, int) or v < 1 for v in vals):
        raise ValueError(f"graph parameters must be positive integers, got {vals}")


def build(tag: FamilyTag | Graph) -> Graph:
    if isinstance(tag, Graph):
        return tag
    if isinstance(tag, CompleteBipartite):
        _positive(tag.p1, tag.p2)
        if tag.p1 > tag.p2:
            raise ValueError("complete bipartite graphs are written with p1 <= p2")
        xs = [f"x{i}" for i in range(1, tag.p1 + 1)]
        ys = [f"y{j}" for j in range(1, tag.p2 + 1)]
        return Graph(tuple(xs + ys), tuple(itertools.product(xs, ys)))
    if isinstance(tag, Complete):
        _positive(tag.m)
        if tag.m < 2:
            raise ValueError("K(m) needs m >= 2")
        xs = [f"x{i}" for i in range(1, tag.m + 1)]
        return Graph(tuple(xs), tuple(itertools.combinations(xs, 2)))
    if isinstance(tag, Cycle):
        _positive(tag.u)
        if tag.u < 3:
            raise ValueError("C(u) needs u >= 3")
        xs = [f"x{i}" for i in range(1, tag.u + 1)]
        return Graph(tuple(xs), tuple((xs[i], xs[(i + 1) % tag.u]) for i in range(tag.u)))
    if isinstance(tag, Pendant):
        _positive(tag.m, tag.s)
        if tag.m < 2:
            raise ValueError("Kpend(m,s) needs m >= 2")
        core = [f"x{j}" for j in range(1, tag.m + 1)]
        verts = list(core)
        edges = list(itertools.combinations(core, 2))
        for j in range(1, tag.m + 1):
            for l in range(1, tag.s + 1):
                verts.append(f"x{j}_{l}")
                edges.append((f"x{j}", f"x{j}_{l}"))
        return Graph(tuple(verts), tuple(edges))
    if isinstance(tag, Fakhari):
        _positive(tag.k)
        G = build(tag.inner)
        k = tag.k
        verts = [f"{v}.{p}" for v in G.vertices for p in range(1, k + 1)]
        edges = [
            (f"{a}.{p}", f"{b}.{q}")
            for a, b in G.edges
            for p in range(1, k + 1)
            for q in range(1, k + 2 - p)
        ]
        return Graph(tuple(verts), tuple(edges))
    if isinstance(tag, HBip):
        _positive(tag.p)
        p = tag.p
        if p < 2:
            raise ValueError("hbip(p) needs p >= 2")
        G2 = build(Fakhari(CompleteBipartite(p, p), 2))
        mapping = {}
        for i in range(1, p + 1):
            mapping[f"x{i}.2"] = f"x{i}"
            mapping[f"x{i}.1"] = f"x{p + i}"
            mapping[f"y{i}.1"] = f"y{i}"
            mapping[f"y{i}.2"] = f"y{p + i}"
        H = G2.relabel(mapping)
        order = [f"x{i}" for i in range(1, 2 * p + 1)] + [f"y{i}" for i in range(1, 2 * p + 1)]
        return Graph(tuple(order), H.edges)
    raise TypeError(f"not a family tag: {tag!r}")


_CALL = re.compile(r"\s*([A-Za-z]+)\s*\((.*)\)\s*$")


def parse_family(text: str) -> FamilyTag:
    m = _CALL.match(text)
    if not m:
        raise ValueError(f"cannot parse graph family {text!r}")
    name, body = m.group(1).lower(), m.group(2)
    if name == "fakhari":
        depth, cut = 0, None
        for i, ch in enumerate(body):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                cut = i
        if cut is None:
            raise ValueError(f"fakhari needs (family, k): {text!r}")
        return Fakhari(parse_family(body[:cut]), int(body[cut + 1 :]))
    try:
        args = [int(a) for a in body.split(",")]
    except ValueError:
        raise ValueError(f"non-integer parameter in {text!r}") from None
    table = {"kb": (CompleteBipartite, 2), "k": (Complete, 1), "c": (Cycle, 1), "kpend": (Pendant, 2), "hbip": (HBip, 1)}
    if name not in table:
        raise ValueError(f"unknown graph family {name!r}")
    cls, arity = table[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s)")
    return cls(*args)


def graph_from_string(text: str) -> Graph:
    return build(parse_family(text))


# -- ideals -----------------------------------------------------------------------


def _need_edges(G: Graph):
    if not G.edges:
        raise ValueError("graph has no edges")


def edge_prime(G: Graph, a: str, b: str) -> MonomialIdeal:
    ctx = G.ctx
    return MonomialIdeal.from_variables(ctx, (ctx.index(a), ctx.index(b)))


def cover_ideal(G: Graph) -> MonomialIdeal:
    """``J(G)``: intersection of the edge primes."""
    _need_edges(G)
    return intersect_all((edge_prime(G, a, b) for a, b in G.edges), G.ctx)


def edge_ideal(G: Graph) -> MonomialIdeal:
    _need_edges(G)
    ctx = G.ctx
    return minimalize([ctx.monomial({a: 1, b: 1}) for a, b in G.edges], ctx)


def minimal_vertex_covers(G: Graph) -> list[frozenset[str]]:
    J = cover_ideal(G)
    return [frozenset(G.vertices[i] for i, a in enumerate(g) if a) for g in J.gens]


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Polarization ``x_i^a -> x_i.1 * ... * x_i.a`` in the ring of all used slots."""
    if I.is_zero or I.is_unit:
        raise ValueError("polarization needs a proper nonzero ideal")
    top = I.max_exponents()
    names = [f"{v}.{s}" for v, d in zip(I.ctx.variables, top) for s in range(1, d + 1)]
    ctx = RingContext(tuple(names))
    offsets, acc = [], 0
    for d in top:
        offsets.append(acc)
        acc += d
    gens = []
    for g in I.gens:
        e = [0] * ctx.dim
        for i, a in enumerate(g):
            for s in range(a):
                e[offsets[i] + s] = 1
        gens.append(tuple(e))
    return minimalize(gens, ctx)


# -- structure ---------------------------------------------------------------------


def is_bipartite(G: Graph) -> tuple[bool, tuple[frozenset[str], frozenset[str]] | None]:
    color: dict[str, int] = {}
    for start in G.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, None
    side0 = frozenset(v for v in G.vertices if color[v] == 0)
    return True, (side0, frozenset(G.vertices) - side0)


def is_unmixed_edge_ideal(G: Graph) -> bool:
    return len({p.height for p in associated_primes(edge_ideal(G))}) == 1


def is_complete_multipartite(G: Graph) -> bool:
    """Non-adjacency must be an equivalence relation with at least two classes."""
    classes: list[set[str]] = []
    for v in G.vertices:
        for cls in classes:
            if not G.has_edge(v, next(iter(cls))):
                cls.add(v)
                break
        else:
            classes.append({v})
    if len(classes) < 2:
        return False
    for cls in classes:
        if any(G.has_edge(a, b) for a, b in itertools.combinations(cls, 2)):
            return False
    for c1, c2 in itertools.combinations(classes, 2):
        if not all(G.has_edge(a, b) for a in c1 for b in c2):
            return False
    return True


def _set_partitions(items: list) -> Iterable[list[list]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def complete_multipartite_by_search(G: Graph) -> bool:
    """Exhaustive check over every partition of the vertex set (small graphs only)."""
    edges = {frozenset(e) for e in G.edges}
    for part in _set_partitions(list(G.vertices)):
        if len(part) < 2:
            continue
        block = {v: i for i, blk in enumerate(part) for v in blk}
        want = {frozenset((a, b)) for a, b in itertools.combinations(G.vertices, 2) if block[a] != block[b]}
        if want == edges:
            return True
    return False


# -- regularity registry --------------------------------------------------------------


@dataclass(frozen=True)
class RegFormula:
    family: str
    formula: str
    source: str


REG_REGISTRY = {
    "CompleteBipartite": RegFormula(
        "Kb(p1,p2)", "n*p2 + p1 - 2", "known closed form for symbolic powers of cover ideals of K_{p1,p2}"
    ),
    "Complete": RegFormula("K(m)", "n*(m-1) - 1", "known closed form for claw-free graphs, specialized to K_m"),
}


def reg_closed_form(tag: FamilyTag, n: int) -> int:
    """``reg(R/J(G)^(n))`` from the registry of known closed forms; no resolution is computed."""
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(tag, CompleteBipartite):
        return n * tag.p2 + tag.p1 - 2
    if isinstance(tag, Complete):
        return n * (tag.m - 1) - 1
    raise NotImplementedError(f"no closed-form regularity registered for {tag}")
