"""Multigraph model and the purely graph-theoretic machinery.

Edge subsets are handled in two shapes. The public functions accept any
iterable of edge identifiers (an ``EdgeSet``) and return frozensets. Internally
every subset is an ``int`` bitmask where bit ``i`` is the ``i``-th edge in
canonical (lexicographic) order, so iterating bits low to high is iterating
edges in canonical order.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

from .errors import (
    CoreUndefined,
    DanglingEndpoint,
    DuplicateId,
    EdgeSetMismatch,
    KernelUndefined,
    NotABicycle,
    UnknownEdge,
)

EdgeId = str
VertexId = str
EdgeSet = frozenset
EdgeInput = Union[Mapping[str, Tuple[str, str]], Iterable[Tuple[str, str, str]]]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class MultiGraph:
    """Finite multigraph with named edges; loops and parallel edges allowed.

    ``vertices`` are declared vertex identifiers; ``edges`` maps an edge id to
    its endpoint pair (``u == v`` is a loop). Every endpoint must be declared,
    use :meth:`from_edges` to infer the vertex set instead. Instances are
    immutable.
    """

    __slots__ = (
        "_vertices", "_vindex", "_edges", "_eindex", "_ends",
        "_evbits", "_incident", "_full", "_vfull", "_hash",
    )

    def __init__(self, vertices: Iterable[VertexId], edges: EdgeInput):
        vlist = [str(v) for v in vertices]
        if len(set(vlist)) != len(vlist):
            dup = next(v for v, c in Counter(vlist).items() if c > 1)
            raise DuplicateId(f"duplicate vertex id {dup!r}")
        if isinstance(edges, Mapping):
            triples = [(str(e), str(uv[0]), str(uv[1])) for e, uv in edges.items()]
        else:
            triples = [(str(e), str(u), str(v)) for e, u, v in edges]
        seen = set()
        for e, _, _ in triples:
            if e in seen:
                raise DuplicateId(f"duplicate edge id {e!r}")
            seen.add(e)
        declared = set(vlist)
        for e, u, v in triples:
            for w in (u, v):
                if w not in declared:
                    raise DanglingEndpoint(f"edge {e!r} uses undeclared vertex {w!r}")

        self._vertices = tuple(sorted(vlist))
        self._vindex = {v: i for i, v in enumerate(self._vertices)}
        triples.sort()
        self._edges = tuple(e for e, _, _ in triples)
        self._eindex = {e: i for i, e in enumerate(self._edges)}
        self._ends = tuple(
            tuple(sorted((self._vindex[u], self._vindex[v]))) for _, u, v in triples
        )
        self._evbits = tuple((1 << a) | (1 << b) for a, b in self._ends)
        incident = [0] * len(self._vertices)
        for i, (a, b) in enumerate(self._ends):
            incident[a] |= 1 << i
            incident[b] |= 1 << i
        self._incident = tuple(incident)
        self._full = (1 << len(self._edges)) - 1
        self._vfull = (1 << len(self._vertices)) - 1
        self._hash = None

    @classmethod
    def from_edges(cls, edges: EdgeInput, vertices: Iterable[VertexId] = ()) -> "MultiGraph":
        """Build a graph whose vertex set is every endpoint plus ``vertices``."""
        if isinstance(edges, Mapping):
            triples = [(e, uv[0], uv[1]) for e, uv in edges.items()]
        else:
            triples = list(edges)
        vs = {str(v) for v in vertices}
        for _, u, v in triples:
            vs.add(str(u))
            vs.add(str(v))
        return cls(sorted(vs), triples)

    # -- basic views -------------------------------------------------------

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[EdgeId, ...]:
        return self._edges

    @property
    def full(self) -> int:
        """Bitmask of all edges."""
        return self._full

    def ends(self, e: EdgeId) -> Tuple[VertexId, VertexId]:
        a, b = self._ends[self.index(e)]
        return self._vertices[a], self._vertices[b]

    def ends_index(self, i: int) -> Tuple[int, int]:
        return self._ends[i]

    def edge_map(self) -> dict:
        return {e: self.ends(e) for e in self._edges}

    def is_loop(self, e: EdgeId) -> bool:
        a, b = self._ends[self.index(e)]
        return a == b

    def index(self, e: EdgeId) -> int:
        try:
            return self._eindex[e]
        except KeyError:
            raise UnknownEdge(f"unknown edge {e!r}") from None

    def vertex_index(self, v: VertexId) -> int:
        return self._vindex[v]

    def star(self, v: VertexId) -> EdgeSet:
        return self.edge_set(self._incident[self._vindex[v]])

    def degree(self, v: VertexId, x: Optional[Iterable[EdgeId]] = None) -> int:
        mask = self._full if x is None else self.mask(x)
        return self.degree_list(mask)[self._vindex[v]]

    def isolated_vertices(self) -> Tuple[VertexId, ...]:
        return tuple(v for i, v in enumerate(self._vertices) if not self._incident[i])

    def mask(self, x: Optional[Iterable[EdgeId]]) -> int:
        """Bitmask of an edge set; ``None`` means every edge."""
        if x is None:
            return self._full
        if isinstance(x, int):
            raise TypeError("pass edge identifiers, not a bitmask")
        if isinstance(x, str):
            x = (x,)
        m = 0
        for e in x:
            m |= 1 << self.index(e)
        return m

    def edge_set(self, mask: int) -> EdgeSet:
        return frozenset(self._edges[i] for i in iter_bits(mask))

    def vertex_names(self, vbits: int) -> frozenset:
        return frozenset(self._vertices[i] for i in iter_bits(vbits))

    def vertex_bits_of(self, names: Iterable[VertexId]) -> int:
        m = 0
        for v in names:
            m |= 1 << self._vindex[v]
        return m

    def __len__(self) -> int:
        return len(self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self.edge_map() == other.edge_map()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(sorted(self.edge_map().items()))))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{e}:{u}-{v}" for e, (u, v) in self.edge_map().items())
        return f"MultiGraph({body})"

    # -- bitmask machinery ---------------------------------------------------

    def vertex_bits(self, mask: int) -> int:
        """Vertices incident to at least one edge of ``mask``."""
        vb = 0
        for i in iter_bits(mask):
            vb |= self._evbits[i]
        return vb

    def edge_vertex_bits(self, i: int) -> int:
        return self._evbits[i]

    def incident_bits(self, v: int) -> int:
        return self._incident[v]

    def delta_bits(self, mask: int) -> int:
        return mask.bit_count() - self.vertex_bits(mask).bit_count()

    def degree_list(self, mask: int) -> list:
        deg = [0] * len(self._vertices)
        for i in iter_bits(mask):
            a, b = self._ends[i]
            deg[a] += 1
            deg[b] += 1
        return deg

    def components_bits(self, mask: int) -> list:
        """Edge masks of the components of G<mask>, ordered by first edge."""
        comps = []
        for i in iter_bits(mask):
            em, vm = 1 << i, self._evbits[i]
            rest = []
            for ce, cv in comps:
                if cv & vm:
                    em |= ce
                    vm |= cv
                else:
                    rest.append((ce, cv))
            rest.append((em, vm))
            comps = rest
        comps.sort(key=lambda c: lowest_bit(c[0]))
        return [ce for ce, _ in comps]

    def spanning_components_bits(self, vbits: int, mask: int) -> list:
        """Components of the graph (vbits, mask) as (edge mask, vertex mask).

        Unlike :meth:`components_bits` this keeps isolated vertices of
        ``vbits`` as edgeless components.
        """
        comps = [(0, 1 << v) for v in iter_bits(vbits & ~self.vertex_bits(mask))]
        live = []
        for i in iter_bits(mask):
            em, vm = 1 << i, self._evbits[i]
            rest = []
            for ce, cv in live:
                if cv & vm:
                    em |= ce
                    vm |= cv
                else:
                    rest.append((ce, cv))
            rest.append((em, vm))
            live = rest
        return live + comps

    def reach_bits(self, vstart: int, mask: int) -> int:
        """Vertex set reachable from ``vstart`` using edges of ``mask``."""
        seen = vstart
        changed = True
        while changed:
            changed = False
            for i in iter_bits(mask):
                ev = self._evbits[i]
                if ev & seen and ev & ~seen:
                    seen |= ev
                    changed = True
        return seen

    def has_leaf_bits(self, mask: int) -> bool:
        return 1 in self.degree_list(mask)

    def strip_leaves_bits(self, mask: int) -> int:
        """Delete leaves repeatedly until none remain."""
        deg = self.degree_list(mask)
        stack = [v for v, d in enumerate(deg) if d == 1]
        while stack:
            v = stack.pop()
            if deg[v] != 1:
                continue
            eb = mask & self._incident[v]
            mask ^= eb
            a, b = self._ends[lowest_bit(eb)]
            w = b if a == v else a
            deg[v] = 0
            deg[w] -= 1
            if deg[w] == 1:
                stack.append(w)
        return mask

    def is_bridge_bits(self, i: int, mask: int) -> bool:
        a, b = self._ends[i]
        if a == b:
            return False
        return not (self.reach_bits(1 << a, mask & ~(1 << i)) >> b) & 1

    def tree_count_bits(self, vbits: int, mask: int) -> int:
        """Tree components of (vbits, mask); isolated vertices count as trees."""
        return sum(
            1 for em, vm in self.spanning_components_bits(vbits, mask)
            if em.bit_count() == vm.bit_count() - 1
        )

    def is_cacti_bits(self, mask: int) -> bool:
        if not mask or self.has_leaf_bits(mask):
            return False
        return all(self.delta_bits(c) >= 1 for c in self.components_bits(mask))

    def kernel_bits(self, mask: int, min_delta: int = 0) -> int:
        keep = 0
        for c in self.components_bits(mask):
            if self.delta_bits(c) >= min_delta:
                keep |= c
        return self.strip_leaves_bits(keep)

    def is_cycle_bits(self, mask: int) -> bool:
        if not mask:
            return False
        deg = self.degree_list(mask)
        if any(d not in (0, 2) for d in deg):
            return False
        return len(self.components_bits(mask)) == 1


@dataclass(frozen=True)
class SubgraphView:
    """G<x>: the edges of ``x`` together with exactly their endpoints."""

    parent: MultiGraph
    edges: EdgeSet
    vertices: frozenset


class BicycleKind(enum.Enum):
    THETA = "theta"
    DUMBBELL = "dumbbell"
    BUTTERFLY = "butterfly"


def induced(g: MultiGraph, x: Iterable[EdgeId]) -> SubgraphView:
    m = g.mask(x)
    return SubgraphView(g, g.edge_set(m), g.vertex_names(g.vertex_bits(m)))


def delta(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> int:
    """|x| - |V(G<x>)|; zero for the empty set."""
    return g.delta_bits(g.mask(x))


def components(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> list:
    return [g.edge_set(c) for c in g.components_bits(g.mask(x))]


def tree_components(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> int:
    """Number of tree components of G<x> (or of G itself when x is None).

    For the whole graph, declared isolated vertices count as trees.
    """
    if x is None:
        return g.tree_count_bits((1 << len(g.vertices)) - 1, g.full)
    m = g.mask(x)
    return g.tree_count_bits(g.vertex_bits(m), m)


def kernel(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> EdgeSet:
    """Union of the leaf-stripped components of G<x> that contain a cycle."""
    m = g.mask(x)
    if not any(g.delta_bits(c) >= 0 for c in g.components_bits(m)):
        raise KernelUndefined("every component of the subgraph is a tree")
    return g.edge_set(g.kernel_bits(m, 0))


def core(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> EdgeSet:
    """Union of the leaf-stripped components of G<x> with at least two cycles."""
    m = g.mask(x)
    if not any(g.delta_bits(c) >= 1 for c in g.components_bits(m)):
        raise CoreUndefined("no component of the subgraph has two cycles")
    return g.edge_set(g.kernel_bits(m, 1))


def core_bits(g: MultiGraph, mask: int) -> Optional[int]:
    """Core as a bitmask, or None when undefined."""
    comps = [c for c in g.components_bits(mask) if g.delta_bits(c) >= 1]
    if not comps:
        return None
    keep = 0
    for c in comps:
        keep |= c
    return g.strip_leaves_bits(keep)


def coloop_edge_test(g: MultiGraph, e: EdgeId) -> bool:
    """True iff deleting ``e`` strictly increases the number of tree components."""
    i = g.index(e)
    allv = (1 << len(g.vertices)) - 1
    return g.tree_count_bits(allv, g.full & ~(1 << i)) > g.tree_count_bits(allv, g.full)


def is_cacti(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> bool:
    """Nonempty and leafless, with at least two cycles in every component."""
    return g.is_cacti_bits(g.mask(x))


def is_cycle(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> bool:
    return g.is_cycle_bits(g.mask(x))


def is_bicycle_bits(g: MultiGraph, mask: int) -> bool:
    return (
        bool(mask)
        and g.delta_bits(mask) == 1
        and not g.has_leaf_bits(mask)
        and len(g.components_bits(mask)) == 1
    )


def classify_bicycle(g: MultiGraph, x: Iterable[EdgeId]) -> BicycleKind:
    m = g.mask(x)
    if not is_bicycle_bits(g, m):
        raise NotABicycle("expected a connected leafless subgraph with delta 1")
    deg = g.degree_list(m)
    if 4 in deg:
        return BicycleKind.BUTTERFLY
    if any(g.is_bridge_bits(i, m) for i in iter_bits(m)):
        return BicycleKind.DUMBBELL
    return BicycleKind.THETA


def is_two_connected_bits(g: MultiGraph, mask: int) -> bool:
    """2-connectivity of G<mask>: loopless, connected, no cut vertex.

    Two vertices joined by at least two parallel edges count as 2-connected.
    """
    if not mask:
        return False
    if any(a == b for a, b in (g.ends_index(i) for i in iter_bits(mask))):
        return False
    vb = g.vertex_bits(mask)
    nv = vb.bit_count()
    if len(g.components_bits(mask)) != 1 or nv < 2:
        return False
    if nv == 2:
        return mask.bit_count() >= 2
    for v in iter_bits(vb):
        rest = mask & ~g.incident_bits(v)
        others = vb & ~(1 << v)
        start = others & -others
        if g.reach_bits(start, rest) != others:
            return False
    return True


def is_two_connected(g: MultiGraph, x: Optional[Iterable[EdgeId]] = None) -> bool:
    return is_two_connected_bits(g, g.mask(x))


def strongly_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    """Same edge universe and the same multiset of vertex stars."""
    if set(g.edges) != set(h.edges):
        raise EdgeSetMismatch("graphs have different edge identifier sets")
    stars_g = Counter(g.star(v) for v in g.vertices)
    stars_h = Counter(h.star(v) for v in h.vertices)
    return stars_g == stars_h


def canonical_key(s: Iterable[EdgeId]):
    """Sort key for families of edge sets: size, then sorted members."""
    members = tuple(sorted(s))
    return (len(members), members)


def canonical_sort(family: Iterable[Iterable[EdgeId]]) -> list:
    return sorted((frozenset(s) for s in family), key=canonical_key)
