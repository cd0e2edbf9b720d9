"""The k-circular matroid M_k(G) computed from graph structure."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    EdgeInBase,
    EdgeNotInBase,
    EnumerationLimitExceeded,
    InputError,
    IsolatedVertex,
    KMustBeAtLeast2,
    NotABase,
    NotConnected,
    PreconditionViolated,
    TrivialMatroid,
)
from .graphcore import (
    EdgeId,
    EdgeSet,
    MultiGraph,
    canonical_sort,
    core_bits,
    iter_bits,
)

DEFAULT_ENUM_LIMIT = 24


class CocircuitKind(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3


@dataclass(frozen=True)
class KCircularMatroid:
    """M_k(G): circuits are the minimal edge sets C with |C| = |V(G<C>)| + k.

    k = 0 gives the cycle matroid and k = 1 the bicircular matroid.
    """

    graph: MultiGraph
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise InputError(f"k must be a non-negative integer, got {self.k!r}")
        iso = self.graph.isolated_vertices()
        if iso:
            raise IsolatedVertex(f"graph has isolated vertices: {', '.join(iso)}")

    # -- bitmask core --------------------------------------------------------

    def _independent_bits(self, mask: int) -> bool:
        g = self.graph
        cyclic = 0
        for c in g.components_bits(mask):
            if g.delta_bits(c) >= 0:
                cyclic |= c
        return not cyclic or g.delta_bits(cyclic) < self.k

    def _circuit_bits(self, mask: int) -> bool:
        g = self.graph
        if self.k == 0:
            return g.is_cycle_bits(mask)
        return g.delta_bits(mask) == self.k and g.is_cacti_bits(mask)

    def _greedy_bits(self, mask: int) -> int:
        got = 0
        for i in iter_bits(mask):
            if self._independent_bits(got | (1 << i)):
                got |= 1 << i
        return got

    def _is_base_bits(self, mask: int) -> bool:
        g = self.graph
        if self._structural_bases:
            if g.delta_bits(mask) != self.k - 1:
                return False
            if g.vertex_bits(mask).bit_count() != len(g.vertices):
                return False
            return all(g.delta_bits(c) >= 0 for c in g.components_bits(mask))
        if not self._independent_bits(mask):
            return False
        return all(
            not self._independent_bits(mask | (1 << i)) for i in iter_bits(g.full & ~mask)
        )

    @cached_property
    def _structural_bases(self) -> bool:
        return self.k >= 1 and self.is_connected_matroid()

    def _check_base(self, b: Iterable[EdgeId]) -> int:
        bm = self.graph.mask(b)
        if not self._is_base_bits(bm):
            raise NotABase("given edge set is not a base")
        return bm

    # -- public queries ------------------------------------------------------

    @property
    def ground(self) -> EdgeSet:
        return frozenset(self.graph.edges)

    def is_trivial(self) -> bool:
        """True iff M_k(G) has no circuit.

        For k >= 1 this is k > delta(G) + t(G), t counting tree components;
        for k = 0 it means G is a forest.
        """
        g = self.graph
        if self.k == 0:
            return all(g.delta_bits(c) < 0 for c in g.components_bits(g.full))
        trees = sum(1 for c in g.components_bits(g.full) if g.delta_bits(c) < 0)
        return self.k > g.delta_bits(g.full) + trees

    def is_independent(self, x: Iterable[EdgeId]) -> bool:
        return self._independent_bits(self.graph.mask(x))

    def rank_of(self, x: Optional[Iterable[EdgeId]] = None) -> int:
        return self._greedy_bits(self.graph.mask(x)).bit_count()

    def rank(self) -> int:
        return self.rank_of(None)

    def corank(self) -> int:
        return len(self.graph.edges) - self.rank()

    def is_circuit(self, x: Iterable[EdgeId]) -> bool:
        return self._circuit_bits(self.graph.mask(x))

    def circuits(self, limit: int = DEFAULT_ENUM_LIMIT) -> list:
        """Every circuit, in canonical order (size, then sorted members)."""
        return canonical_sort(self.graph.edge_set(c) for c in self.circuit_bits(limit))

    def circuit_bits(self, limit: int = DEFAULT_ENUM_LIMIT) -> list:
        g = self.graph
        if len(g.edges) > limit:
            raise EnumerationLimitExceeded(len(g.edges), limit)
        if self.is_trivial():
            return []
        # circuits avoid coloops (k >= 1) and live inside the kernel (k = 0)
        if self.k == 0:
            pool = g.kernel_bits(g.full, 0)
        else:
            pool = core_bits(g, g.full)
        idx = list(iter_bits(pool))
        found = []
        for size in range(1, len(idx) + 1):
            for combo in combinations(idx, size):
                m = 0
                for i in combo:
                    m |= 1 << i
                if any(c & m == c for c in found):
                    continue
                if self._circuit_bits(m):
                    found.append(m)
        return found

    def is_base(self, x: Iterable[EdgeId]) -> bool:
        return self._is_base_bits(self.graph.mask(x))

    def find_base(self) -> EdgeSet:
        """Lexicographic greedy base."""
        return self.graph.edge_set(self._greedy_bits(self.graph.full))

    def bases(self, limit: int = DEFAULT_ENUM_LIMIT) -> list:
        g = self.graph
        if len(g.edges) > limit:
            raise EnumerationLimitExceeded(len(g.edges), limit)
        r = self.rank()
        out = []
        for combo in combinations(range(len(g.edges)), r):
            m = 0
            for i in combo:
                m |= 1 << i
            if self._is_base_bits(m):
                out.append(g.edge_set(m))
        return canonical_sort(out)

    def _require_positive_k(self):
        if self.k < 1:
            raise PreconditionViolated("this query needs k >= 1")

    def coloops(self) -> EdgeSet:
        """E minus the core of G; the same set for every nontrivial k >= 1."""
        self._require_positive_k()
        if self.is_trivial():
            raise TrivialMatroid("every edge of a trivial matroid is a coloop")
        g = self.graph
        return g.edge_set(g.full & ~core_bits(g, g.full))

    def is_connected_matroid(self) -> bool:
        self._require_positive_k()
        g = self.graph
        if self.is_trivial() or not g.is_cacti_bits(g.full):
            return False
        if self.k == 1:
            return len(g.components_bits(g.full)) == 1
        return True

    def matroid_components_k1(self) -> list:
        """Connected components of M_1(G) for a cacti-graph G: one per graph component."""
        g = self.graph
        if self.k != 1 or self.is_trivial() or not g.is_cacti_bits(g.full):
            raise PreconditionViolated("needs k = 1, a nontrivial matroid and a cacti-graph")
        return [g.edge_set(c) for c in g.components_bits(g.full)]

    def fundamental_circuit(self, b: Iterable[EdgeId], e: EdgeId) -> EdgeSet:
        """The unique circuit inside b + e, for a base b and an edge e outside it."""
        g = self.graph
        i = g.index(e)
        bm = self._check_base(b)
        if bm >> i & 1:
            raise EdgeInBase(f"{e!r} is in the base")
        c = bm | (1 << i)
        for u in iter_bits(bm):
            if not self._independent_bits(c & ~(1 << u)):
                c &= ~(1 << u)
        return g.edge_set(c)

    def _base_component(self, b: Iterable[EdgeId], e: EdgeId):
        g = self.graph
        if not self.is_connected_matroid():
            raise NotConnected("cocircuit formulas need a connected matroid")
        i = g.index(e)
        bm = self._check_base(b)
        if not bm >> i & 1:
            raise EdgeNotInBase(f"{e!r} is not in the base")
        comp = next(c for c in g.components_bits(bm) if c >> i & 1)
        return bm, i, comp

    def _kind(self, i: int, comp: int) -> CocircuitKind:
        g = self.graph
        if not g.strip_leaves_bits(comp) >> i & 1:
            return CocircuitKind.TYPE1
        if g.delta_bits(comp) == 0:
            return CocircuitKind.TYPE2
        return CocircuitKind.TYPE3

    def cocircuit_kind(self, b: Iterable[EdgeId], e: EdgeId) -> CocircuitKind:
        _, i, comp = self._base_component(b, e)
        return self._kind(i, comp)

    def fundamental_cocircuit(self, b: Iterable[EdgeId], e: EdgeId) -> EdgeSet:
        """The unique cocircuit meeting the base b exactly in {e}."""
        g = self.graph
        bm, i, comp = self._base_component(b, e)
        kind = self._kind(i, comp)
        outside = g.full & ~bm
        if kind is CocircuitKind.TYPE3:
            return g.edge_set(outside | (1 << i))
        rest = comp & ~(1 << i)
        if kind is CocircuitKind.TYPE1:
            parts = g.spanning_components_bits(g.vertex_bits(comp), rest)
            trees = [vm for em, vm in parts if em.bit_count() == vm.bit_count() - 1]
            assert len(trees) == 1, "type-1 root must split off exactly one tree"
            touch = trees[0]
        else:
            touch = g.vertex_bits(comp)
        k = 1 << i
        for u in iter_bits(outside):
            if g.edge_vertex_bits(u) & touch:
                k |= 1 << u
        return g.edge_set(k)

    def base_core(self, b: Iterable[EdgeId]) -> EdgeSet:
        """Core of G<b>; for k >= 2 this is the unique (k-1)-circuit inside b."""
        if self.k < 2:
            raise KMustBeAtLeast2("the core of a base is defined for k >= 2")
        if not self.is_connected_matroid():
            raise NotConnected("the core of a base needs a connected matroid")
        g = self.graph
        bm = self._check_base(b)
        return g.edge_set(core_bits(g, bm))

    def base_component_kernels(self, b: Iterable[EdgeId]) -> list:
        """k = 1 only: the kernel of every component of G<b>."""
        if self.k != 1:
            raise PreconditionViolated("component kernels of a base are a k = 1 query")
        if not self.is_connected_matroid():
            raise NotConnected("needs a connected matroid")
        g = self.graph
        bm = self._check_base(b)
        return [g.edge_set(g.strip_leaves_bits(c)) for c in g.components_bits(bm)]
