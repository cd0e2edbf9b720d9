"""Exhaustive ground truth for M_k(G), independent of the structural code.

Circuits come straight from the submodular function

    f_k(X) = |V(G<X>)| - 1 + k

as the minimal nonempty sets C with |C| > f_k(C). Everything else (bases,
duals, connectivity, axiom checks) is derived by subset enumeration. Nothing
here calls into :mod:`kcircular.kcirc` or :mod:`kcircular.ears`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Tuple

from .errors import (
    EdgeNotInBase,
    EdgeSetMismatch,
    EnumerationLimitExceeded,
    NotABase,
    PreconditionViolated,
)
from .graphcore import EdgeId, EdgeSet, MultiGraph, canonical_sort, iter_bits

ORACLE_LIMIT = 20


class OracleInconsistency(AssertionError):
    """The two equivalent circuit definitions disagreed."""


def f_k(g: MultiGraph, x: Iterable[EdgeId], k: int) -> int:
    return g.vertex_bits(g.mask(x)).bit_count() - 1 + k


def _check_limit(n: int, limit: int):
    if n > limit:
        raise EnumerationLimitExceeded(n, limit)


def _vertex_counts(g: MultiGraph) -> list:
    """|V(G<X>)| for every edge mask X."""
    n = len(g.edges)
    vb = [0] * (1 << n)
    cnt = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        vb[m] = vb[m ^ low] | g.edge_vertex_bits(low.bit_length() - 1)
        cnt[m] = vb[m].bit_count()
    return cnt


def _minimal_members(flags: bytearray, n: int) -> list:
    """Masks m with flags[m] set and no proper subset flagged."""
    up = bytearray(1 << n)  # up[m]: some subset of m is flagged
    out = []
    for m in range(1, 1 << n):
        below = False
        for i in iter_bits(m):
            if up[m ^ (1 << i)]:
                below = True
                break
        if below:
            up[m] = 1
        elif flags[m]:
            up[m] = 1
            out.append(m)
    return out


def _up_closure(masks: Iterable[int], n: int) -> bytearray:
    up = bytearray(1 << n)
    for m in masks:
        up[m] = 1
    for m in range(1 << n):
        if not up[m]:
            for i in iter_bits(m):
                if up[m ^ (1 << i)]:
                    up[m] = 1
                    break
    return up


def _brute_circuit_masks(g: MultiGraph, k: int, limit: int) -> list:
    n = len(g.edges)
    _check_limit(n, limit)
    cnt = _vertex_counts(g)
    over = bytearray(1 << n)
    tight = bytearray(1 << n)
    for m in range(1, 1 << n):
        f = cnt[m] - 1 + k
        size = m.bit_count()
        over[m] = size > f
        tight[m] = size == f + 1
    first = _minimal_members(over, n)
    second = _minimal_members(tight, n)
    if first != second:
        raise OracleInconsistency("minimal |C| > f(C) and minimal |C| = f(C) + 1 differ")
    return first


def brute_circuits(g: MultiGraph, k: int, limit: int = ORACLE_LIMIT) -> list:
    """Circuits of M_k(G) by exhaustive enumeration, canonically sorted."""
    return canonical_sort(g.edge_set(m) for m in _brute_circuit_masks(g, k, limit))


@dataclass(frozen=True)
class BruteMatroid:
    """A matroid given by its circuit family over a fixed ordered universe.

    The family is not assumed to satisfy the axioms; :func:`check_axioms`
    decides that. Bases are the inclusion-maximal independent sets.
    """

    universe: Tuple[EdgeId, ...]
    circuit_masks: Tuple[int, ...]

    @classmethod
    def from_circuits(
        cls, ground: Iterable[EdgeId], circuits: Iterable[Iterable[EdgeId]], limit: int = ORACLE_LIMIT
    ) -> "BruteMatroid":
        universe = tuple(sorted(str(e) for e in ground))
        _check_limit(len(universe), limit)
        pos = {e: i for i, e in enumerate(universe)}
        masks = []
        for c in circuits:
            m = 0
            for e in c:
                m |= 1 << pos[str(e)]
            masks.append(m)
        return cls(universe, tuple(sorted(set(masks))))

    @classmethod
    def of_graph(cls, g: MultiGraph, k: int, limit: int = ORACLE_LIMIT) -> "BruteMatroid":
        # graph masks already index edges in sorted order
        return cls(tuple(g.edges), tuple(_brute_circuit_masks(g, k, limit)))

    # -- conversions ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.universe)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def to_set(self, m: int) -> EdgeSet:
        return frozenset(self.universe[i] for i in iter_bits(m))

    def to_mask(self, x: Iterable[EdgeId]) -> int:
        pos = self._pos
        m = 0
        for e in x:
            m |= 1 << pos[str(e)]
        return m

    @cached_property
    def _pos(self) -> dict:
        return {e: i for i, e in enumerate(self.universe)}

    def _family(self, masks: Iterable[int]) -> list:
        return canonical_sort(self.to_set(m) for m in masks)

    # -- derived families ----------------------------------------------------

    @cached_property
    def _dependent(self) -> bytearray:
        return _up_closure(self.circuit_masks, self.n)

    def is_independent_mask(self, m: int) -> bool:
        return not self._dependent[m]

    @cached_property
    def independent_masks(self) -> Tuple[int, ...]:
        dep = self._dependent
        return tuple(m for m in range(1 << self.n) if not dep[m])

    @cached_property
    def base_masks(self) -> Tuple[int, ...]:
        dep = self._dependent
        out = []
        for m in self.independent_masks:
            if all(dep[m | (1 << i)] for i in iter_bits(self.full & ~m)):
                out.append(m)
        return tuple(out)

    @cached_property
    def cobase_masks(self) -> Tuple[int, ...]:
        return tuple(sorted(self.full & ~b for b in self.base_masks))

    @cached_property
    def cocircuit_masks(self) -> Tuple[int, ...]:
        n = self.n
        # co-independent = contained in some cobase
        down = bytearray(1 << n)
        for b in self.cobase_masks:
            down[b] = 1
        for m in range((1 << n) - 1, -1, -1):
            if not down[m]:
                for i in iter_bits(self.full & ~m):
                    if down[m | (1 << i)]:
                        down[m] = 1
                        break
        flags = bytearray(1 ^ d for d in down)
        return tuple(_minimal_members(flags, n))

    @property
    def ground(self) -> EdgeSet:
        return frozenset(self.universe)

    @property
    def circuits(self) -> list:
        return self._family(self.circuit_masks)

    @property
    def bases(self) -> list:
        return self._family(self.base_masks)

    @property
    def cobases(self) -> list:
        return self._family(self.cobase_masks)

    @property
    def cocircuits(self) -> list:
        return self._family(self.cocircuit_masks)

    def rank(self) -> int:
        return max((b.bit_count() for b in self.base_masks), default=0)

    def dual(self) -> "BruteMatroid":
        return BruteMatroid(self.universe, self.cocircuit_masks)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class AxiomReport:
    results: Tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        return next(r for r in self.results if r.name == name)


def _check_nonempty(bm: BruteMatroid) -> AxiomResult:
    if 0 in bm.circuit_masks:
        return AxiomResult("empty_not_circuit", False, (frozenset(),))
    return AxiomResult("empty_not_circuit", True)


def _check_clutter(bm: BruteMatroid) -> AxiomResult:
    for x, y in combinations(bm.circuit_masks, 2):
        if x & y == x or x & y == y:
            return AxiomResult("clutter", False, (bm.to_set(x), bm.to_set(y)))
    return AxiomResult("clutter", True)


def _check_elimination(bm: BruteMatroid) -> AxiomResult:
    dep = bm._dependent
    for x, y in combinations(bm.circuit_masks, 2):
        for e in iter_bits(x & y):
            if not dep[(x | y) & ~(1 << e)]:
                witness = (bm.to_set(x), bm.to_set(y), bm.universe[e])
                return AxiomResult("circuit_elimination", False, witness)
    return AxiomResult("circuit_elimination", True)


def _check_base_exchange(bm: BruteMatroid) -> AxiomResult:
    bases = set(bm.base_masks)
    if not bases:
        return AxiomResult("base_exchange", False, ())
    for b1 in bm.base_masks:
        for b2 in bm.base_masks:
            for x in iter_bits(b1 & ~b2):
                rest = b1 & ~(1 << x)
                if not any(rest | (1 << y) in bases for y in iter_bits(b2 & ~b1)):
                    witness = (bm.to_set(b1), bm.to_set(b2), bm.universe[x])
                    return AxiomResult("base_exchange", False, witness)
    return AxiomResult("base_exchange", True)


def _check_augmentation(bm: BruteMatroid) -> AxiomResult:
    """For independent I1, I2 with |I2| = |I1| + 1, some e in I2 - I1 extends I1."""
    n = bm.n
    dep = bm._dependent
    # best[m]: size of a largest independent subset of m
    best = [0] * (1 << n)
    for m in range(1, 1 << n):
        if not dep[m]:
            best[m] = m.bit_count()
        else:
            best[m] = max(best[m ^ (1 << i)] for i in iter_bits(m))
    for i1 in bm.independent_masks:
        ext = 0
        for e in iter_bits(bm.full & ~i1):
            if not dep[i1 | (1 << e)]:
                ext |= 1 << e
        room = bm.full & ~ext
        if best[room] > i1.bit_count():
            size = i1.bit_count() + 1
            i2 = next(
                m
                for m in bm.independent_masks
                if m.bit_count() == size and m & ~room == 0
            )
            return AxiomResult("augmentation", False, (bm.to_set(i1), bm.to_set(i2)))
    return AxiomResult("augmentation", True)


def check_axioms(bm: BruteMatroid) -> AxiomReport:
    """Check the matroid axioms, attaching a witness to every failure."""
    return AxiomReport(
        (
            _check_nonempty(bm),
            _check_clutter(bm),
            _check_elimination(bm),
            _check_base_exchange(bm),
            _check_augmentation(bm),
        )
    )


def brute_dual_cocircuit(bm: BruteMatroid, b: Iterable[EdgeId], e: EdgeId) -> EdgeSet:
    """The cocircuit C* with e in C* and C* contained in (ground - b) + e."""
    bmask = bm.to_mask(b)
    if bmask not in set(bm.base_masks):
        raise NotABase("given edge set is not a base")
    if str(e) not in bm._pos or not bmask >> bm._pos[str(e)] & 1:
        raise EdgeNotInBase(f"{e!r} is not in the base")
    bit = 1 << bm._pos[str(e)]
    allowed = (bm.full & ~bmask) | bit
    hits = [c for c in bm.cocircuit_masks if c & bit and c & ~allowed == 0]
    if len(hits) != 1:
        raise OracleInconsistency(f"expected one fundamental cocircuit, found {len(hits)}")
    return bm.to_set(hits[0])


def brute_components(bm: BruteMatroid) -> list:
    """Classes of the relation 'equal or share a circuit'."""
    parent = list(range(bm.n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in bm.circuit_masks:
        members = list(iter_bits(c))
        for j in members[1:]:
            parent[find(j)] = find(members[0])
    groups = {}
    for i in range(bm.n):
        groups.setdefault(find(i), 0)
        groups[find(i)] |= 1 << i
    return bm._family(groups.values())


def brute_is_connected(bm: BruteMatroid) -> bool:
    """At least two elements, and every pair lies in a common circuit."""
    if bm.n < 2:
        return False
    covered = 0
    for c in bm.circuit_masks:
        covered |= c
    return covered == bm.full and len(brute_components(bm)) == 1


def matroids_equal(g: MultiGraph, h: MultiGraph, k: int, limit: int = ORACLE_LIMIT) -> bool:
    if set(g.edges) != set(h.edges):
        raise EdgeSetMismatch("graphs have different edge identifiers")
    return brute_circuits(g, k, limit) == brute_circuits(h, k, limit)


def check_ivt(g: MultiGraph, limit: int = ORACLE_LIMIT) -> bool:
    """Every delta value from -1 up to delta(G) is attained by some nonempty edge set."""
    if all(g.ends_index(i)[0] == g.ends_index(i)[1] for i in range(len(g.edges))):
        raise PreconditionViolated("needs at least one non-loop edge")
    n = len(g.edges)
    _check_limit(n, limit)
    cnt = _vertex_counts(g)
    seen = {m.bit_count() - cnt[m] for m in range(1, 1 << n)}
    return all(i in seen for i in range(-1, g.delta_bits(g.full) + 1))
