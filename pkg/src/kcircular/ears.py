"""Ear assemblies of cacti-graphs and the constructions built on them.

An ear assembly grows a start subgraph into a target one, one ear at a time,
with delta rising by exactly one per ear. Every stage is a cacti-graph (or a
2-connected graph for :func:`ear_assembly_2conn`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

from .errors import (
    KOutOfRange,
    NoExtensionExists,
    NotCacti,
    NotSameComponent,
    PreconditionViolated,
    UnknownEdge,
)
from .graphcore import (
    EdgeId,
    EdgeSet,
    MultiGraph,
    core_bits,
    is_bicycle_bits,
    is_two_connected_bits,
    iter_bits,
    lowest_bit,
)
from .kcirc import KCircularMatroid


class EarKind(enum.Enum):
    PATH = "path"
    LOLLIPOP = "lollipop"
    CYCLE = "cycle"
    BICYCLE = "bicycle"


@dataclass(frozen=True)
class Ear:
    kind: EarKind
    edges: EdgeSet
    attachment: frozenset  # vertices shared with the previous stage


@dataclass(frozen=True)
class EarAssembly:
    start: EdgeSet
    ears: Tuple[Ear, ...] = field(default_factory=tuple)

    def stages(self) -> list:
        out = [self.start]
        for ear in self.ears:
            out.append(out[-1] | ear.edges)
        return out

    @property
    def final(self) -> EdgeSet:
        return self.stages()[-1]


def _other_end(g: MultiGraph, i: int, v: int) -> int:
    a, b = g.ends_index(i)
    return b if a == v else a


def _ear(g: MultiGraph, kind: EarKind, mask: int, attach_bits: int) -> Ear:
    return Ear(kind, g.edge_set(mask), g.vertex_names(attach_bits))


def _walk(g: MultiGraph, within: int, stage_v: int, x: int, first: int) -> Ear:
    """Leave the stage at vertex ``x`` along edge ``first`` and keep going
    (smallest unused edge first) until the walk hits the stage or itself.
    """
    used = 1 << first
    y = _other_end(g, first, x)
    if y == x:
        return _ear(g, EarKind.CYCLE, used, 1 << x)
    if stage_v >> y & 1:
        return _ear(g, EarKind.PATH, used, (1 << x) | (1 << y))
    on_path = (1 << x) | (1 << y)
    while True:
        cand = within & g.incident_bits(y) & ~used
        if not cand:
            raise PreconditionViolated("ear search reached a leaf; the target has leaves")
        f = lowest_bit(cand)
        used |= 1 << f
        z = _other_end(g, f, y)
        if stage_v >> z & 1:
            if z == x:
                return _ear(g, EarKind.CYCLE, used, 1 << x)
            return _ear(g, EarKind.PATH, used, (1 << x) | (1 << z))
        if on_path >> z & 1:
            return _ear(g, EarKind.LOLLIPOP, used, 1 << x)
        on_path |= 1 << z
        y = z


def _bfs_path(g: MultiGraph, within: int, sources: int, targets: int) -> Optional[int]:
    """Edge mask of a shortest path from ``sources`` to ``targets``."""
    if sources & targets:
        return 0
    parent = {}
    seen = sources
    frontier = list(iter_bits(sources))
    while frontier:
        nxt = []
        for v in frontier:
            for i in iter_bits(within & g.incident_bits(v)):
                w = _other_end(g, i, v)
                if seen >> w & 1:
                    continue
                seen |= 1 << w
                parent[w] = (i, v)
                if targets >> w & 1:
                    path = 0
                    while w in parent:
                        i, w = parent[w]
                        path |= 1 << i
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def _cycle_through(g: MultiGraph, i: int, within: int) -> int:
    a, b = g.ends_index(i)
    if a == b:
        return 1 << i
    path = _bfs_path(g, within & ~(1 << i), 1 << a, 1 << b)
    assert path is not None, "edge is a bridge"
    return path | (1 << i)


def _on_cycle(g: MultiGraph, i: int, within: int) -> bool:
    return not g.is_bridge_bits(i, within)


def _frontier_ear(g: MultiGraph, within: int, stage: int) -> Optional[Ear]:
    stage_v = g.vertex_bits(stage)
    for x in iter_bits(stage_v):
        cand = within & g.incident_bits(x) & ~stage
        if cand:
            return _walk(g, within, stage_v, x, lowest_bit(cand))
    return None


def _some_bicycle(g: MultiGraph, comp: int) -> int:
    """A bicycle inside the connected cacti-graph ``comp``."""
    i = next(i for i in iter_bits(comp) if _on_cycle(g, i, comp))
    c = _cycle_through(g, i, comp)
    ear = _frontier_ear(g, comp, c)
    return c | g.mask(ear.edges)


def _segment(g: MultiGraph, cyc: int, i: int, stop_v: int) -> int:
    """The stretch of cycle ``cyc`` through edge ``i`` between touches of ``stop_v``."""
    seg = 1 << i
    stack = [v for v in g.ends_index(i) if not stop_v >> v & 1]
    while stack:
        v = stack.pop()
        for j in iter_bits(cyc & g.incident_bits(v) & ~seg):
            seg |= 1 << j
            w = _other_end(g, j, v)
            if not stop_v >> w & 1:
                stack.append(w)
    return seg


def _cycle_and_bridge(g: MultiGraph, comp: int, cyc: int, i: int) -> int:
    """Dumbbell: cycle ``cyc`` joined through bridge ``i`` to a lollipop beyond it."""
    vc = g.vertex_bits(cyc)
    a, b = g.ends_index(i)
    side = g.reach_bits(vc & -vc, comp & ~(1 << i))
    u = a if side >> a & 1 else b
    q = _bfs_path(g, comp & ~(1 << i), vc, 1 << u)
    stage_v = vc | g.vertex_bits(q) | (1 << u)
    lolli = _walk(g, comp, stage_v, u, i)
    assert lolli.kind is EarKind.LOLLIPOP
    return cyc | q | g.mask(lolli.edges)


def _two_bridges(g: MultiGraph, comp: int, ia: int, ib: int) -> int:
    if ia == ib:
        p, _ = g.ends_index(ia)
        first = _walk(g, comp, 1 << p, p, ia)
        fm = g.mask(first.edges)
        other = comp & g.incident_bits(p) & ~(1 << ia)
        second = _walk(g, comp, g.vertex_bits(fm), p, lowest_bit(other))
        return fm | g.mask(second.edges)
    bv = g.edge_vertex_bits(ib)
    av = g.edge_vertex_bits(ia)
    pa, qa = g.ends_index(ia)
    a2 = pa if g.reach_bits(1 << pa, comp & ~(1 << ia)) & bv else qa
    pb, qb = g.ends_index(ib)
    b1 = pb if g.reach_bits(1 << pb, comp & ~(1 << ib)) & av else qb
    l1 = _walk(g, comp, 1 << a2, a2, ia)
    l2 = _walk(g, comp, 1 << b1, b1, ib)
    mid = _bfs_path(g, comp & ~(1 << ia) & ~(1 << ib), 1 << a2, 1 << b1)
    return g.mask(l1.edges) | mid | g.mask(l2.edges)


def find_bicycle_through(
    g: MultiGraph, a: EdgeId, b: EdgeId, within: Optional[Iterable[EdgeId]] = None
) -> EdgeSet:
    """A bicycle containing edges ``a`` and ``b``, classified by :func:`classify_bicycle`.

    Both edges must lie in one component of G (or of G<within>) and that
    component must be a cactus.
    """
    w = g.mask(within)
    ia, ib = g.index(a), g.index(b)
    if not (w >> ia & 1 and w >> ib & 1):
        raise NotSameComponent("edges are not in the given subgraph")
    comp = next(c for c in g.components_bits(w) if c >> ia & 1)
    if not comp >> ib & 1:
        raise NotSameComponent(f"{a!r} and {b!r} lie in different components")
    if not g.is_cacti_bits(comp):
        raise NotCacti("the component holding both edges is not a cactus")
    return g.edge_set(_bicycle_bits(g, comp, ia, ib))


def _bicycle_bits(g: MultiGraph, comp: int, ia: int, ib: int) -> int:
    ca, cb = _on_cycle(g, ia, comp), _on_cycle(g, ib, comp)
    if not ca and cb:
        ia, ib, ca, cb = ib, ia, cb, ca
    if ca:
        c = _cycle_through(g, ia, comp)
        if c >> ib & 1:
            d = c | g.mask(_frontier_ear(g, comp, c).edges)
        elif cb:
            c2 = _cycle_through(g, ib, comp)
            vc, vc2 = g.vertex_bits(c), g.vertex_bits(c2)
            if (vc & vc2).bit_count() >= 2:
                d = c | _segment(g, c2, ib, vc)
            else:
                d = c | c2 | _bfs_path(g, comp, vc, vc2)
        else:
            d = _cycle_and_bridge(g, comp, c, ib)
    else:
        d = _two_bridges(g, comp, ia, ib)
    assert is_bicycle_bits(g, d) and d >> ia & 1 and d >> ib & 1
    return d


def ear_assembly(
    g: MultiGraph, g0: Iterable[EdgeId], target: Optional[Iterable[EdgeId]] = None
) -> EarAssembly:
    """Ear assembly from ``g0`` up to ``target`` (default: all of G).

    ``target`` must induce a cacti-graph; ``g0`` a cacti-subgraph of it or a
    single cycle.
    """
    t = g.mask(target)
    s = g.mask(g0)
    if not g.is_cacti_bits(t):
        raise PreconditionViolated("target is not a cacti-graph")
    if s & ~t:
        raise PreconditionViolated("start is not inside the target")
    if not (g.is_cacti_bits(s) or g.is_cycle_bits(s)):
        raise PreconditionViolated("start must be a cacti-graph or a cycle")
    ears = []
    while s != t:
        ear = _frontier_ear(g, t, s)
        if ear is None:
            comp = g.components_bits(t & ~s)[0]
            ear = Ear(EarKind.BICYCLE, g.edge_set(_some_bicycle(g, comp)), frozenset())
        ears.append(ear)
        s |= g.mask(ear.edges)
    return EarAssembly(g.edge_set(g.mask(g0)), tuple(ears))


def ear_assembly_2conn(g: MultiGraph, g0: Iterable[EdgeId]) -> EarAssembly:
    """Path-only ear assembly between 2-connected graphs."""
    s = g.mask(g0)
    if not is_two_connected_bits(g, g.full):
        raise PreconditionViolated("graph is not 2-connected")
    if not is_two_connected_bits(g, s):
        raise PreconditionViolated("start subgraph is not 2-connected")
    ears = []
    while s != g.full:
        stage_v = g.vertex_bits(s)
        ear = None
        for x in iter_bits(stage_v):
            cand = g.incident_bits(x) & ~s
            if not cand:
                continue
            f = lowest_bit(cand)
            y = _other_end(g, f, x)
            if stage_v >> y & 1:
                ear = _ear(g, EarKind.PATH, 1 << f, (1 << x) | (1 << y))
            else:
                rest = g.full & ~s & ~g.incident_bits(x)
                path = _bfs_path(g, rest, 1 << y, stage_v & ~(1 << x))
                z = next(v for v in iter_bits(g.vertex_bits(path) & stage_v))
                ear = _ear(g, EarKind.PATH, path | (1 << f), (1 << x) | (1 << z))
            break
        ears.append(ear)
        s |= g.mask(ear.edges)
    return EarAssembly(g.edge_set(g.mask(g0)), tuple(ears))


def _is_path_bits(g: MultiGraph, m: int) -> bool:
    deg = g.degree_list(m)
    return (
        g.delta_bits(m) == -1
        and len(g.components_bits(m)) == 1
        and max(deg) <= 2
    )


def _is_lollipop_bits(g: MultiGraph, m: int) -> bool:
    deg = [d for d in g.degree_list(m) if d]
    return (
        g.delta_bits(m) == 0
        and len(g.components_bits(m)) == 1
        and sorted(d for d in deg if d != 2) == [1, 3]
    )


def _ear_ok(g: MultiGraph, ear: Ear, stage: int, two_connected: bool) -> bool:
    p = g.mask(ear.edges)
    if not p or p & stage:
        return False
    meet = g.vertex_bits(stage) & g.vertex_bits(p)
    if g.vertex_bits_of(ear.attachment) != meet:
        return False
    if two_connected and ear.kind is not EarKind.PATH:
        return False
    deg = g.degree_list(p)
    if ear.kind is EarKind.PATH:
        ends = sum(1 << v for v, d in enumerate(deg) if d == 1)
        return _is_path_bits(g, p) and meet == ends
    if ear.kind is EarKind.LOLLIPOP:
        ends = sum(1 << v for v, d in enumerate(deg) if d == 1)
        return _is_lollipop_bits(g, p) and meet == ends
    if ear.kind is EarKind.CYCLE:
        return g.is_cycle_bits(p) and meet.bit_count() == 1
    return is_bicycle_bits(g, p) and meet == 0


def validate_assembly(
    g: MultiGraph,
    asm: EarAssembly,
    target: Optional[Iterable[EdgeId]] = None,
    two_connected: bool = False,
) -> bool:
    """Check each ear against its kind and each stage, with delta rising by exactly one per ear."""
    try:
        t = g.mask(target)
        s = g.mask(asm.start)
        if s & ~t:
            return False
        if two_connected:
            if not is_two_connected_bits(g, s):
                return False
        elif not (g.is_cacti_bits(s) or g.is_cycle_bits(s)):
            return False
        for ear in asm.ears:
            if not _ear_ok(g, ear, s, two_connected):
                return False
            new = s | g.mask(ear.edges)
            if g.delta_bits(new) - g.delta_bits(s) != 1:
                return False
            stage_ok = is_two_connected_bits(g, new) if two_connected else g.is_cacti_bits(new)
            if not stage_ok:
                return False
            s = new
        return s == t
    except UnknownEdge:
        return False


def cacti_subgraph_through(g: MultiGraph, a: EdgeId, b: EdgeId, k: int) -> EdgeSet:
    """A cacti-subgraph F of G with a, b in F and delta(F) = k."""
    if not g.is_cacti_bits(g.full):
        raise NotCacti("graph is not a cacti-graph")
    ia, ib = g.index(a), g.index(b)
    comps = g.components_bits(g.full)
    ca = next(c for c in comps if c >> ia & 1)
    top = g.delta_bits(g.full)
    if ca >> ib & 1:
        if not 1 <= k <= top:
            raise KOutOfRange(f"k must lie in 1..{top}")
        start = _bicycle_bits(g, ca, ia, ib)
        skip = 1
    else:
        if not 2 <= k <= top:
            raise KOutOfRange(f"k must lie in 2..{top}")
        cb = next(c for c in comps if c >> ib & 1)
        start = _bicycle_bits(g, ca, ia, ia) | _bicycle_bits(g, cb, ib, ib)
        skip = 2
    asm = ear_assembly(g, g.edge_set(start))
    return asm.stages()[k - skip]


def circuit_extension(m: KCircularMatroid, c: Iterable[EdgeId]) -> Ear:
    """An ear P such that c + P is a k-circuit, for a (k-1)-circuit c."""
    g = m.graph
    if m.k < 2:
        raise PreconditionViolated("growing a circuit needs k >= 2")
    cm = g.mask(c)
    if not KCircularMatroid(g, m.k - 1).is_circuit(g.edge_set(cm)):
        raise PreconditionViolated("c is not a circuit one level down")
    home = core_bits(g, g.full)
    ear = _frontier_ear(g, home, cm)
    if ear is None:
        rest = home & ~cm
        if not rest:
            raise NoExtensionExists("the circuit already covers the core of G")
        comp = g.components_bits(rest)[0]
        ear = Ear(EarKind.BICYCLE, g.edge_set(_some_bicycle(g, comp)), frozenset())
    assert m.is_circuit(g.edge_set(cm | g.mask(ear.edges)))
    return ear


def grow_circuit(m: KCircularMatroid, c: Iterable[EdgeId]) -> EdgeSet:
    ear = circuit_extension(m, c)
    return frozenset(c) | ear.edges


def decompose_circuit(m: KCircularMatroid, c: Iterable[EdgeId]) -> Tuple[EdgeSet, Ear]:
    """Split a k-circuit (k >= 2) into a (k-1)-circuit and one ear."""
    g = m.graph
    if m.k < 2:
        raise PreconditionViolated("decomposition needs k >= 2")
    cm = g.mask(c)
    if not m.is_circuit(g.edge_set(cm)):
        raise PreconditionViolated("not a circuit")
    seed = _some_bicycle(g, g.components_bits(cm)[0])
    asm = ear_assembly(g, g.edge_set(seed), target=g.edge_set(cm))
    last = asm.ears[-1]
    return g.edge_set(cm & ~g.mask(last.edges)), last
