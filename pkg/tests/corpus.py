"""Shared test corpus of small simple graphs, named shapes and their relabelings, plus seeded random multigraphs."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from kcircular import MultiGraph

RANDOM_SEED = 20240917
RANDOM_COUNT = 200
RANDOM_MAX_EDGES = 8


def graph(edges: dict) -> MultiGraph:
    return MultiGraph.from_edges({e: tuple(uv) for e, uv in edges.items()})


def pairs(*names: str) -> MultiGraph:
    """Edges named by their endpoints, e.g. pairs("12", "23") is a path 1-2-3."""
    return graph({n: (n[0], n[1]) for n in names})


K4 = pairs("12", "13", "14", "23", "24", "34")
THETA = graph({"a": "12", "b": "13", "c": "32", "d": "14", "e": "42"})
DUMBBELL = graph({"a": "12", "b": "23", "c": "31", "d": "34", "x": "45", "y": "56", "z": "64"})
BUTTERFLY = graph({"a": "12", "b": "23", "c": "31", "x": "34", "y": "45", "z": "53"})
CYCLE4_CHORD = pairs("12", "23", "34", "14", "13")
TWO_THETAS = graph({
    "a": "12", "b": "13", "c": "32", "d": "14", "e": "42",
    "p": "56", "q": "57", "r": "76", "s": "58", "t": "86",
})
THETA_TRIANGLE = graph({
    "a": "12", "b": "13", "c": "32", "d": "14", "e": "42",
    "x": "56", "y": "67", "z": "75",
})
THETA_PENDANT = graph({"a": "12", "b": "13", "c": "32", "d": "14", "e": "42", "f": "45"})
LOLLIPOP = graph({"a": "12", "b": "23", "c": "31", "d": "34", "f": "45"})

NAMED = {
    "theta": THETA,
    "dumbbell": DUMBBELL,
    "butterfly": BUTTERFLY,
    "K4": K4,
    "cycle4+chord": CYCLE4_CHORD,
    "two-thetas": TWO_THETAS,
    "theta+triangle": THETA_TRIANGLE,
    "theta+pendant": THETA_PENDANT,
    "lollipop": LOLLIPOP,
}

# Same edge universe {a, b, c}, pairwise not strongly isomorphic, equal M_1.
THREE_EDGE_TWINS = {
    "triple-parallel": graph({"a": "12", "b": "12", "c": "12"}),
    "loop-edge-loop": graph({"a": "11", "b": "12", "c": "22"}),
    "parallel+loop": graph({"a": "12", "b": "12", "c": "22"}),
}


def all_simple_connected(max_vertices: int = 4) -> list:
    """Every labeled connected simple graph on 2..max_vertices vertices."""
    out = []
    for n in range(2, max_vertices + 1):
        names = [f"{u}{v}" for u, v in combinations(range(1, n + 1), 2)]
        for size in range(n - 1, len(names) + 1):
            for chosen in combinations(names, size):
                g = pairs(*chosen)
                if len(g.vertices) == n and len(g.components_bits(g.full)) == 1:
                    out.append((f"simple{n}:{'-'.join(chosen)}", g))
    return out


def relabel(g: MultiGraph, mapping: dict) -> MultiGraph:
    """Same edge ids, vertices renamed: a strongly isomorphic copy."""
    return MultiGraph.from_edges({e: (mapping[g.ends(e)[0]], mapping[g.ends(e)[1]]) for e in g.edges})


def relabelings() -> list:
    out = []
    for name, g in NAMED.items():
        verts = list(g.vertices)
        perm = verts[1:] + verts[:1]
        out.append((f"{name}~relabel", relabel(g, dict(zip(verts, perm)))))
    for g_name, g in [("K4", K4), ("theta", THETA)]:
        verts = list(g.vertices)
        for i, perm in enumerate(permutations(verts)):
            if i in (5, 11):
                out.append((f"{g_name}~perm{i}", relabel(g, dict(zip(verts, perm)))))
    return out


def random_multigraphs(count: int = RANDOM_COUNT, seed: int = RANDOM_SEED) -> list:
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        m = rng.randint(1, RANDOM_MAX_EDGES)
        nv = rng.randint(1, min(6, m + 1))
        edges = {f"e{i}": (str(rng.randrange(nv)), str(rng.randrange(nv))) for i in range(m)}
        out.append((f"random{idx}", MultiGraph.from_edges(edges)))
    return out


@lru_cache(maxsize=None)
def corpus() -> tuple:
    items = all_simple_connected()
    items += list(NAMED.items())
    items += relabelings()
    items += list(THREE_EDGE_TWINS.items())
    items += random_multigraphs()
    return tuple(items)
