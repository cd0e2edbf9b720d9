"""Acceptance suite: one check per criterion, each printing a PASS or FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest,
where the lines also appear in the terminal summary.
"""
from __future__ import annotations

import os
import sys
import time
from collections import defaultdict
from functools import lru_cache
from itertools import combinations

sys.path.insert(0, os.path.dirname(__file__))

import pytest  # noqa: E402

from corpus import K4, TWO_THETAS, corpus  # noqa: E402
from kcircular import (  # noqa: E402
    CocircuitKind, KCircularMatroid, components, core, delta, ear_assembly, is_cacti, is_cycle,
    validate_assembly,
)
from kcircular.graphcore import core_bits  # noqa: E402
from kcircular.oracle import (  # noqa: E402
    BruteMatroid, brute_circuits, brute_dual_cocircuit, brute_is_connected, check_axioms,
)
from strategies import subgraph  # noqa: E402

RESULTS: dict = {}
POSITIVE_K = (1, 2, 3)


@lru_cache(maxsize=None)
def brute(idx: int, k: int) -> BruteMatroid:
    return BruteMatroid.of_graph(corpus()[idx][1], k)


def instances(ks=POSITIVE_K):
    for idx, (name, g) in enumerate(corpus()):
        for k in ks:
            yield idx, name, g, k


def record(number: int, title: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    RESULTS[number] = line
    print(line)
    return ok


# -- criteria -------------------------------------------------------------------

def criterion_1() -> bool:
    start = time.perf_counter()
    bad = []
    count = 0
    for idx, name, g, k in instances((0, 1, 2, 3)):
        count += 1
        if KCircularMatroid(g, k).circuits() != brute_circuits(g, k):
            bad.append((name, k))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    detail = f"{count} instances, {len(bad)} mismatches, {elapsed:.1f}s"
    if bad:
        detail += f", first {bad[0]}"
    return record(1, "structural circuits equal brute-force circuits", ok, detail)


def criterion_2() -> bool:
    bad = []
    checked = 0
    for idx, name, g, k in instances():
        m = KCircularMatroid(g, k)
        if not m.is_connected_matroid():
            continue
        checked += 1
        r = len(g.vertices) - 1 + k
        bm = brute(idx, k)
        if any(len(b) != r for b in bm.bases) or m.rank() != r:
            bad.append((name, k, "base"))
        if any(len(c) != len(g.edges) - len(g.vertices) + 1 - k for c in bm.cobases):
            bad.append((name, k, "cobase"))
    ok = not bad and checked > 0
    return record(2, "rank is |V|-1+k on connected matroids", ok,
                  f"{checked} connected instances, {len(bad)} failures")


def criterion_3() -> bool:
    m = KCircularMatroid(K4, 1)
    bm = BruteMatroid.of_graph(K4, 1)
    circuits = bm.circuits
    ok = (
        len(circuits) == 6
        and all(len(c) == 5 for c in circuits)
        and m.circuits() == circuits
        and m.rank() == bm.rank() == 4
        and m.corank() == 2
        and m.coloops() == frozenset()
    )
    detail = f"{len(circuits)} circuits, rank {m.rank()}, corank {m.corank()}, coloops {len(m.coloops())}"
    return record(3, "K4 bicircular spot numbers", ok, detail)


def criterion_4() -> bool:
    bad = []
    checked = 0
    for idx, name, g, k in instances():
        m = KCircularMatroid(g, k)
        if m.is_trivial():
            continue
        checked += 1
        bm = brute(idx, k)
        ground = frozenset(g.edges)
        in_no_circuit = ground - frozenset().union(*bm.circuits)
        in_every_base = frozenset.intersection(*bm.bases)
        outside_core = ground - core(g)
        if not (in_no_circuit == in_every_base == outside_core == m.coloops()):
            bad.append((name, k))
    ok = not bad and checked > 0
    return record(4, "coloops: no circuit = every base = outside the core", ok,
                  f"{checked} nontrivial instances, {len(bad)} failures")


def criterion_5() -> bool:
    bad = []
    kinds = defaultdict(int)
    pairs = 0
    for idx, name, g, k in instances():
        m = KCircularMatroid(g, k)
        if not m.is_connected_matroid():
            continue
        bm = brute(idx, k)
        ground = frozenset(g.edges)
        for b in bm.bases:
            for e in b:
                pairs += 1
                kind = m.cocircuit_kind(b, e)
                kinds[kind] += 1
                got = m.fundamental_cocircuit(b, e)
                if got != brute_dual_cocircuit(bm, b, e):
                    bad.append((name, k, sorted(b), e))
                if kind is CocircuitKind.TYPE3 and got != (ground - b) | {e}:
                    bad.append((name, k, sorted(b), e, "type3"))
    ok = not bad and pairs > 0 and all(kinds[t] > 0 for t in CocircuitKind)
    split = ", ".join(f"{t.name.lower()} {kinds[t]}" for t in CocircuitKind)
    return record(5, "fundamental cocircuits equal the dual brute force", ok,
                  f"{pairs} (base, edge) pairs; {split}; {len(bad)} failures")


def _cacti_targets():
    """Every corpus graph that is a cactus, then the core of every other corpus graph."""
    seen = set()
    for name, g in corpus():
        if is_cacti(g):
            target = g
        else:
            c = core_bits(g, g.full)
            if not c:
                continue
            target = subgraph(g, c)
        if target not in seen:
            seen.add(target)
            yield name, target


def criterion_6() -> bool:
    bad = []
    runs = 0
    graphs = 0
    for name, g in _cacti_targets():
        graphs += 1
        starts = set(KCircularMatroid(g, 0).circuits()) | set(KCircularMatroid(g, 1).circuits())
        for s in starts:
            runs += 1
            asm = ear_assembly(g, s)
            deltas = [delta(g, st) for st in asm.stages()]
            steps_ok = all(b - a == 1 for a, b in zip(deltas, deltas[1:]))
            if not (validate_assembly(g, asm) and steps_ok and asm.final == frozenset(g.edges)):
                bad.append((name, sorted(s)))
    ok = not bad and runs > 0
    return record(6, "ear assemblies from every cycle and bicycle are valid", ok,
                  f"{graphs} cacti, {runs} assemblies, {len(bad)} failures")


def criterion_7() -> bool:
    bad = []
    count = 0
    for idx, name, g, k in instances((0, 1, 2, 3)):
        count += 1
        report = check_axioms(brute(idx, k))
        if not report.passed:
            bad.append((name, k, report.failures()[0].name))
    good = brute_circuits(K4, 1)
    corrupted = check_axioms(BruteMatroid.from_circuits(K4.edges, good[1:]))
    caught = [f for f in corrupted.failures() if f.witness]
    ok = not bad and bool(caught)
    detail = f"{count} matroids, {len(bad)} failures; corrupted family fails {caught[0].name if caught else 'nothing'}"
    return record(7, "matroid axioms hold and the corrupted family is caught", ok, detail)


def criterion_8() -> bool:
    bad = []
    count = 0
    for idx, name, g, k in instances():
        count += 1
        if KCircularMatroid(g, k).is_connected_matroid() != brute_is_connected(brute(idx, k)):
            bad.append((name, k))
    witness = (
        KCircularMatroid(TWO_THETAS, 2).is_connected_matroid()
        and brute_is_connected(BruteMatroid.of_graph(TWO_THETAS, 2))
        and len(components(TWO_THETAS)) == 2
    )
    ok = not bad and witness
    return record(8, "structural connectivity equals circuit-sharing connectivity", ok,
                  f"{count} instances, {len(bad)} disagreements, two-theta witness {witness}")


def criterion_9() -> bool:
    groups = defaultdict(list)
    for idx, (name, g) in enumerate(corpus()):
        groups[frozenset(g.edges)].append(idx)
    bad = []
    exercised = 0
    for members in groups.values():
        for i, j in combinations(members, 2):
            for s in (1, 2):
                base_fam = brute(i, s).circuits
                if base_fam != brute(j, s).circuits:
                    continue
                if base_fam and corpus()[i][1] != corpus()[j][1]:
                    exercised += 1
                for k in range(s + 1, 4):
                    if brute(i, k).circuits != brute(j, k).circuits:
                        bad.append((corpus()[i][0], corpus()[j][0], s, k))
    ok = not bad and exercised >= 1
    return record(9, "equal circuits at level s stay equal above s", ok,
                  f"{exercised} nontrivial (pair, level) cases, {len(bad)} violations")


def criterion_10() -> bool:
    bad = []
    checked = 0
    for idx, name, g, k in instances():
        m = KCircularMatroid(g, k)
        if not m.is_connected_matroid():
            continue
        checked += 1
        bases = brute(idx, k).bases
        if k >= 2:
            cores = {m.base_core(b) for b in bases}
            if cores != set(brute(idx, k - 1).circuits):
                bad.append((name, k))
        else:
            for b in bases:
                if not all(is_cycle(g, kern) for kern in m.base_component_kernels(b)):
                    bad.append((name, k, sorted(b)))
    ok = not bad and checked > 0
    return record(10, "cores of bases are the circuits one level down", ok,
                  f"{checked} connected instances, {len(bad)} failures")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(criterion):
    assert criterion(), RESULTS.get(int(criterion.__name__.split("_")[1]))


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
