"""Command line front end and the edge-list file format.

File format (UTF-8)::

    # comment to end of line
    v <vertexId>          declares a vertex (needed only if it is isolated)
    e <edgeId> <u> <v>    declares an edge; u = v gives a loop

Identifiers match ``[A-Za-z0-9_.-]+``. Exit codes: 0 success or true,
1 property false, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Iterable, Optional

from . import ears as ears_mod
from . import oracle
from .errors import (
    DuplicateId,
    EdgeSetMismatch,
    EnumerationLimitExceeded,
    GraphParseError,
    InputError,
    NoExtensionExists,
    PreconditionViolated,
)
from .graphcore import MultiGraph, canonical_sort, core, delta, kernel
from .kcirc import DEFAULT_ENUM_LIMIT, KCircularMatroid

_IDENT = re.compile(r"[A-Za-z0-9_.-]+\Z")


def parse_graph(text: str) -> MultiGraph:
    vertices = []
    vseen = set()
    edges = []
    eseen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, args = tokens[0], tokens[1:]
        for tok in args:
            if not _IDENT.match(tok):
                raise GraphParseError(lineno, f"bad identifier {tok!r}")
        if head == "v":
            if len(args) != 1:
                raise GraphParseError(lineno, "'v' takes exactly one vertex id")
            if args[0] in vseen:
                raise DuplicateId(f"line {lineno}: duplicate vertex id {args[0]!r}")
            vseen.add(args[0])
            vertices.append(args[0])
        elif head == "e":
            if len(args) != 3:
                raise GraphParseError(lineno, "'e' takes an edge id and two endpoints")
            if args[0] in eseen:
                raise DuplicateId(f"line {lineno}: duplicate edge id {args[0]!r}")
            eseen.add(args[0])
            edges.append(tuple(args))
        else:
            raise GraphParseError(lineno, f"unknown record type {head!r}")
    return MultiGraph.from_edges(edges, vertices)


def serialize_graph(g: MultiGraph) -> str:
    lines = [f"v {v}" for v in g.isolated_vertices()]
    for e in g.edges:
        u, v = g.ends(e)
        lines.append(f"e {e} {u} {v}")
    return "\n".join(lines) + "\n"


def _read_graph(path: str) -> MultiGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text)


def _edge_list(text: Optional[str]) -> list:
    if text is None:
        return []
    return [t for t in re.split(r"[,\s]+", text) if t]


def _sorted(s: Iterable[str]) -> list:
    return sorted(s)


def _family(fam) -> list:
    return [sorted(s) for s in canonical_sort(fam)]


def _ear_json(ear) -> dict:
    return {
        "kind": ear.kind.value,
        "edges": sorted(ear.edges),
        "attachment": sorted(ear.attachment),
    }


def _matroid(g: MultiGraph, k: Optional[int]) -> KCircularMatroid:
    if k is None:
        raise InputError("this command needs -k")
    return KCircularMatroid(g, k)


def _info(g: MultiGraph, m: KCircularMatroid) -> dict:
    out = {"edges": len(g.edges), "vertices": len(g.vertices), "delta": delta(g)}
    out["trivial"] = m.is_trivial()
    out["rank"] = m.rank()
    if m.k >= 1:
        out["connected_matroid"] = m.is_connected_matroid()
        out["coloops"] = sorted(g.edges) if m.is_trivial() else _sorted(m.coloops())
    else:
        out["connected_matroid"] = None
        out["coloops"] = None
    return out


def _verify_one(g: MultiGraph, k: int, exhaustive: bool, limit: int) -> dict:
    m = KCircularMatroid(g, k)
    bm = oracle.BruteMatroid.of_graph(g, k, limit)
    checks = {"circuits": m.circuits(limit) == bm.circuits}
    checks["rank"] = m.rank() == bm.rank()
    if exhaustive:
        checks["axioms"] = oracle.check_axioms(bm).passed
        checks["bases"] = m.bases(limit) == bm.bases
        if k >= 1:
            connected = m.is_connected_matroid()
            checks["connectivity"] = connected == oracle.brute_is_connected(bm)
            if not m.is_trivial():
                in_no_circuit = bm.ground - frozenset().union(*bm.circuits)
                checks["coloops"] = m.coloops() == in_no_circuit
            if connected:
                checks["cocircuits"] = all(
                    m.fundamental_cocircuit(b, e) == oracle.brute_dual_cocircuit(bm, b, e)
                    for b in bm.bases
                    for e in b
                )
    return {"k": k, "checks": checks, "ok": all(checks.values())}


def _cmd_verify(args, g: MultiGraph) -> tuple:
    max_edges = args.max_edges if args.max_edges is not None else oracle.ORACLE_LIMIT
    if len(g.edges) > max_edges:
        raise EnumerationLimitExceeded(len(g.edges), max_edges)
    if args.all_k:
        trees = sum(1 for c in g.components_bits(g.full) if g.delta_bits(c) < 0)
        ks = list(range(0, max(delta(g) + trees, 0) + 2))
    else:
        if args.k is None:
            raise InputError("verify needs -k or --all-k")
        _matroid(g, args.k)
        ks = [args.k]
    results = [_verify_one(g, k, args.exhaustive, max_edges) for k in ks]
    ok = all(r["ok"] for r in results)
    return {"ok": ok, "results": results}, 0 if ok else 1


def _dispatch(args, limit: int) -> tuple:
    cmd = args.command
    if cmd == "equal":
        g, h = _read_graph(args.graph), _read_graph(args.other)
        if set(g.edges) != set(h.edges):
            raise EdgeSetMismatch("graphs have different edge identifiers")
        same = _matroid(g, args.k).circuits(limit) == _matroid(h, args.k).circuits(limit)
        return {"equal": same}, 0 if same else 1

    g = _read_graph(args.graph)
    if cmd == "core":
        return _sorted(core(g)), 0
    if cmd == "kernel":
        return _sorted(kernel(g)), 0
    if cmd == "ears":
        asm = ears_mod.ear_assembly(g, _edge_list(args.start))
        return {"start": sorted(asm.start), "ears": [_ear_json(e) for e in asm.ears]}, 0
    if cmd == "verify":
        return _cmd_verify(args, g)

    m = _matroid(g, args.k)
    if cmd == "info":
        return _info(g, m), 0
    if cmd == "circuits":
        return _family(m.circuits(limit)), 0
    if cmd == "bases":
        return _family(m.bases(limit)), 0
    if cmd == "coloops":
        return _sorted(m.coloops()), 0
    if cmd == "fundcircuit":
        return _sorted(m.fundamental_circuit(_edge_list(args.base), args.edge)), 0
    if cmd == "cocircuit":
        b = _edge_list(args.base)
        kind = m.cocircuit_kind(b, args.edge)
        return {
            "cocircuit": _sorted(m.fundamental_cocircuit(b, args.edge)),
            "kind": kind.name.lower(),
        }, 0
    if cmd == "grow":
        c = _edge_list(args.circuit)
        try:
            ear = ears_mod.circuit_extension(m, c)
        except NoExtensionExists as exc:
            return {"circuit": None, "ear": None, "reason": str(exc)}, 1
        return {"circuit": sorted(set(c) | ear.edges), "ear": _ear_json(ear)}, 0
    raise InputError(f"unknown command {cmd!r}")  # pragma: no cover


def _text(obj) -> str:
    if obj is None:
        return "none"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, list):
        if obj and all(isinstance(x, list) for x in obj):
            return "\n".join(" ".join(x) if x else "(empty)" for x in obj)
        if all(not isinstance(x, (list, dict)) for x in obj):
            return " ".join(str(x) for x in obj)
        return "\n".join("- " + _text(x).replace("\n", "\n  ") for x in obj)
    if isinstance(obj, dict):
        lines = []
        for key, val in obj.items():
            body = _text(val)
            if isinstance(val, (list, dict)) and "\n" in body or isinstance(val, dict):
                lines.append(f"{key}:\n  " + body.replace("\n", "\n  "))
            else:
                lines.append(f"{key}: {body}")
        return "\n".join(lines)
    return str(obj)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kcirc", description="k-circular matroids of multigraphs")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", type=int, default=None, help="matroid level k >= 0")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--limit", type=int, default=None, help="enumeration cap in edges")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("info", "circuits", "bases", "coloops", "core", "kernel"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("graph")
    for name in ("fundcircuit", "cocircuit"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("-b", dest="base", required=True, help="base edges, comma separated")
        s.add_argument("-e", dest="edge", required=True)
        s.add_argument("graph")
    s = sub.add_parser("ears", parents=[common])
    s.add_argument("--from", dest="start", required=True, help="start edges, comma separated")
    s.add_argument("graph")
    s = sub.add_parser("grow", parents=[common])
    s.add_argument("-c", dest="circuit", required=True, help="circuit edges, comma separated")
    s.add_argument("graph")
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--max-edges", type=int, default=None)
    s.add_argument("--all-k", action="store_true")
    s.add_argument("graph")
    s = sub.add_parser("equal", parents=[common])
    s.add_argument("graph")
    s.add_argument("other")
    return p


def _limit(args) -> int:
    if args.limit is not None:
        return args.limit
    env = os.environ.get("KCIRC_ENUM_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"KCIRC_ENUM_LIMIT must be an integer, got {env!r}") from None
    return DEFAULT_ENUM_LIMIT


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, code = _dispatch(args, _limit(args))
    except (InputError, PreconditionViolated, EnumerationLimitExceeded) as exc:
        print(f"kcirc: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(_text(payload) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
