"""Command-line front end.

Text output is line-oriented; --format json emits a stable document
{"schema_version", "command", "result"}.  Computed counts (dimensions,
multiplicities, orbit and group sizes) are serialized as decimal strings so
no consumer can lose precision; coordinate vectors, node labels and grading
levels stay plain integers.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import deletion as del_mod
from . import induction as ind_mod
from . import rep_theory as rep
from . import tensor_ops as tens
from .errors import LieInductError
from .root_system import (
    DynkinType,
    RootSystem,
    build_root_system,
    coxeter_number,
    diagram_automorphisms,
    parse_dynkin,
    root_stats,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    """Weight syntax: w3, w0, 2w1, or [a,b,...]."""
    text = text.strip()
    m = re.fullmatch(r"(\d*)[wW](\d+)", text)
    if m:
        scale = int(m.group(1)) if m.group(1) else 1
        idx = int(m.group(2))
        if idx > rank:
            raise UsageError(f"w{idx} does not exist at rank {rank}")
        out = [0] * rank
        if idx:
            out[idx - 1] = scale
        return tuple(out)
    m = re.fullmatch(r"\[([-\d,\s]*)\]", text)
    if m:
        body = m.group(1).strip()
        coords = [int(x) for x in body.split(",")] if body else []
        if len(coords) != rank:
            raise UsageError(f"weight {text} has {len(coords)} coordinates, need {rank}")
        return tuple(coords)
    raise UsageError(f"cannot parse weight {text!r}; use w3, 2w1, w0 or [a,b,...]")


def parse_iota(text: str, rs: RootSystem, node: int):
    """Embedding syntax: residual:ambient pairs '1:3,2:4', or 'table2'."""
    if text == "table2":
        for row in del_mod._summary_rows():
            if row["ambient"] == rs.type and row["node"] == node:
                return row["iota"]
        raise UsageError(f"no summary-table row for {rs.type} at node {node}")
    pairs = {}
    for part in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", part)
        if not m:
            raise UsageError(f"bad embedding component {part!r}; use i:j pairs")
        pairs[int(m.group(1))] = int(m.group(2))
    return pairs


def weight_label(w: Sequence[int]) -> str:
    nz = [(i + 1, x) for i, x in enumerate(w) if x]
    if not nz:
        return "w0"
    if len(nz) == 1:
        i, x = nz[0]
        return f"w{i}" if x == 1 else f"{x}w{i}"
    return "[" + ",".join(str(x) for x in w) + "]"


def _qty(n: int) -> str:
    return str(n)


def _emit(ns, payload: dict, text_lines: list[str]) -> None:
    if ns.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": {"verb": ns.verb, "args": ns.echo},
            "result": payload,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _rs(label: str) -> RootSystem:
    return build_root_system(parse_dynkin(label))


# -- verb handlers ----------------------------------------------------------


def _cmd_roots(ns) -> int:
    rs = _rs(ns.type)
    pos = [list(r) for r in rs.positive_roots]
    payload = {
        "type": str(rs.type),
        "rank": rs.rank,
        "num_roots": _qty(rs.num_roots),
        "dimension": _qty(rs.dimension),
        "coxeter_number": _qty(coxeter_number(rs)),
        "positive_roots": pos,
    }
    lines = [f"{rs.type}: {rs.num_roots} roots, dim {rs.dimension}, h = {coxeter_number(rs)}"]
    lines += ["(" + ",".join(str(x) for x in r) + ")" for r in rs.positive_roots]
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_highest_root(ns) -> int:
    rs = _rs(ns.type)
    st = root_stats(rs, rs.highest_root)
    payload = {
        "type": str(rs.type),
        "coordinates": list(rs.highest_root),
        "height": _qty(st.height),
        "adjoint_weight": list(rs.root_to_weight(rs.highest_root)),
    }
    lines = [
        f"{rs.type} highest root ({','.join(str(x) for x in rs.highest_root)})",
        f"height {st.height}",
        f"adjoint weight {weight_label(rs.root_to_weight(rs.highest_root))}",
    ]
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_automorphisms(ns) -> int:
    t = parse_dynkin(ns.type)
    autos = diagram_automorphisms(t)
    payload = {
        "type": str(t),
        "order": _qty(len(autos)),
        "permutations": [list(p) for p in autos],
    }
    lines = [f"Aut({t}) has order {len(autos)}"]
    lines += [" ".join(str(x) for x in p) for p in autos]
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_dim(ns) -> int:
    rs = _rs(ns.type)
    w = parse_weight(ns.weight, rs.rank)
    d = rep.weyl_dim(rs, w)
    payload = {"type": str(rs.type), "weight": list(w), "dimension": _qty(d)}
    _emit(ns, payload, [str(d)])
    return EXIT_OK


def _cmd_character(ns) -> int:
    rs = _rs(ns.type)
    w = parse_weight(ns.weight, rs.rank)
    ch = rep.freudenthal_character(rs, w)
    rows = sorted(ch.entries.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
    payload = {
        "type": str(rs.type),
        "weight": list(w),
        "dimension": _qty(rep.weyl_dim(rs, w)),
        "dominant_weights": [
            {
                "weight": list(wt),
                "multiplicity": _qty(m),
                "orbit_size": _qty(rep.orbit_size(rs, wt)),
            }
            for wt, m in rows
        ],
    }
    lines = [f"V({weight_label(w)}; {rs.type}) dim {rep.weyl_dim(rs, w)}"]
    for wt, m in rows:
        lines.append(
            f"[{','.join(str(x) for x in wt)}] mult {m} orbit {rep.orbit_size(rs, wt)}"
        )
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_orbit(ns) -> int:
    rs = _rs(ns.type)
    w = parse_weight(ns.weight, rs.rank)
    orb = sorted(rep.weyl_orbit(rs, w))
    payload = {
        "type": str(rs.type),
        "weight": list(w),
        "size": _qty(len(orb)),
        "orbit": [list(v) for v in orb],
    }
    lines = [f"orbit size {len(orb)}"] + [
        "[" + ",".join(str(x) for x in v) + "]" for v in orb
    ]
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_defining(ns) -> int:
    rs = _rs(ns.type)
    mods = rep.defining_modules(rs)
    payload = {
        "type": str(rs.type),
        "modules": [
            {"weight": list(md.highest_weight), "dimension": _qty(md.dimension)}
            for md in mods
        ],
    }
    lines = [f"{rs.type}: {len(mods)} defining modules"]
    lines += [f"{weight_label(md.highest_weight)} dim {md.dimension}" for md in mods]
    _emit(ns, payload, lines)
    return EXIT_OK


def _decomposition_payload(dec: tens.DecompositionResult) -> dict:
    return {
        "source_dimension": _qty(dec.source_dimension),
        "summands": [
            {
                "weight": list(md.highest_weight),
                "dimension": _qty(md.dimension),
                "multiplicity": _qty(m),
            }
            for md, m in dec.summands
        ],
    }


def _decomposition_lines(name: str, dec: tens.DecompositionResult) -> list[str]:
    lines = [f"{name} (dim {dec.source_dimension})"]
    for md, m in dec.summands:
        mult = "" if m == 1 else f" x{m}"
        lines.append(f"V({weight_label(md.highest_weight)}) dim {md.dimension}{mult}")
    return lines


def _cmd_tensor(ns) -> int:
    rs = _rs(ns.type)
    w1 = parse_weight(ns.weight1, rs.rank)
    w2 = parse_weight(ns.weight2, rs.rank)
    dec = tens.tensor_decompose(rs, w1, w2)
    _emit(ns, _decomposition_payload(dec),
          _decomposition_lines(f"V({weight_label(w1)}) (x) V({weight_label(w2)})", dec))
    return EXIT_OK


def _cmd_wedge2(ns) -> int:
    rs = _rs(ns.type)
    w = parse_weight(ns.weight, rs.rank)
    dec = tens.wedge2_decompose(rs, w)
    _emit(ns, _decomposition_payload(dec),
          _decomposition_lines(f"Wedge2 V({weight_label(w)})", dec))
    return EXIT_OK


def _cmd_sym2(ns) -> int:
    rs = _rs(ns.type)
    w = parse_weight(ns.weight, rs.rank)
    dec = tens.sym2_decompose(rs, w)
    _emit(ns, _decomposition_payload(dec),
          _decomposition_lines(f"Sym2 V({weight_label(w)})", dec))
    return EXIT_OK


def _cmd_delete(ns) -> int:
    rs = _rs(ns.type)
    iota = parse_iota(ns.iota, rs, ns.node) if ns.iota else None
    d = del_mod.delete_node(rs, ns.node, iota)
    payload = {
        "ambient": str(d.ambient),
        "node": d.node,
        "residual": [str(t) for t in d.residual],
        "iota": list(d.iota),
        "m_d": d.m_d,
        "levels": [
            {
                "level": c.level,
                "weight": list(c.highest_weight),
                "dimension": _qty(c.dimension),
                "roots": [list(r) for r in c.roots],
            }
            for c in d.levels
        ],
        "zero_level": {
            "roots": _qty(d.zero_level.root_count),
            "dimension": _qty(d.zero_level.residual_dimension),
            "center": _qty(d.zero_level.center_dimension),
        },
    }
    res = " + ".join(str(t) for t in d.residual) if d.residual else "(empty)"
    lines = [f"{d.ambient} minus node {d.node} -> {res}, m_d = {d.m_d}"]
    lines.append("iota: " + ",".join(f"{i+1}:{a}" for i, a in enumerate(d.iota)))
    for c in d.chain():
        lines.append(
            f"level {c.level}: {weight_label(c.highest_weight)} dim {c.dimension}"
        )
    lines.append(
        f"level 0: residual dim {d.zero_level.residual_dimension} + center 1"
    )
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_equivalences(ns) -> int:
    t = parse_dynkin(ns.type)
    rs = build_root_system(t)
    iota = parse_iota(ns.iota, rs, ns.node) if ns.iota else None
    ec = del_mod.deletion_equivalences(t, ns.node, iota)
    payload = {
        "ambient": str(ec.ambient),
        "residual": str(ec.residual),
        "size": _qty(ec.size),
        "aut_ambient": _qty(ec.aut_ambient_order),
        "aut_residual": _qty(ec.aut_residual_order),
        "stabilizer": _qty(ec.stabilizer_order),
        "members": [
            {"node": node, "iota": list(emb)} for node, emb in ec.members
        ],
    }
    lines = [
        f"{ec.ambient} -> {ec.residual}: class of {ec.size} "
        f"(|Aut g| = {ec.aut_ambient_order}, |Aut g0| = {ec.aut_residual_order}, "
        f"stabilizer {ec.stabilizer_order})"
    ]
    for node, emb in ec.members:
        lines.append(f"node {node}, iota " + ",".join(f"{i+1}:{a}" for i, a in enumerate(emb)))
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_table2(ns) -> int:
    report = del_mod.verify_table2(raise_on_mismatch=False)
    payload = {
        "ok": report.ok,
        "rows": [
            {
                "name": r.name,
                "ok": r.ok,
                "m_d": r.m_d,
                "expected": [list(w) for w in r.expected],
                "got": [list(w) for w in r.got],
                "detail": r.detail,
            }
            for r in report.rows
        ],
    }
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}" for r in report.rows]
    lines.append(f"{'OK' if report.ok else 'MISMATCH'}: {len(report.rows)} rows")
    _emit(ns, payload, lines)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def _default_depth(ns) -> int:
    if ns.depth is not None:
        depth = ns.depth
    else:
        env = os.environ.get("LIE_INDUCT_MAX_DEPTH")
        if env:
            try:
                depth = int(env)
            except ValueError as exc:
                raise UsageError(f"LIE_INDUCT_MAX_DEPTH={env!r} is not an integer") from exc
        else:
            depth = ind_mod.DEFAULT_MAX_DEPTH
    if depth < 1:
        raise UsageError(f"depth must be at least 1, got {depth}")
    return depth


def _cmd_induct(ns) -> int:
    rs = _rs(ns.type)
    w = parse_weight(ns.weight, rs.rank)
    depth = _default_depth(ns)
    states = ind_mod.induction_search(rs, w, max_depth=depth, threads=ns.threads)
    payload = {
        "base": str(rs.type),
        "b1": list(w),
        "max_depth": depth,
        "chains": [
            {
                "levels": [list(x) for x in s.weights],
                "terminated": s.terminated,
                "dimension": _qty(s.dbos_dimension),
            }
            for s in states
        ],
    }
    lines = [f"{len(states)} chains from V({weight_label(w)}; {rs.type}) to depth {depth}"]
    for s in states:
        tag = "terminated" if s.terminated else "open"
        seq = " ".join(weight_label(x) for x in s.weights)
        lines.append(f"{seq} | {tag} | dim {s.dbos_dimension}")
    _emit(ns, payload, lines)
    return EXIT_OK


def _cmd_report(ns) -> int:
    depth = _default_depth(ns)
    rep_doc = ind_mod.exceptional_report(ns.target, max_depth=depth, threads=ns.threads)
    payload = {
        "target": rep_doc.name,
        "max_depth": rep_doc.max_depth,
        "consistent": rep_doc.consistent,
        "verdict": rep_doc.verdict,
        "common_dimensions": [_qty(d) for d in rep_doc.common_dims],
        "base_dimensions": {
            base: [_qty(d) for d in dims] for base, dims in rep_doc.base_dims
        },
        "routes": [
            {
                "base": str(r.base),
                "diagram": r.target,
                "deleted_node": r.target_node,
                "iota": list(r.iota),
                "required_b1": list(r.required_weight),
                "row_matches": r.row_matches,
                "b1_defining": r.b1_defining,
                "b1_dimension": _qty(r.b1_dimension),
                "dimensions": [_qty(d) for d in r.terminated_dims],
                "open_chains": r.non_terminated,
            }
            for r in rep_doc.routes
        ],
        "analysis": _jsonable(rep_doc.analysis),
    }
    lines = [f"{rep_doc.name}: consistent = {rep_doc.consistent}"]
    for r in rep_doc.routes:
        status = "defining" if r.b1_defining else "not defining"
        dims = ", ".join(str(d) for d in r.terminated_dims) or "-"
        lines.append(
            f"base {r.base} via {r.target} (delete node {r.target_node}): "
            f"b1 = {weight_label(r.required_weight)} ({status}); dims {dims}"
            + (f"; {r.non_terminated} open" if r.non_terminated else "")
        )
    lines.append(f"verdict: {rep_doc.verdict}")
    _emit(ns, payload, lines)
    return EXIT_OK


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, DynkinType):
        return str(obj)
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return _qty(obj)
    return obj


_HANDLERS = {
    "roots": _cmd_roots,
    "highest-root": _cmd_highest_root,
    "automorphisms": _cmd_automorphisms,
    "dim": _cmd_dim,
    "character": _cmd_character,
    "orbit": _cmd_orbit,
    "defining": _cmd_defining,
    "tensor": _cmd_tensor,
    "wedge2": _cmd_wedge2,
    "sym2": _cmd_sym2,
    "delete": _cmd_delete,
    "equivalences": _cmd_equivalences,
    "table2": _cmd_table2,
    "induct": _cmd_induct,
    "report": _cmd_report,
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lie-induct",
        description="Exact root-system, deletion and Lie-induction calculations",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["text", "json"], default="text")

    def typed(name, help_text, weights=0):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("type", help="Dynkin type, e.g. E8")
        if weights >= 1:
            sp.add_argument("weight" if weights == 1 else "weight1",
                            help="weight: w3, 2w1, w0 or [a,b,...]")
        if weights == 2:
            sp.add_argument("weight2", help="second weight")
        common(sp)
        return sp

    typed("roots", "list the positive roots")
    typed("highest-root", "highest root, height and adjoint weight")
    typed("automorphisms", "diagram automorphism group")
    typed("dim", "dimension of an irreducible module", weights=1)
    typed("character", "dominant weights with multiplicities", weights=1)
    typed("orbit", "Weyl orbit of a weight", weights=1)
    typed("defining", "defining modules of the algebra")
    typed("tensor", "decompose a tensor product", weights=2)
    typed("wedge2", "decompose an exterior square", weights=1)
    typed("sym2", "decompose a symmetric square", weights=1)

    sp = typed("delete", "grade by a node and identify the levels")
    sp.add_argument("--node", type=int, required=True)
    sp.add_argument("--iota", help="embedding '1:3,2:4,...' or 'table2' (default canonical)")

    sp = typed("equivalences", "deletions equivalent under diagram automorphisms")
    sp.add_argument("--node", type=int, required=True)
    sp.add_argument("--iota", help="embedding of the seed deletion")

    sp = sub.add_parser("table2", help="verify the full deletion summary table")
    common(sp)

    sp = typed("induct", "search graded chains from a first-level module", weights=1)
    sp.add_argument("--depth", type=int, default=None,
                    help="maximum chain depth (default LIE_INDUCT_MAX_DEPTH or 12)")
    sp.add_argument("--threads", type=int, default=1,
                    help="worker threads for the search; results are order-independent")

    sp = sub.add_parser("report", help="obstruction report for E9, F5 or G3")
    sp.add_argument("target", choices=["E9", "F5", "G3", "e9", "f5", "g3"])
    sp.add_argument("--depth", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)
    common(sp)

    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    ns.echo = list(argv) if argv is not None else sys.argv[1:]
    if getattr(ns, "threads", 1) is not None and getattr(ns, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[ns.verb](ns)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LieInductError as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
