"""Command-line frontend: curve files in, invariant reports out.

Curve files are either JSON ({"vertices": [{"name", "genus"}], "edges":
[[name, name], ...]}) or a line-based text format (``vertex NAME GENUS`` and
``edge A B`` directives, hash comments allowed).  Reports are aligned text by
default or JSON with --json; identical inputs always produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import abel, classgroup, picard, stability, theta
from .errors import CapExceeded
from .graph import (
    DEFAULT_MAX_SUBCURVE_VERTICES,
    DualGraph,
    complexity,
    counts,
    essential_connectivity,
    is_tree_like,
)
from .multidegree import Multidegree
from .picard import DEFAULT_MAX_STRATA_EDGES

SCHEMA_VERSION = 1


# -- input --------------------------------------------------------------------


def parse_curve(source: str) -> DualGraph:
    """Load a curve file (path, or '-' for stdin); JSON is sniffed by a
    leading brace."""
    if source == "-":
        text = sys.stdin.read()
        origin = "<stdin>"
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
        origin = source
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            vertices, edges = _parse_json(text)
        else:
            vertices, edges = _parse_text(text)
        return DualGraph.from_names(vertices, edges)
    except ValueError as exc:
        raise ValueError(f"{origin}: {exc}") from None


def _parse_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ValueError("top-level JSON value must be an object")
    raw_vertices = data.get("vertices")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise ValueError('"vertices" must be a non-empty list')
    vertices = []
    for item in raw_vertices:
        if not isinstance(item, dict) or "name" not in item or "genus" not in item:
            raise ValueError('each vertex needs "name" and "genus"')
        genus = item["genus"]
        if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
            raise ValueError(f'vertex {item["name"]!r} needs a non-negative integer genus')
        vertices.append((str(item["name"]), genus))
    edges = []
    if not isinstance(raw_edges, list):
        raise ValueError('"edges" must be a list of two-element name pairs')
    for item in raw_edges:
        if not isinstance(item, list) or len(item) != 2:
            raise ValueError('"edges" must be a list of two-element name pairs')
        edges.append((str(item[0]), str(item[1])))
    return vertices, edges


def _parse_text(text: str):
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "vertex":
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: expected 'vertex NAME GENUS'")
            try:
                genus = int(fields[2])
            except ValueError:
                raise ValueError(f"line {lineno}: genus must be an integer") from None
            if genus < 0:
                raise ValueError(f"line {lineno}: genus must be non-negative")
            vertices.append((fields[1], genus))
        elif fields[0] == "edge":
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: expected 'edge NAME NAME'")
            edges.append((fields[1], fields[2]))
        else:
            raise ValueError(f"line {lineno}: unknown directive {fields[0]!r}")
    if not vertices:
        raise ValueError("no vertices declared")
    return vertices, edges


# -- report assembly -----------------------------------------------------------


def _eps_value(graph: DualGraph):
    eps = essential_connectivity(graph)
    return "infinity" if eps == math.inf else int(eps)


def curve_summary(graph: DualGraph) -> dict:
    c = counts(graph)
    return {
        "vertices": [{"name": v.name, "genus": v.genus} for v in graph.vertices],
        "edges": [[graph.vertices[u].name, graph.vertices[v].name] for u, v in graph.edges],
        "components": c.vertices,
        "nodes": c.edges,
        "first_betti": c.first_betti,
        "genus": c.genus,
        "complexity": complexity(graph),
        "tree_like": is_tree_like(graph),
        "essential_connectivity": _eps_value(graph),
    }


def _report(command: str, graph: DualGraph, **sections) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "command": command, "curve": curve_summary(graph)}
    out.update(sections)
    return out


def _md(d: Multidegree) -> list[int]:
    return list(d.entries)


def _witness_names(graph: DualGraph, witnesses) -> list[list[str]]:
    return [[graph.vertices[i].name for i in w.vertices] for w in witnesses]


def build_info(graph: DualGraph) -> dict:
    return _report("info", graph)


def build_classgroup(graph: DualGraph, degree: int) -> dict:
    dcg = classgroup.degree_class_group(graph)
    reps = classgroup.class_representatives(dcg, degree)
    return _report(
        "classgroup",
        graph,
        classgroup={
            "invariant_factors": list(dcg.invariant_factors),
            "order": dcg.order,
            "degree": degree,
            "representatives": [
                {
                    "label": list(classgroup.class_of(dcg, rep).residues),
                    "multidegree": _md(rep),
                }
                for rep in reps
            ],
        },
    )


def build_semistable(graph: DualGraph, max_vertices: int) -> dict:
    semi = stability.enumerate_semistable(graph, max_vertices)
    stable = stability.enumerate_stable(graph, max_vertices)
    verdicts = []
    for d in semi:
        v = stability.check_stability(graph, d, max_vertices)
        verdicts.append(
            {
                "multidegree": _md(d),
                "status": v.status.value,
                "witnesses": _witness_names(graph, v.witnesses),
            }
        )
    return _report(
        "semistable",
        graph,
        semistable={
            "total_degree": graph.genus - 1,
            "semistable": [_md(d) for d in semi],
            "stable": [_md(d) for d in stable],
            "verdicts": verdicts,
        },
    )


def build_semistabilize(graph: DualGraph, entries: Sequence[int], max_vertices: int) -> dict:
    d = Multidegree(entries)
    if len(d) != graph.gamma:
        raise ValueError(
            f"multidegree has {len(d)} entries, the curve has {graph.gamma} components"
        )
    result, firing = classgroup.semistabilize(graph, d)
    verdict = stability.check_stability(graph, result, max_vertices)
    return _report(
        "semistabilize",
        graph,
        semistabilize={
            "input": _md(d),
            "result": _md(result),
            "firing": list(firing),
            "changed": result != d,
            "status": verdict.status.value,
        },
    )


def _stratum_record(graph: DualGraph, s: picard.Stratum, component_set) -> dict:
    return {
        "nodes": list(s.nodes.edges),
        "node_names": [picard.edge_name(graph, e) for e in s.nodes.edges],
        "multidegree": _md(s.multidegree),
        "dim": s.dim,
        "component": s in component_set,
        "description": picard.stratum_description(graph, s),
    }


def build_strata(graph: DualGraph, max_edges: int) -> dict:
    all_strata = picard.strata(graph, max_edges)
    comps = set(picard.irreducible_components(graph, max_edges))
    return _report(
        "strata",
        graph,
        strata={
            "count": len(all_strata),
            "strata": [_stratum_record(graph, s, comps) for s in all_strata],
        },
    )


def build_components(graph: DualGraph, max_edges: int) -> dict:
    classification = picard.classify_type_g_minus_1(graph, max_edges)
    comps = picard.irreducible_components(graph, max_edges)
    return _report(
        "components",
        graph,
        components={
            "count": len(comps),
            "complexity": classification.complexity,
            "type": classification.kind.value,
            "tree_like": classification.tree_like,
            "rule_validated": classification.component_rule_validated,
            "strata": [_stratum_record(graph, s, set(comps)) for s in comps],
        },
    )


def build_theta(graph: DualGraph, max_edges: int) -> dict:
    strata = theta.theta_strata(graph, max_edges)
    return _report(
        "theta",
        graph,
        theta={
            "count": len(strata),
            "strata": [
                {
                    "nodes": list(t.base.nodes.edges),
                    "multidegree": _md(t.base.multidegree),
                    "base_dim": t.base.dim,
                    "dim": t.dim,
                    "description": t.description,
                }
                for t in strata
            ],
        },
    )


def build_neron(graph: DualGraph, degree: int) -> dict:
    fiber = picard.neron_fiber(graph, degree)
    return _report(
        "neron",
        graph,
        neron={
            "degree": fiber.degree,
            "count": fiber.count,
            "components": [
                {"label": list(label.residues), "representative": _md(rep)}
                for label, rep in fiber.components
            ],
        },
    )


def build_abel_g_minus_1(graph: DualGraph) -> dict:
    if graph.gamma != 2 or sum(graph.loops) != 0:
        raise ValueError(
            "the degree g-1 naturality criterion is only available for curves "
            "with exactly two smooth components"
        )
    g1 = graph.vertices[0].genus
    g2 = graph.vertices[1].genus
    delta = graph.delta
    verdict = abel.natural_g_minus_1_vine(g1, g2, delta)
    profile = abel.correction_profile_vine(g1, g2, delta)
    return _report(
        "abel",
        graph,
        abel={
            "mode": "g-minus-1",
            "g1": g1,
            "g2": g2,
            "nodes": delta,
            "status": verdict.status.value,
            "reason": verdict.reason,
            "offending": [_md(d) for d in verdict.offending],
            "profile": [
                {
                    "l": e.degree_on_first,
                    "correction": e.correction,
                    "corrected": _md(e.corrected),
                }
                for e in profile.entries
            ],
            "all_zero": profile.all_zero,
        },
    )


def build_abel_degree(graph: DualGraph, degree: int) -> dict:
    verdict = abel.naturality_necessary(graph, degree)
    eps = verdict.essential_connectivity
    section = {
        "mode": "degree",
        "degree": degree,
        "status": verdict.status.value,
        "reason": verdict.reason,
        "essential_connectivity": "infinity" if eps == math.inf else int(eps),
        "d_general": verdict.d_general.value if verdict.d_general else None,
    }
    if degree == 1:
        embedding = abel.degree1_abel_is_embedding(graph)
        section["degree1_embedding"] = {
            "is_embedding": embedding.is_embedding,
            "offenders": list(embedding.offenders),
        }
    return _report("abel", graph, abel=section)


def build_dgeneral(graph: DualGraph, degree: int) -> dict:
    g = graph.genus
    verdict = picard.d_general_verdict(g, degree, graph)
    return _report(
        "dgeneral",
        graph,
        dgeneral={
            "genus": g,
            "degree": degree,
            "gcd": math.gcd(degree - g + 1, 2 * g - 2),
            "verdict": verdict.value,
        },
    )


# -- text rendering -------------------------------------------------------------


def _fmt_md(entries: Sequence[int]) -> str:
    if len(entries) == 1:
        return str(entries[0])
    return "(" + ",".join(str(e) for e in entries) + ")"


def _kv_block(title: str, pairs: list[tuple[str, object]]) -> list[str]:
    width = max(len(k) for k, _ in pairs)
    lines = [title]
    for k, v in pairs:
        lines.append(f"  {k.ljust(width)}  {v}")
    return lines


def _table(headers: list[str], rows: list[list[str]], indent: str = "  ") -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [indent + "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append(indent + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def _curve_block(report: dict) -> list[str]:
    c = report["curve"]
    return _kv_block(
        "curve",
        [
            ("components (vertices)", c["components"]),
            ("nodes (edges)", c["nodes"]),
            ("first Betti number", c["first_betti"]),
            ("genus", c["genus"]),
            ("complexity (spanning trees)", c["complexity"]),
            ("tree-like", "yes" if c["tree_like"] else "no"),
            ("essential connectivity", c["essential_connectivity"]),
        ],
    )


def _nodes_label(nodes: list[int]) -> str:
    if not nodes:
        return "{}"
    return "{" + ",".join(f"e{e}" for e in nodes) + "}"


def render_text(report: dict) -> str:
    command = report["command"]
    lines = _curve_block(report)
    if command == "classgroup":
        sec = report["classgroup"]
        lines += [""] + _kv_block(
            "degree class group",
            [
                ("invariant factors", sec["invariant_factors"]),
                ("order", sec["order"]),
            ],
        )
        rows = [
            [_fmt_md(r["label"]) if r["label"] else "()", _fmt_md(r["multidegree"])]
            for r in sec["representatives"]
        ]
        lines.append(f"  representatives in total degree {sec['degree']}:")
        lines += _table(["label", "multidegree"], rows, indent="    ")
    elif command == "semistable":
        sec = report["semistable"]
        lines.append("")
        lines.append(
            f"semistable multidegrees in total degree {sec['total_degree']}: "
            f"{len(sec['semistable'])}"
        )
        rows = []
        for v in sec["verdicts"]:
            witnesses = "; ".join("{" + ",".join(w) + "}" for w in v["witnesses"])
            rows.append([_fmt_md(v["multidegree"]), v["status"], witnesses])
        lines += _table(["multidegree", "status", "witnesses"], rows)
        lines.append(f"stable multidegrees: {len(sec['stable'])}")
        for d in sec["stable"]:
            lines.append(f"  {_fmt_md(d)}")
    elif command == "semistabilize":
        sec = report["semistabilize"]
        lines += [""] + _kv_block(
            "semistabilization",
            [
                ("input", _fmt_md(sec["input"])),
                ("result", _fmt_md(sec["result"])),
                ("firing vector", _fmt_md(sec["firing"])),
                ("changed", "yes" if sec["changed"] else "no"),
                ("result status", sec["status"]),
            ],
        )
    elif command in ("strata", "components"):
        sec = report[command]
        lines.append("")
        if command == "strata":
            lines.append(f"strata: {sec['count']}")
        else:
            lines.append(
                f"irreducible components: {sec['count']} "
                f"(complexity {sec['complexity']}, {sec['type']}, "
                + ("rule validated" if sec["rule_validated"] else "heuristic rule")
                + ")"
            )
        rows = [
            [
                _nodes_label(s["nodes"]),
                _fmt_md(s["multidegree"]),
                str(s["dim"]),
                "yes" if s["component"] else "no",
            ]
            for s in sec["strata"]
        ]
        lines += _table(["S", "multidegree", "dim", "component"], rows)
    elif command == "theta":
        sec = report["theta"]
        lines.append("")
        lines.append(f"theta strata: {sec['count']}")
        rows = [
            [
                _nodes_label(t["nodes"]),
                _fmt_md(t["multidegree"]),
                "unknown" if t["dim"] is None else str(t["dim"]),
                t["description"],
            ]
            for t in sec["strata"]
        ]
        lines += _table(["S", "multidegree", "dim", "description"], rows)
    elif command == "neron":
        sec = report["neron"]
        lines.append("")
        lines.append(f"Neron fiber in degree {sec['degree']}: {sec['count']} components")
        rows = [
            [_fmt_md(r["label"]) if r["label"] else "()", _fmt_md(r["representative"])]
            for r in sec["components"]
        ]
        lines += _table(["label", "representative"], rows)
    elif command == "abel":
        sec = report["abel"]
        lines.append("")
        if sec["mode"] == "g-minus-1":
            lines += _kv_block(
                f"degree g-1 Abel map (g1={sec['g1']}, g2={sec['g2']}, nodes={sec['nodes']})",
                [
                    ("naturality", sec["status"]),
                    ("reason", sec["reason"]),
                    (
                        "offending",
                        ", ".join(_fmt_md(d) for d in sec["offending"]) or "none",
                    ),
                    ("profile all zero", "yes" if sec["all_zero"] else "no"),
                ],
            )
            rows = [
                [str(e["l"]), str(e["correction"]), _fmt_md(e["corrected"])]
                for e in sec["profile"]
            ]
            lines.append("  corrections:")
            lines += _table(["l", "a(l)", "corrected"], rows, indent="    ")
        else:
            pairs = [
                ("naturality", sec["status"]),
                ("reason", sec["reason"]),
                ("essential connectivity", sec["essential_connectivity"]),
                ("d-general", sec["d_general"] if sec["d_general"] else "n/a"),
            ]
            if "degree1_embedding" in sec:
                emb = sec["degree1_embedding"]
                pairs.append(
                    ("degree-1 embedding", "yes" if emb["is_embedding"] else "no")
                )
                if emb["offenders"]:
                    pairs.append(("contracted components", ", ".join(emb["offenders"])))
            lines += _kv_block(f"degree {sec['degree']} Abel map", pairs)
    elif command == "dgeneral":
        sec = report["dgeneral"]
        lines += [""] + _kv_block(
            "d-general classification",
            [
                ("genus", sec["genus"]),
                ("degree", sec["degree"]),
                ("gcd(d-g+1, 2g-2)", sec["gcd"]),
                ("verdict", sec["verdict"]),
            ],
        )
    return "\n".join(lines) + "\n"


# -- argument parsing ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage problems exit with code 1; code 2 is reserved for tripped caps
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="nodalpic",
        description="Combinatorial invariants of nodal curves from dual graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("curve", help="curve file (text or JSON); '-' reads stdin")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--max-vertices",
        type=int,
        default=DEFAULT_MAX_SUBCURVE_VERTICES,
        help="cap for subcurve enumeration (default %(default)s)",
    )
    common.add_argument(
        "--max-edges",
        type=int,
        default=DEFAULT_MAX_STRATA_EDGES,
        help="cap for node-subset enumeration (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    sub.add_parser("info", parents=[common], help="curve summary invariants")
    p = sub.add_parser("classgroup", parents=[common], help="degree class group")
    p.add_argument("-d", "--degree", type=int, default=0)
    sub.add_parser("semistable", parents=[common], help="semistable and stable multidegrees")
    p = sub.add_parser("semistabilize", parents=[common], help="semistabilize a multidegree")
    p.add_argument(
        "-d",
        "--multidegree",
        required=True,
        help="comma-separated entries, e.g. '3,0'",
    )
    sub.add_parser("strata", parents=[common], help="strata of the compactification")
    sub.add_parser("components", parents=[common], help="irreducible components")
    sub.add_parser("theta", parents=[common], help="theta-divisor strata")
    p = sub.add_parser("neron", parents=[common], help="Neron fiber components")
    p.add_argument("-d", "--degree", type=int, default=0)
    p = sub.add_parser("abel", parents=[common], help="Abel map naturality predicates")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-d", "--degree", type=int)
    group.add_argument("--g-minus-1", action="store_true", dest="g_minus_1")
    p = sub.add_parser("dgeneral", parents=[common], help="d-general classification")
    p.add_argument("-d", "--degree", type=int, required=True)
    return parser


def _dispatch(graph: DualGraph, args) -> dict:
    if args.command == "info":
        return build_info(graph)
    if args.command == "classgroup":
        return build_classgroup(graph, args.degree)
    if args.command == "semistable":
        return build_semistable(graph, args.max_vertices)
    if args.command == "semistabilize":
        try:
            entries = [int(x) for x in args.multidegree.split(",")]
        except ValueError:
            raise ValueError(
                f"could not parse multidegree {args.multidegree!r}; "
                "expected comma-separated integers"
            ) from None
        return build_semistabilize(graph, entries, args.max_vertices)
    if args.command == "strata":
        return build_strata(graph, args.max_edges)
    if args.command == "components":
        return build_components(graph, args.max_edges)
    if args.command == "theta":
        return build_theta(graph, args.max_edges)
    if args.command == "neron":
        return build_neron(graph, args.degree)
    if args.command == "abel":
        if args.g_minus_1:
            return build_abel_g_minus_1(graph)
        return build_abel_degree(graph, args.degree)
    if args.command == "dgeneral":
        return build_dgeneral(graph, args.degree)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        graph = parse_curve(args.curve)
        report = _dispatch(graph, args)
    except CapExceeded as exc:
        print(f"nodalpic: cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"nodalpic: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(render_text(report), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
