"""File formats: graph JSON/DOT/edgelist, transcripts, certificates, phase CSV.

The JSON graph schema is {"n": int, "edges": [[u, v], ...], "meta": {...}}
with edges sorted ascending; meta optionally carries roles, layers and
input/output designations so layered graphs and superconcentrators round
trip.  Transcripts serialize as one line per round with sorted node ids.
All emitters are deterministic byte for byte.
"""
from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .attacks import AttackResult
from .graph import CycleError, Dag, LayeredDag
from .pebbling import Transcript
from .robustness import ReducibilityCertificate
from .unique_games import UniqueGamesInstance


class GraphFormatError(ValueError):
    """Malformed input file; the message cites the offending field or line."""


GRAPH_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "meta": {"type": "object"},
    },
}

UG_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["V", "W", "R", "edges"],
    "properties": {
        "V": {"type": "integer", "minimum": 1},
        "W": {"type": "integer", "minimum": 1},
        "R": {"type": "integer", "minimum": 1},
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["v", "w", "pi"],
                "properties": {
                    "v": {"type": "integer", "minimum": 0},
                    "w": {"type": "integer", "minimum": 0},
                    "pi": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
    },
}

CERTIFICATE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["set", "d"],
    "properties": {
        "set": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "d": {"type": "integer", "minimum": 1},
    },
}

TRANSCRIPT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["rounds"],
    "properties": {
        "rounds": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        }
    },
}

PEBBLE_RESULT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["rounds", "cost"],
    "properties": {
        "rounds": TRANSCRIPT_SCHEMA["properties"]["rounds"],
        "cost": {
            "type": "object",
            "required": ["cumulative", "space", "time", "space_time"],
            "properties": {
                "cumulative": {"type": "integer"},
                "space": {"type": "integer"},
                "time": {"type": "integer"},
                "space_time": {"type": "integer"},
            },
        },
        "phases": {"type": "array", "items": {"type": "string"}},
        "status": {"type": "string"},
    },
}

ROBUSTNESS_REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["e", "d", "verdict", "method"],
    "properties": {
        "e": {"type": "integer"},
        "d": {"type": "integer"},
        "verdict": {"type": "string"},
        "method": {"type": "string"},
        "witness": {"type": ["array", "null"], "items": {"type": "integer"}},
    },
}

BOUND_REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["name", "params", "value"],
    "properties": {
        "name": {"type": "string"},
        "params": {"type": "object"},
        "value": {"type": "string"},
        "exact": {"type": ["string", "null"]},
    },
}

VERIFY_REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["passed"],
    "properties": {"passed": {"type": "boolean"}},
}


def format_value(x: float) -> str:
    """Decimal string with 12 significant digits."""
    return f"{float(x):.12g}"


def bound_report_to_dict(report) -> dict[str, Any]:
    return {
        "name": report.name,
        "params": {k: format_value(v) for k, v in report.params.items()},
        "value": format_value(report.value),
        "exact": str(report.exact) if report.exact is not None else None,
    }


# ---- graphs ---------------------------------------------------------------


def graph_to_dict(g: Dag, meta: dict[str, Any] | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.node_count, "edges": [list(e) for e in g.edges]}
    if meta:
        out["meta"] = meta
    return out


def graph_from_dict(data: dict[str, Any]) -> tuple[Dag, dict[str, Any]]:
    if not isinstance(data, dict):
        raise GraphFormatError("graph document must be a JSON object")
    for field in ("n", "edges"):
        if field not in data:
            raise GraphFormatError(f"missing field {field!r}")
    if not isinstance(data["n"], int):
        raise GraphFormatError("field 'n' must be an integer")
    edges = []
    for i, e in enumerate(data["edges"]):
        if (
            not isinstance(e, (list, tuple))
            or len(e) != 2
            or not all(isinstance(x, int) for x in e)
        ):
            raise GraphFormatError(f"edges[{i}] must be a pair of integers")
        edges.append((e[0], e[1]))
    try:
        g = Dag(data["n"], edges)
    except CycleError:
        raise
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
    return g, data.get("meta", {})


def layered_from_meta(g: Dag, meta: dict[str, Any]) -> LayeredDag:
    if "layers" not in meta or "roles" not in meta:
        raise GraphFormatError("meta must carry 'layers' and 'roles' for layered graphs")
    return LayeredDag(g, tuple(meta["layers"]), tuple(meta["roles"]))


def dag_to_dot(g: Dag, meta: dict[str, Any] | None = None) -> str:
    roles = (meta or {}).get("roles")
    lines = ["digraph pebbling {"]
    for v in g.nodes():
        attrs = ""
        if roles is not None:
            shape = "box" if roles[v] == "bit" else "ellipse"
            attrs = f' [shape={shape}, label="{v}:{roles[v]}"]'
        lines.append(f"  {v}{attrs};")
    for u, v in g.edges:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dag_to_edgelist(g: Dag) -> str:
    lines = [str(g.node_count)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def edgelist_to_dag(text: str) -> Dag:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edgelist")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise GraphFormatError("line 1: expected node count") from exc
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {i}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    return Dag(n, edges)


def emit_graph(
    g: Dag,
    path: str | Path,
    fmt: str = "json",
    meta: dict[str, Any] | None = None,
) -> None:
    path = Path(path)
    if fmt == "json":
        path.write_text(dumps(graph_to_dict(g, meta)))
    elif fmt == "dot":
        path.write_text(dag_to_dot(g, meta))
    elif fmt == "edgelist":
        path.write_text(dag_to_edgelist(g))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def parse_graph(path: str | Path) -> tuple[Dag, dict[str, Any]]:
    """Read a graph file, JSON or edgelist by extension (.json default)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".edgelist":
        return edgelist_to_dag(text), {}
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return graph_from_dict(data)


# ---- unique games ---------------------------------------------------------


def ug_to_dict(inst: UniqueGamesInstance) -> dict[str, Any]:
    return {
        "V": inst.v_count,
        "W": inst.w_count,
        "R": inst.label_count,
        "edges": [{"v": v, "w": w, "pi": list(pi)} for v, w, pi in inst.edges],
    }


def ug_from_dict(data: dict[str, Any]) -> UniqueGamesInstance:
    for field in ("V", "W", "R", "edges"):
        if field not in data:
            raise GraphFormatError(f"missing field {field!r}")
    edges = []
    for i, e in enumerate(data["edges"]):
        for sub in ("v", "w", "pi"):
            if sub not in e:
                raise GraphFormatError(f"edges[{i}] missing field {sub!r}")
        edges.append((e["v"], e["w"], tuple(e["pi"])))
    try:
        return UniqueGamesInstance(data["V"], data["W"], data["R"], tuple(edges))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


# ---- transcripts and certificates ----------------------------------------


def transcript_to_lines(p: Transcript) -> str:
    return "\n".join(" ".join(str(v) for v in sorted(r)) for r in p.rounds) + "\n"


def transcript_from_lines(text: str) -> Transcript:
    rounds = []
    for ln in text.splitlines():
        ln = ln.strip()
        rounds.append([int(x) for x in ln.split()] if ln else [])
    while rounds and not rounds[-1]:
        rounds.pop()
    return Transcript(rounds)


def transcript_to_dict(p: Transcript) -> dict[str, Any]:
    return {"rounds": p.to_lists()}


def transcript_from_dict(data: dict[str, Any]) -> Transcript:
    if "rounds" not in data:
        raise GraphFormatError("missing field 'rounds'")
    return Transcript(data["rounds"])


def certificate_to_dict(cert: ReducibilityCertificate) -> dict[str, Any]:
    return {"set": sorted(cert.removed), "d": cert.target_depth}


def certificate_from_dict(data: dict[str, Any]) -> ReducibilityCertificate:
    for field in ("set", "d"):
        if field not in data:
            raise GraphFormatError(f"missing field {field!r}")
    return ReducibilityCertificate(frozenset(data["set"]), data["d"])


def write_phase_csv(path: str | Path, result: AttackResult) -> None:
    """CSV phase log: round, phase, pebble count."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["round", "phase", "pebbles"])
        writer.writerows(result.phase_rows())


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def to_jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, frozenset):
        return sorted(x)
    if isinstance(x, (set, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: to_jsonable(v) for k, v in x.items()}
    if isinstance(x, list):
        return [to_jsonable(v) for v in x]
    return x
