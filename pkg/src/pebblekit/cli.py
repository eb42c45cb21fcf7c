"""Command-line surface: generate, analyze, pebble, verify, bounds, demo.

Every subcommand writes JSON to stdout (or --out) and exits nonzero with a
machine-readable error object on stderr when something is wrong.  All
randomized subcommands take an explicit --seed so identical invocations
produce identical files.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import io as pio
from .attacks import AttackSchedule, generic_attack, natural_svensson_pebbling, overlay_attack
from .extreme_dr import complete_dag, sample_extreme_dr, verify_extreme_dr
from .graph import Dag, depth
from .idr import idr
from .oracle import exact_pcc
from .pebbling import Transcript, cost, pebble_everything, validate
from .robustness import ReducibilityCertificate, is_depth_robust, verify_certificate
from .superconc import (
    Superconcentrator,
    SuperconcOverlay,
    build_superconcentrator,
    superconc_overlay,
    verify_superconcentrator,
)
from .svensson import (
    SvenssonParams,
    build_svensson,
    layer_shift_invariant,
    simplify,
    sparsify,
)
from .unique_games import toy_instance


def _emit(payload, out: str | None) -> None:
    text = pio.dumps(pio.to_jsonable(payload))
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> tuple[Dag, dict]:
    return pio.parse_graph(path)


def _parse_node_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def _load_ug(args) -> object:
    if args.ug is None:
        return toy_instance()
    import json

    return pio.ug_from_dict(json.loads(Path(args.ug).read_text()))


def _svensson_params(args) -> SvenssonParams:
    return SvenssonParams(
        alphabet=args.k,
        repetitions=args.t,
        subcube_fraction=Fraction(args.eps),
        slack=args.slack,
        layer_count=args.layers,
    )


def _backbone(args, layer_count: int) -> Dag:
    if args.backbone == "complete":
        return complete_dag(layer_count + 1)
    if args.backbone == "path":
        return Dag(layer_count + 1, [(i, i + 1) for i in range(layer_count)])
    g, _ = _load_graph(args.backbone_file)
    return g


def _svensson_meta(sv) -> dict:
    ld = sv.layered
    return {
        "kind": "svensson",
        "layers": list(ld.layers),
        "roles": list(ld.roles),
    }


def _overlay_from_file(path: str) -> SuperconcOverlay:
    g, meta = _load_graph(path)
    if meta.get("kind") != "overlay":
        raise ValueError(f"{path} does not carry overlay metadata")
    base = Dag(meta["base_n"], [tuple(e) for e in meta["base_edges"]])
    return SuperconcOverlay(
        dag=g,
        inputs=tuple(meta["inputs"]),
        outputs=tuple(meta["outputs"]),
        base=base,
        sc_depth=meta["sc_depth"],
        sc_vertex_count=meta["sc_vertices"],
    )


def _schedule(args) -> AttackSchedule:
    return AttackSchedule(
        reducing_set=_parse_node_set(args.set),
        residual_depth=args.residual_depth,
        interval_length=args.interval,
    )


def _attack_payload(result) -> dict:
    c = cost(result.transcript)
    return {
        "rounds": result.transcript.to_lists(),
        "phases": list(result.phases),
        "cost": {
            "cumulative": c.cumulative,
            "space": c.space,
            "time": c.time,
            "space_time": c.space_time,
        },
    }


# ---- handlers --------------------------------------------------------------


def _cmd_generate(args) -> None:
    kind = args.what
    if kind == "svensson":
        sv = build_svensson(_load_ug(args), _svensson_params(args))
        if args.simplified:
            simp = simplify(sv)
            meta = {
                "kind": "svensson-simplified",
                "layers": list(simp.layered.layers),
                "roles": list(simp.layered.roles),
            }
            pio.emit_graph(simp.layered.dag, args.out, args.format, meta)
        else:
            pio.emit_graph(sv.layered.dag, args.out, args.format, _svensson_meta(sv))
    elif kind == "sparsified":
        sv = build_svensson(_load_ug(args), _svensson_params(args))
        sp = sparsify(sv, _backbone(args, sv.layer_count))
        if args.simplified:
            simp = simplify(sp)
            meta = {
                "kind": "svensson-simplified",
                "layers": list(simp.layered.layers),
                "roles": list(simp.layered.roles),
            }
            pio.emit_graph(simp.layered.dag, args.out, args.format, meta)
        else:
            pio.emit_graph(sp.layered.dag, args.out, args.format, _svensson_meta(sp))
    elif kind == "idr":
        g, _ = _load_graph(args.graph)
        pio.emit_graph(idr(g, args.gamma), args.out, args.format, {"kind": "idr"})
    elif kind == "superconc":
        sc = build_superconcentrator(args.n)
        meta = {
            "kind": "superconcentrator",
            "inputs": list(sc.inputs),
            "outputs": list(sc.outputs),
            "depth": sc.depth,
            "max_indegree": sc.max_indegree,
        }
        pio.emit_graph(sc.dag, args.out, args.format, meta)
    elif kind == "overlay":
        base, _ = _load_graph(args.graph)
        sc = build_superconcentrator(base.node_count)
        o = superconc_overlay(base, sc)
        meta = {
            "kind": "overlay",
            "inputs": list(o.inputs),
            "outputs": list(o.outputs),
            "sc_depth": o.sc_depth,
            "sc_vertices": o.sc_vertex_count,
            "base_n": base.node_count,
            "base_edges": [list(e) for e in base.edges],
        }
        pio.emit_graph(o.dag, args.out, args.format, meta)
    elif kind == "extreme-dr":
        report = sample_extreme_dr(
            args.n, args.gamma, seed=args.seed, attempts=args.attempts
        )
        if report.dag is None:
            raise ValueError(
                f"no gamma-extreme candidate found in {report.attempts_used} attempts"
            )
        meta = {
            "kind": "extreme-dr",
            "gamma": args.gamma,
            "seed": args.seed,
            "attempts_used": report.attempts_used,
        }
        pio.emit_graph(report.dag, args.out, args.format, meta)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown generation target {kind!r}")


def _cmd_analyze(args) -> None:
    g, _ = _load_graph(args.graph)
    rep = is_depth_robust(g, args.e, args.d, max_expanded=args.max_expanded)
    _emit(
        {
            "e": rep.budget,
            "d": rep.target_depth,
            "verdict": rep.verdict,
            "method": rep.method,
            "witness": sorted(rep.witness) if rep.witness is not None else None,
            "nodes_expanded": rep.nodes_expanded,
        },
        args.out,
    )


def _cmd_pebble(args) -> None:
    strategy = args.strategy
    result = None
    if strategy == "oracle":
        g, _ = _load_graph(args.graph)
        res = exact_pcc(g, max_states=args.max_states)
        payload = {
            "status": res.status,
            "value": res.value,
            "lower_bound": res.lower_bound,
            "upper_bound": res.upper_bound,
            "states_expanded": res.states_expanded,
        }
        if res.transcript is not None:
            c = cost(res.transcript)
            payload["rounds"] = res.transcript.to_lists()
            payload["cost"] = {
                "cumulative": c.cumulative,
                "space": c.space,
                "time": c.time,
                "space_time": c.space_time,
            }
        _emit(payload, args.out)
        return
    if strategy == "everything":
        g, _ = _load_graph(args.graph)
        p = pebble_everything(g)
        c = cost(p)
        _emit(
            {
                "rounds": p.to_lists(),
                "cost": {
                    "cumulative": c.cumulative,
                    "space": c.space,
                    "time": c.time,
                    "space_time": c.space_time,
                },
            },
            args.out,
        )
        return
    if strategy == "generic":
        g, _ = _load_graph(args.graph)
        result = generic_attack(g, _schedule(args))
    elif strategy == "overlay":
        o = _overlay_from_file(args.graph)
        result = overlay_attack(o, _schedule(args))
    elif strategy == "natural":
        g, meta = _load_graph(args.graph)
        result = natural_svensson_pebbling(pio.layered_from_meta(g, meta))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown strategy {strategy!r}")
    if args.phase_csv:
        pio.write_phase_csv(args.phase_csv, result)
    _emit(_attack_payload(result), args.out)


def _cmd_verify(args) -> None:
    what = args.what
    if what == "transcript":
        g, _ = _load_graph(args.graph)
        text = Path(args.transcript).read_text()
        if args.transcript.endswith(".json"):
            import json

            p = pio.transcript_from_dict(json.loads(text))
        else:
            p = pio.transcript_from_lines(text)
        rep = validate(g, p, mode=args.mode or "parallel")
        _emit(
            {
                "passed": rep.legal and rep.complete,
                "legal": rep.legal,
                "complete": rep.complete,
                "mode": rep.mode,
                "violation_round": rep.violation_round,
                "reason": rep.reason,
            },
            args.out,
        )
    elif what == "certificate":
        import json

        g, _ = _load_graph(args.graph)
        cert = pio.certificate_from_dict(json.loads(Path(args.cert).read_text()))
        ok = verify_certificate(g, cert)
        _emit(
            {
                "passed": ok,
                "set": sorted(cert.removed),
                "d": cert.target_depth,
                "depth_after_deletion": depth(g, cert.removed),
            },
            args.out,
        )
    elif what == "superconcentrator":
        g, meta = _load_graph(args.graph)
        sc = Superconcentrator(g, tuple(meta["inputs"]), tuple(meta["outputs"]))
        rng = random.Random(args.seed) if args.seed is not None else None
        rep = verify_superconcentrator(
            sc, mode=args.mode or "exhaustive", samples=args.samples, rng=rng
        )
        _emit(
            {
                "passed": rep.passed,
                "mode": rep.mode,
                "checks": rep.checks,
                "first_failure": rep.first_failure,
            },
            args.out,
        )
    elif what == "extreme-dr":
        g, _ = _load_graph(args.graph)
        rep = verify_extreme_dr(g, args.gamma)
        _emit(
            {
                "passed": rep.passed,
                "certified": rep.certified,
                "gamma": rep.gamma,
                "frontier": [list(p) for p in rep.frontier],
                "verdicts": [r.verdict for r in rep.verdicts],
            },
            args.out,
        )
    else:  # pragma: no cover
        raise ValueError(f"unknown verification target {what!r}")


def _cmd_bounds(args) -> None:
    which = args.formula
    if which == "generic":
        rep = bounds_mod.bound_generic(args.e, args.d, args.g, args.n, args.delta)
    elif which == "dr-lower":
        rep = bounds_mod.bound_depth_robust_lower(args.e, args.d)
    elif which == "overlay-lower":
        rep = bounds_mod.bound_overlay_lower(args.e, args.d, args.n)
    elif which == "overlay-naive":
        rep = bounds_mod.bound_overlay_naive(
            args.e, args.d, args.g, args.n, args.sc_vertices, args.sc_depth
        )
    elif which == "overlay-improved":
        if args.sc_vertices is not None:
            rep = bounds_mod.bound_overlay_improved_measured(
                args.e,
                args.d,
                args.g,
                args.n,
                args.delta,
                args.sc_vertices,
                args.sc_depth,
            )
        else:
            rep = bounds_mod.bound_overlay_improved(args.e, args.d, args.g, args.n)
    elif which == "gap":
        ga = bounds_mod.gap_analysis(Fraction(args.c), args.n)
        _emit(
            {
                "c": str(ga.c),
                "eps": str(ga.eps),
                "k": ga.k,
                "upper_coefficient": str(ga.upper_coefficient),
                "lower_coefficient": str(ga.lower_coefficient),
                "inequality_holds": ga.inequality_holds,
                "gap_factor": str(ga.gap_factor),
                "gap_at_least_c_squared": ga.gap_at_least_c_squared,
                "exponent": str(ga.exponent),
                "upper_value": pio.format_value(ga.upper_value)
                if ga.upper_value is not None
                else None,
                "lower_value": pio.format_value(ga.lower_value)
                if ga.lower_value is not None
                else None,
            },
            args.out,
        )
        return
    else:  # pragma: no cover
        raise ValueError(f"unknown formula {which!r}")
    _emit(pio.bound_report_to_dict(rep), args.out)


def _cmd_demo(args) -> None:
    if args.which != "example1":
        raise ValueError(f"unknown demo {args.which!r}")
    inst = toy_instance()
    params = SvenssonParams(
        alphabet=2,
        repetitions=1,
        subcube_fraction=Fraction(1, 2),
        layer_count=args.layers,
    )
    sv = build_svensson(inst, params)
    simp = simplify(sv)
    # in the simplified graph, count out-edges of the test node keyed by
    # x=(0,0), S=(1,), per layer step
    probe_key = ((0, 0), (1,), 0, (0, 0))
    probe = simp.node_ids[(0, probe_key)]
    next_layer = [
        v
        for v in simp.layered.dag.children(probe)
        if simp.layered.layers[v] == 1
    ]
    _emit(
        {
            "bit_vertices_per_layer": sv.bits_per_layer(),
            "test_vertices_per_layer": sv.tests_per_layer(),
            "layer_count": sv.layer_count,
            "full_graph_nodes": sv.layered.dag.node_count,
            "simplified_nodes": simp.layered.dag.node_count,
            "probe_out_edges_next_layer": len(next_layer),
            "layer_shift_invariant": layer_shift_invariant(sv),
        },
        args.out,
    )


# ---- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pebblekit",
        description="DAG pebbling constructions, attacks, oracles and verifiers",
    )
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct graphs")
    gen.add_argument(
        "what",
        choices=["svensson", "sparsified", "idr", "overlay", "extreme-dr", "superconc"],
    )
    gen.add_argument("--out", required=True)
    gen.add_argument("--format", default="json", choices=["json", "dot", "edgelist"])
    gen.add_argument("--ug", help="unique games instance JSON (default: toy instance)")
    gen.add_argument("--k", type=int, default=2, help="alphabet size")
    gen.add_argument("--t", type=int, default=1, help="repetition parameter")
    gen.add_argument("--eps", default="1/2", help="subcube fraction, e.g. 1/2")
    gen.add_argument("--slack", type=float, default=0.1)
    gen.add_argument("--layers", type=int, default=None)
    gen.add_argument("--simplified", action="store_true")
    gen.add_argument(
        "--backbone", default="complete", help="complete | path | (use --backbone-file)"
    )
    gen.add_argument("--backbone-file")
    gen.add_argument("--graph", help="input graph for idr/overlay")
    gen.add_argument("--gamma", type=float, default=1)
    gen.add_argument("--n", type=int, help="size for superconc/extreme-dr")
    gen.add_argument("--seed", type=int, help="required for extreme-dr")
    gen.add_argument("--attempts", type=int, default=200)
    gen.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", help="robustness analysis")
    ana_sub = ana.add_subparsers(dest="analysis", required=True)
    rob = ana_sub.add_parser("robustness")
    rob.add_argument("--graph", required=True)
    rob.add_argument("--e", type=int, required=True)
    rob.add_argument("--d", type=int, required=True)
    rob.add_argument("--max-expanded", type=int, default=200_000)
    rob.add_argument("--out")
    rob.set_defaults(func=_cmd_analyze)

    peb = sub.add_parser("pebble", help="run pebbling strategies")
    peb.add_argument(
        "strategy", choices=["oracle", "generic", "overlay", "natural", "everything"]
    )
    peb.add_argument("--graph", required=True)
    peb.add_argument("--set", default="", help="comma-separated depth-reducing set")
    peb.add_argument("--residual-depth", type=int, default=1)
    peb.add_argument("--interval", type=int, default=1)
    peb.add_argument("--max-states", type=int, default=400_000)
    peb.add_argument("--phase-csv")
    peb.add_argument("--out")
    peb.set_defaults(func=_cmd_pebble)

    ver = sub.add_parser("verify", help="check artifacts")
    ver.add_argument(
        "what", choices=["transcript", "certificate", "superconcentrator", "extreme-dr"]
    )
    ver.add_argument("--graph", required=True)
    ver.add_argument("--transcript")
    ver.add_argument("--cert")
    ver.add_argument(
        "--mode",
        help="parallel|sequential for transcripts (default parallel), "
        "exhaustive|sampled for superconcentrators (default exhaustive)",
    )
    ver.add_argument("--samples", type=int, default=1000)
    ver.add_argument("--seed", type=int)
    ver.add_argument("--gamma", type=float, default=0.25)
    ver.add_argument("--out")
    ver.set_defaults(func=_cmd_verify)

    bnd = sub.add_parser("bounds", help="closed-form bound calculators")
    bnd.add_argument(
        "formula",
        choices=[
            "generic",
            "dr-lower",
            "overlay-lower",
            "overlay-naive",
            "overlay-improved",
            "gap",
        ],
    )
    bnd.add_argument("--e", type=float)
    bnd.add_argument("--d", type=float)
    bnd.add_argument("--g", type=float)
    bnd.add_argument("--n", type=float)
    bnd.add_argument("--delta", type=float, default=2)
    bnd.add_argument("--sc-vertices", type=float)
    bnd.add_argument("--sc-depth", type=float)
    bnd.add_argument("--c", help="approximation factor for gap")
    bnd.add_argument("--out")
    bnd.set_defaults(func=_cmd_bounds)

    demo = sub.add_parser("demo", help="end-to-end worked examples")
    demo.add_argument("which", choices=["example1"])
    demo.add_argument("--layers", type=int, default=2)
    demo.add_argument("--out")
    demo.set_defaults(func=_cmd_demo)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate" and args.what == "extreme-dr" and args.seed is None:
        _fail("--seed is required for extreme-dr generation")
        return 1
    if (
        args.command == "verify"
        and args.what == "superconcentrator"
        and args.mode == "sampled"
        and args.seed is None
    ):
        _fail("--seed is required for sampled verification")
        return 1
    try:
        args.func(args)
    except Exception as exc:  # noqa: BLE001 - boundary: everything becomes JSON
        _fail(str(exc), type(exc).__name__)
        return 1
    return 0


def _fail(message: str, kind: str = "UsageError") -> None:
    sys.stderr.write(pio.dumps({"error": message, "type": kind}))


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
