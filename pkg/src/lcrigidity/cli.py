"""Command-line interface.

Reads a graph (with optional realization block) as JSON from a file or
stdin, runs one of the analyses, and prints JSON to stdout.  Exit codes:
0 on success, 1 when `check --strict` reaches a negative verdict, 2 on
bad input or unmet preconditions.
"""

import argparse
import json
import sys

from . import analysis, construct, exact, graphs, matroid, plotting
from .errors import LcRigidityError, ParseError


def _element_json(g, element):
    if element[0] == "edge":
        return {"kind": "edge", "ends": [element[1], element[2]]}
    return {"kind": "loop", "id": element[1]}


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def _load_graph(path):
    data = _load(path)
    try:
        g = graphs.from_json_dict(data)
    except LcRigidityError:
        raise
    except Exception as exc:
        raise ParseError(str(exc)) from exc
    r = None
    if isinstance(data, dict) and "realization" in data:
        try:
            r = exact.realization_from_json_dict(data["realization"])
        except Exception as exc:
            raise ParseError(str(exc)) from exc
    return g, r


def _realization_for(g, r, args):
    if r is not None:
        return r
    return exact.sample_realization(g, d=2, seed=args.seed, bits=args.bits)


def _emit(data):
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def export_dot(g):
    """Deterministic DOT text; loops render as self-arcs."""
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append('  "%s";' % v)
    for u, v in g.edges:
        lines.append('  "%s" -- "%s";' % (u, v))
    for lid, v in g.loops:
        lines.append('  "%s" -- "%s" [label="%s"];' % (v, v, lid))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_check(args):
    g, _ = _load_graph(args.input)
    verdict = analysis.decide_global_rigidity(g)
    _emit(
        {
            "globallyRigid": verdict.globally_rigid,
            "balanced": verdict.balanced,
            "witness": list(verdict.balance_witness) if verdict.balance_witness else None,
            "components": [
                {
                    "vertices": list(c.vertices),
                    "kind": c.kind,
                    "witness": _element_json(g, c.witness) if c.witness else None,
                }
                for c in verdict.components
            ],
        }
    )
    if args.strict and not verdict.globally_rigid:
        return 1
    return 0


def _cmd_rank(args):
    g, _ = _load_graph(args.input)
    _emit(
        {
            "rank": matroid.rank(g),
            "rigid": matroid.is_rigid(g),
            "redundantlyRigid": matroid.is_redundantly_rigid(g),
        }
    )
    return 0


def _cmd_circuits(args):
    g, _ = _load_graph(args.input)
    report = matroid.classify_circuit(g)
    if report is None:
        _emit({"circuit": False, "kind": None, "elements": []})
    else:
        _emit(
            {
                "circuit": True,
                "kind": report.kind,
                "elements": [
                    _element_json(g, e) for e in sorted(report.elements)
                ],
            }
        )
    return 0


def _cmd_components(args):
    g, _ = _load_graph(args.input)
    comps = matroid.mlc_components(g)
    _emit(
        {
            "components": [
                [_element_json(g, e) for e in sorted(c)] for c in comps
            ],
            "connected": len(comps) == 1 and len(g.elements) >= 2,
        }
    )
    return 0


def _cmd_construct(args):
    g, _ = _load_graph(args.input)
    seq = construct.deconstruct(g, args.mode)
    _emit(seq.to_json_dict())
    return 0


def _cmd_replay(args):
    data = _load(args.input)
    try:
        seq = construct.sequence_from_json_dict(data)
    except LcRigidityError:
        raise
    except Exception as exc:
        raise ParseError(str(exc)) from exc
    _emit(construct.replay(seq).to_json_dict())
    return 0


def _cmd_count(args):
    g, _ = _load_graph(args.input)
    _emit(
        {
            "b": analysis.b_count(g),
            "realizations": str(analysis.count_equivalent_realizations(g)),
            "globallyLinkedPairs": [list(p) for p in analysis.globally_linked_pairs(g)],
        }
    )
    return 0


def _cmd_realize(args):
    g, _ = _load_graph(args.input)
    r = exact.sample_realization(g, d=args.d, seed=args.seed, bits=args.bits)
    data = g.to_json_dict()
    data["realization"] = r.to_json_dict()
    _emit(data)
    return 0


def _cmd_stress(args):
    g, r = _load_graph(args.input)
    r = _realization_for(g, r, args)
    basis = exact.stress_basis(g, r)
    best, rank_omega = exact.max_rank_stress(g, r, trials=args.trials, seed=args.seed)
    report = exact.stress_matrix(g, best, r)
    n = len(g.vertices)
    _emit(
        {
            "rigidityMatrixRank": exact.matrix_rank(
                exact.rigidity_matrix(g, r), field=args.field, seed=args.seed
            ),
            "basisDimension": len(basis),
            "basis": [
                [str(x) for x in s.vector(g)] for s in basis
            ],
            "stress": [str(x) for x in best.vector(g)],
            "omega": [[str(x) for x in row] for row in report.omega_matrix],
            "omegaRank": rank_omega,
            "fullRank": rank_omega == n - 1,
            "equilibriumResidualZero": all(
                not any(row) for row in report.residual
            ),
        }
    )
    return 0


def _cmd_enumerate(args):
    g, r = _load_graph(args.input)
    r = _realization_for(g, r, args)
    realizations = exact.enumerate_equivalent(g, r)
    result = {
        "count": str(len(realizations)),
        "realizations": [x.to_json_dict() for x in realizations],
    }
    if args.figures:
        result["files"] = plotting.render_report(g, realizations, args.figures)
    _emit(result)
    return 0


def _cmd_gadget(args):
    g, _ = _load_graph(args.input)
    u, v = args.edge.split(",")
    _emit(analysis.bar_joint_gadget(g, (u, v)).to_json_dict())
    return 0


def _cmd_export(args):
    g, _ = _load_graph(args.input)
    sys.stdout.write(export_dot(g))
    return 0


def _parser():
    p = argparse.ArgumentParser(
        prog="lcrigidity",
        description="Rigidity and global rigidity of planar slider frameworks.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("input", help="graph JSON path, or - for stdin")
        sp.add_argument("--seed", type=int, default=1729)
        sp.add_argument("--bits", type=int, default=32)
        sp.add_argument("--trials", type=int, default=50)
        sp.add_argument("--field", choices=["rational", "prime"], default="rational")
        return sp

    sp = common(sub.add_parser("check", help="decide global rigidity"))
    sp.add_argument("--strict", action="store_true")
    sp.set_defaults(fn=_cmd_check)
    common(sub.add_parser("rank", help="matroid rank and rigidity")).set_defaults(
        fn=_cmd_rank
    )
    common(sub.add_parser("circuits", help="classify the graph as a circuit")).set_defaults(
        fn=_cmd_circuits
    )
    common(sub.add_parser("components", help="matroid connectivity classes")).set_defaults(
        fn=_cmd_components
    )
    sp = common(sub.add_parser("construct", help="deconstruct into a move sequence"))
    sp.add_argument(
        "--mode", choices=[construct.BALANCED, construct.GENERAL], default=construct.BALANCED
    )
    sp.set_defaults(fn=_cmd_construct)
    common(sub.add_parser("replay", help="replay a move sequence")).set_defaults(
        fn=_cmd_replay
    )
    common(sub.add_parser("count", help="b(G) and the realization count")).set_defaults(
        fn=_cmd_count
    )
    sp = common(sub.add_parser("realize", help="sample a random rational realization"))
    sp.add_argument("--d", type=int, default=2)
    sp.set_defaults(fn=_cmd_realize)
    common(sub.add_parser("stress", help="stress basis and certificates")).set_defaults(
        fn=_cmd_stress
    )
    sp = common(sub.add_parser("enumerate", help="all equivalent frameworks"))
    sp.add_argument("--figures", help="directory for rendered figures and CSV")
    sp.set_defaults(fn=_cmd_enumerate)
    sp = common(sub.add_parser("gadget", help="pin an edge with four loops"))
    sp.add_argument("--edge", required=True, help="u,v")
    sp.set_defaults(fn=_cmd_gadget)
    common(sub.add_parser("export", help="DOT text")).set_defaults(fn=_cmd_export)
    return p


def run(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except LcRigidityError as exc:
        _emit({"error": type(exc).__name__, "reason": str(exc)})
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
