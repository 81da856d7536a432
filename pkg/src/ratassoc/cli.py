"""Command-line frontend.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap
exceeded.  All outputs are deterministic; JSON is emitted with sorted keys
and fixed indentation so identical invocations are byte-identical.

Caps can be overridden with the environment variables RATASSOC_FACE_CAP
and RATASSOC_PATH_CAP.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .collapse import CollapseCertificate, collapse_schedule, verify_certificate
from .complexes import (
    DEFAULT_FACE_CAP,
    FHVector,
    build_ass,
    build_hat_ass,
    parse_face,
    rational_kirkman,
    rational_narayana,
)
from .errors import CapExceededError, RatAssocError
from .homology import alexander_duality_check, alexander_partition_check, betti_numbers
from .lattice import DEFAULT_PATH_CAP
from .membership import valley_path
from .obstruction import build_obstruction_graph
from .polygon import check_slope_pair
from .render import face_svg

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _face_cap() -> int:
    return int(os.environ.get("RATASSOC_FACE_CAP", DEFAULT_FACE_CAP))


def _path_cap() -> int:
    return int(os.environ.get("RATASSOC_PATH_CAP", DEFAULT_PATH_CAP))


def _max_b() -> int:
    return int(os.environ.get("RATASSOC_MAX_B", 14))


def _build(model: str, a: int, b: int):
    if model == "hat":
        return build_hat_ass(a, b, max_faces=_face_cap(), max_b=_max_b())
    return build_ass(a, b, max_faces=_face_cap(), max_b=_max_b(), max_words=_path_cap())


def _add_pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, required=True, help="height of the slope pair")
    p.add_argument("--b", type=int, required=True, help="width of the slope pair (coprime, > a)")


def cmd_build(args) -> int:
    cpx = _build(args.model, args.a, args.b)
    sys.stdout.write(_dumps(cpx.to_json(include_faces=args.full_faces)))
    return EXIT_OK


def cmd_fvector(args) -> int:
    cpx = _build("ass", args.a, args.b)
    fh = FHVector.of(cpx)
    doc = {
        "schema": 1,
        "a": args.a,
        "b": args.b,
        "f": list(fh.f),
        "h": list(fh.h),
        "kirkman": [rational_kirkman(args.a, args.b, i) for i in range(1, args.a + 1)],
        "narayana": [rational_narayana(args.a, args.b, i) for i in range(1, args.a + 1)],
    }
    if args.format == "text":
        sys.stdout.write(f"f = {fh.f}\nh = {fh.h}\n")
    else:
        sys.stdout.write(_dumps(doc))
    return EXIT_OK


def cmd_membership(args) -> int:
    face = parse_face(args.face, args.b)
    result = valley_path(face, args.a, args.b)
    doc: dict = {"schema": 1, "a": args.a, "b": args.b, "member": result.is_member}
    if result.is_member:
        doc["valley_path"] = result.valley_path.word
    else:
        doc["break_x"] = result.break_x
    sys.stdout.write(_dumps(doc))
    return EXIT_OK


def cmd_obstruction(args) -> int:
    graph = build_obstruction_graph(args.a, args.b)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    elif args.format == "text":
        for e in graph.edges:
            sys.stdout.write(e.text() + "\n")
    else:
        sys.stdout.write(_dumps(graph.to_json()))
    return EXIT_OK


def cmd_collapse(args) -> int:
    cert = collapse_schedule(args.a, args.b)
    payload = cert.dumps()
    if args.emit == "-":
        sys.stdout.write(payload)
    else:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(payload)
        sys.stdout.write(
            _dumps(
                {
                    "schema": 1,
                    "a": args.a,
                    "b": args.b,
                    "steps": cert.n_steps,
                    "stages": len(cert.stages),
                    "written": args.emit,
                }
            )
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.cert, "r", encoding="utf-8") as fh:
        cert = CollapseCertificate.from_json(json.load(fh))
    hat = _build("hat", cert.a, cert.b)
    ass = _build("ass", cert.a, cert.b)
    report = verify_certificate(hat, ass, cert)
    doc = {
        "schema": 1,
        "a": cert.a,
        "b": cert.b,
        "ok": report.ok,
        "steps_applied": report.steps_applied,
        "failure_index": report.failure_index,
        "reason": report.reason,
        "terminal_face_count": report.terminal_face_count,
        "target_matched": report.target_matched,
    }
    sys.stdout.write(_dumps(doc))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_homology(args) -> int:
    cpx = _build(args.model, args.a, args.b)
    fields = ["gf2", "q"] if args.field == "both" else [args.field]
    betti = {}
    for field in fields:
        vec = betti_numbers(cpx, field)
        betti[field] = {str(k): v for k, v in vec.nonzero().items()}
    doc = {
        "schema": 1,
        "a": args.a,
        "b": args.b,
        "model": args.model,
        "dim": cpx.dim,
        "reduced_betti_nonzero": betti,
    }
    sys.stdout.write(_dumps(doc))
    return EXIT_OK


def cmd_duality(args) -> int:
    partition = alexander_partition_check(args.b)
    sweeps = []
    ok = partition.ok
    for a, _, _ in partition.pairs:
        report = alexander_duality_check(a, args.b)
        ok = ok and report.ok
        sweeps.append(
            {
                "a": a,
                "dual_a": args.b - a,
                "expected_rank": report.expected_rank,
                "rank_left": report.rank_left,
                "rank_right": report.rank_right,
                "ok": report.ok,
            }
        )
    doc = {
        "schema": 1,
        "b": args.b,
        "partition_ok": partition.ok,
        "total_diagonals": partition.total_diagonals,
        "duality": sweeps,
        "ok": ok,
        "notes": [
            "duality entries are homology-rank surrogates for the topological statement"
        ],
    }
    sys.stdout.write(_dumps(doc))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_render(args) -> int:
    face = parse_face(args.face, args.b)
    check_slope_pair(args.a, args.b)
    svg = face_svg(face, args.b)
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratassoc",
        description="Rational associahedra: build, collapse, verify.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="materialize one of the two models as JSON")
    _add_pair_args(p)
    p.add_argument("--model", choices=("hat", "ass"), default="hat")
    p.add_argument("--full-faces", action="store_true", help="include every face, not just facets")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("fvector", help="f- and h-vectors of the lattice-path model")
    _add_pair_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("membership", help="valley-path membership test for a face")
    _add_pair_args(p)
    p.add_argument("--face", required=True, help='comma-separated diagonals, e.g. "5-7,2-4,0-5,0-4"')
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("obstruction", help="the obstruction graph")
    _add_pair_args(p)
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("collapse", help="generate a collapse certificate")
    _add_pair_args(p)
    p.add_argument("--emit", default="-", help="output path, or - for stdout")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("verify", help="re-verify a collapse certificate")
    p.add_argument("--cert", required=True, help="certificate JSON path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("homology", help="reduced Betti numbers")
    _add_pair_args(p)
    p.add_argument("--model", choices=("hat", "ass"), default="ass")
    p.add_argument("--field", choices=("gf2", "q", "both"), default="both")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("duality", help="partition and rank-duality sweep for one b")
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("render", help="draw a face as an SVG dissection")
    _add_pair_args(p)
    p.add_argument("--face", required=True)
    p.add_argument("-o", "--out", default="-")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except RatAssocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
