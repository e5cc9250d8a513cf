"""Command-line interface.

Commands: ``certify`` (recursive certification, JSON/text trace, exit 0 when
certified, 2 when inconclusive), ``oracle`` (grid component count), ``analyze``
(support/polytope statistics) and ``plot`` (SVG of a 2-variable negative
region).  Input errors exit 1 with a message on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import tracedoc
from .certify import (
    CERTIFIED_OUTCOMES,
    Certificate,
    KIND_CRITERION,
    KIND_EMPTY,
    KIND_NEGATIVE_FACE,
    KIND_PARALLEL_SPLIT,
    certify_connectivity,
)
from .criteria import (
    CertifyConfig,
    EnclosingBudgetExceededError,
    closure_property,
    find_strict_separating_hyperplane,
)
from .oracle import GridBudgetExceededError, count_negative_components, default_grid
from .parsing import ParseError, parse_signomial
from .polytope import (
    FacetBudgetExceededError,
    build_polytope,
    parallel_face_pairs,
    smallest_face_containing,
)
from .signomial import Signomial, negatives, newton_dim, positives
from .svgplot import PlotUnsupportedError, render_region_svg

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def _read_signomial(path: str) -> Signomial:
    text = Path(path).read_text(encoding="utf-8")
    f = parse_signomial(text)
    if not f.terms:
        raise ParseError("polynomial has empty support", 1, 1)
    return f


def _parse_box(spec: Optional[str], dimension: int):
    if spec is None:
        return None
    parts = spec.split(";")
    if len(parts) == 1:
        lo, hi = (float(v) for v in parts[0].split(","))
        return [(lo, hi)] * dimension
    if len(parts) != dimension:
        raise ValueError(f"expected {dimension} axis intervals, got {len(parts)}")
    return [tuple(float(v) for v in p.split(",")) for p in parts]


def _format_text(node: Certificate, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if node.kind == KIND_CRITERION:
        lines = [f"{pad}criterion {node.criterion.kind} -> {node.outcome}"]
    elif node.kind == KIND_NEGATIVE_FACE:
        normal = ",".join(str(c) for c in node.normal)
        lines = [f"{pad}negative-face-reduction normal=({normal}) -> {node.outcome}"]
    elif node.kind == KIND_PARALLEL_SPLIT:
        normal = ",".join(str(c) for c in node.normal)
        b1 = ",".join(str(c) for c in node.edge.beta1)
        b2 = ",".join(str(c) for c in node.edge.beta2)
        lines = [
            f"{pad}parallel-split normal=({normal}) edge=({b1})-({b2}) -> {node.outcome}"
        ]
    elif node.kind == KIND_EMPTY:
        lines = [f"{pad}empty negative support -> {node.outcome}"]
    else:
        lines = [f"{pad}inconclusive: {node.reason}"]
    for child in node.children:
        lines.extend(_format_text(child, indent + 1))
    return lines


def _cmd_certify(args) -> int:
    if args.verify_trace:
        try:
            doc = json.loads(Path(args.file).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
        errors = tracedoc.verify_document(doc)
        print(json.dumps({"verified": not errors, "errors": errors}, indent=2))
        return EXIT_OK if not errors else EXIT_INCONCLUSIVE

    f = _read_signomial(args.file)
    config = CertifyConfig(
        max_depth=args.max_depth,
        facet_budget=args.facet_budget,
        enable_simplex_search=args.enable_simplex_search,
        enable_enclosing_search=args.enable_enclosing_search,
        enable_box_criterion=args.enable_box,
    )
    cert = certify_connectivity(f, config)
    doc = tracedoc.make_document(f, config, cert, source=Path(args.file).read_text(encoding="utf-8").strip())
    if args.format == "json":
        print(tracedoc.document_to_json(doc))
    else:
        print("\n".join([f"outcome: {cert.outcome}"] + _format_text(cert)))
    return EXIT_OK if cert.outcome in CERTIFIED_OUTCOMES else EXIT_INCONCLUSIVE


def _cmd_oracle(args) -> int:
    f = _read_signomial(args.file)
    box = _parse_box(args.box, f.dimension)
    grid = default_grid(f.dimension, box=box, resolution=args.grid, tolerance_factor=args.tol)
    report = count_negative_components(f, grid)
    print(
        json.dumps(
            {
                "component_count": report.component_count,
                "negative_cell_count": report.negative_cell_count,
                "witnesses_log": [list(w) for w in report.witnesses],
                "grid": {
                    "box": [list(b) for b in report.grid.box],
                    "resolution": report.grid.resolution,
                    "tolerance_factor": report.grid.tolerance_factor,
                },
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_analyze(args) -> int:
    f = _read_signomial(args.file)
    neg = negatives(f)
    report = {
        "dimension": f.dimension,
        "term_count": len(f.terms),
        "positive_count": len(positives(f)),
        "negative_count": len(neg),
        "newton_dim": newton_dim(f),
        "facet_budget_exceeded": False,
    }
    try:
        P = build_polytope(f.support, args.facet_budget)
        report["vertex_count"] = len(P.vertices)
        report["facet_count"] = len(P.facets)
        if neg:
            neg_idx = [i for i, p in enumerate(P.points) if p in set(neg)]
            face_idx, proper = smallest_face_containing(P, neg_idx)
            report["smallest_negative_face"] = {
                "support": [[str(c) for c in P.points[i]] for i in face_idx],
                "proper": proper,
            }
        else:
            report["smallest_negative_face"] = None
        if P.dim >= 1:
            report["parallel_face_pairs"] = [
                [str(c) for c in v] for v in parallel_face_pairs(P, tuple(range(len(P.points))))
            ]
        else:
            report["parallel_face_pairs"] = []
    except FacetBudgetExceededError:
        report["facet_budget_exceeded"] = True
    sep = find_strict_separating_hyperplane(f)
    report["strict_separating"] = (
        {
            "normal": [str(c) for c in sep.normal],
            "offset": str(sep.offset),
            "strict_point": [str(c) for c in sep.strict_point],
        }
        if sep
        else None
    )
    try:
        report["closure_property"] = closure_property(f, args.facet_budget)
    except FacetBudgetExceededError:
        report["closure_property"] = None
        report["facet_budget_exceeded"] = True
    print(json.dumps(report, indent=2))
    return EXIT_OK


def _cmd_plot(args) -> int:
    f = _read_signomial(args.file)
    box = _parse_box(args.box, 2)
    grid = default_grid(2, box=box, resolution=args.grid or 200)
    hyperplane = None
    if args.hyperplane:
        parts = [Fraction(p) for p in args.hyperplane.split(",")]
        if len(parts) != 3:
            raise ValueError("hyperplane must be v1,v2,a")
        hyperplane = ((parts[0], parts[1]), parts[2])
    svg = render_region_svg(f, grid, hyperplane)
    out = args.out or str(Path(args.file).with_suffix(".svg"))
    Path(out).write_text(svg, encoding="utf-8")
    print(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descregions",
        description="Certify connectivity of the negative region of a sparse signomial.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="run the recursive certification")
    p.add_argument("file", help="polynomial file (or trace JSON with --verify-trace)")
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--facet-budget", type=int, default=10000)
    p.add_argument("--enable-simplex-search", action="store_true")
    p.add_argument("--enable-enclosing-search", action="store_true")
    p.add_argument("--enable-box", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--verify-trace", action="store_true", help="re-verify an emitted trace document")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("oracle", help="grid-sampling component count")
    p.add_argument("file")
    p.add_argument("--box", help="log-space box: 'lo,hi' or per-axis 'lo,hi;lo,hi'")
    p.add_argument("--grid", type=int, default=None, help="samples per axis")
    p.add_argument("--tol", type=float, default=1e-12, help="relative sign tolerance")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("analyze", help="support and Newton polytope statistics")
    p.add_argument("file")
    p.add_argument("--facet-budget", type=int, default=10000)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("plot", help="SVG of the negative region (two variables)")
    p.add_argument("file")
    p.add_argument("--box", help="log-space box: 'lo,hi' or per-axis 'lo,hi;lo,hi'")
    p.add_argument("--grid", type=int, default=None, help="samples per axis")
    p.add_argument("--out", help="output SVG path")
    p.add_argument("--hyperplane", help="overlay 'v1,v2,a' on a support panel")
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ParseError,
        OSError,
        ValueError,
        PlotUnsupportedError,
        GridBudgetExceededError,
        EnclosingBudgetExceededError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
