"""``zonomtt`` command line.

Exit status: 0 when every requested check passed (or a utility verb
succeeded), 1 when some check failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph as gr
from .errors import InstanceTooLarge, ZonoMTTError
from .linalg import matmul, transpose
from .matroid import DEFAULT_CAP, RepMatroid, full_row_rank_form
from .theorems import THEOREM_IDS, format_rational, run_graph_checks, run_matrix_checks
from .zonotope import volume

VERBS = ("volume", "bases", "cocircuits", "laplacian", "check", "suite")
CHECK_NAMES = THEOREM_IDS + ("classical", "suite")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zonomtt",
        description="Exact zonotope volumes and matrix-tree checks for unimodular matrices and graphs.",
    )
    p.add_argument("verb", choices=VERBS)
    p.add_argument("name", nargs="?", help="check name (for the 'check' verb): " + ", ".join(CHECK_NAMES))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", metavar="PATH", help="matrix file: 'rows cols' then the rows")
    src.add_argument("--graph", metavar="PATH", help="edge list: vertex count, then 'tail head [weight]' lines")
    p.add_argument("--weights", metavar="PATH", help="one rational weight per line, in edge/column order")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_nonnegative_int, default=1000)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap", type=_nonnegative_int, default=DEFAULT_CAP,
                   help="largest number of column subsets an enumeration may visit")
    return p


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _load(args):
    if args.graph:
        G = gr.read_graph(args.graph)
        if args.weights:
            G = G.with_weights(gr.read_weights(args.weights))
        return G, None
    M = gr.read_matrix(args.matrix)
    weights = gr.read_weights(args.weights) if args.weights else None
    if weights is not None and M and len(weights) != len(M[0]):
        raise UsageError(f"{len(weights)} weights for {len(M[0])} columns")
    return None, (M, weights)


def _matrix_of(G, loaded):
    return gr.incidence_matrix(G) if G is not None else loaded[0]


def _emit(payload, text_lines, fmt, out):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _format_matrix(A):
    cells = [[format_rational(x) for x in row] for row in A]
    width = max((len(c) for row in cells for c in row), default=1)
    return [" ".join(c.rjust(width) for c in row) for row in cells]


def _sign_string(v):
    return "".join({1: "+", -1: "-", 0: "0"}[x] for x in v)


def _report_lines(report):
    lines = [f"[{'PASS' if report.passed else 'FAIL'}] {report.theorem}"]
    width = max((len(k) for k in report.quantities), default=0)
    for k, v in report.quantities.items():
        lines.append(f"  {k.ljust(width)} = {format_rational(v)}")
    if report.notes:
        lines.append(f"  note: {report.notes}")
    return lines


def _run_checks(names, G, loaded, args):
    opts = dict(samples=args.samples, seed=args.seed, tol=args.tol, cap=args.cap)
    if G is not None:
        return run_graph_checks(G, names, **opts)
    M, weights = loaded
    return run_matrix_checks(M, names, weights=weights, **opts)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.verb == "check":
            if args.name is None:
                raise UsageError("the check verb needs a check name: " + ", ".join(CHECK_NAMES))
            if args.name not in CHECK_NAMES:
                raise UsageError(f"unknown check {args.name!r}; choose from " + ", ".join(CHECK_NAMES))
        elif args.name is not None:
            raise UsageError(f"unexpected argument {args.name!r} for verb {args.verb!r}")

        G, loaded = _load(args)
        cap = args.cap

        if args.verb == "volume":
            v = volume(_matrix_of(G, loaded), cap=cap)
            _emit({"volume": format_rational(v)}, [format_rational(v)], args.format, out)
            return 0

        if args.verb == "bases":
            M = _matrix_of(G, loaded)
            B = RepMatroid(M, cap=cap).bases()
            one_based = [[j + 1 for j in b] for b in B]
            _emit({"count": len(B), "bases": one_based},
                  [f"{len(B)} bases"] + [" ".join(map(str, b)) for b in one_based], args.format, out)
            return 0

        if args.verb == "cocircuits":
            M = _matrix_of(G, loaded)
            C = RepMatroid(M, cap=cap).cocircuits()
            _emit({"count": len(C), "cocircuits": [list(c) for c in C]},
                  [f"{len(C)} cocircuits"] + [_sign_string(c) for c in C], args.format, out)
            return 0

        if args.verb == "laplacian":
            if G is not None:
                L = gr.weighted_laplacian(G) if G.weights is not None else gr.laplacian(G)
            else:
                M, weights = loaded
                MD = [[x * w for x, w in zip(row, weights)] for row in M] if weights else M
                L = matmul(MD, transpose(M, len(M[0]) if M else 0))
            _emit({"laplacian": [[format_rational(x) for x in row] for row in L]},
                  _format_matrix(L), args.format, out)
            return 0

        if args.verb == "suite" or args.name == "suite":
            names = THEOREM_IDS
        elif args.name == "classical":
            names = ("mtt",)
        else:
            names = (args.name,)
        if args.name == "classical" and G is None:
            raise UsageError("the classical check needs --graph")
        reports = _run_checks(names, G, loaded, args)
        if args.format == "json":
            payload = [r.to_dict() for r in reports]
            if len(reports) == 1 and args.verb == "check" and args.name != "suite":
                payload = payload[0]
            _emit(payload, [], "json", out)
        else:
            lines = []
            for r in reports:
                lines.extend(_report_lines(r))
            if len(reports) > 1:
                failed = [r.theorem for r in reports if not r.passed]
                lines.append(f"{len(reports) - len(failed)}/{len(reports)} checks passed"
                             + (": failed " + ", ".join(failed) if failed else ""))
            _emit(None, lines, "text", out)
        return 0 if all(r.passed for r in reports) else 1

    except (UsageError, OSError, InstanceTooLarge, ZonoMTTError, ValueError) as exc:
        err.write(f"zonomtt: error: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
