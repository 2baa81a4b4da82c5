"""Command-line front end with stable JSON output.

Exit codes: 0 success, 1 audit found failures, 2 invalid rank, 3 parameter
count mismatch, 4 zero parameter, 5 parse error, 6 singular or non-det-1
input matrix.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audit, flag, linalg, richardson, weyl
from .errors import (
    ParamCountMismatch, RankTooLarge, Singular, TnnError, ZeroParameter,
)

EXIT_AUDIT_FAILURES = 1
EXIT_BAD_RANK = 2
EXIT_PARAM_COUNT = 3
EXIT_ZERO_PARAM = 4
EXIT_PARSE = 5
EXIT_SINGULAR = 6


def _check_rank(n: int) -> None:
    if not 2 <= n <= weyl.max_rank():
        raise RankTooLarge(f"n must be in 2..{weyl.max_rank()}, got {n}")


def _parse_perm(n: int, text: str, fmt: str) -> weyl.Perm:
    if fmt == "word":
        letters = [int(tok.lstrip("s")) for tok in text.replace(",", " ").split()]
        return weyl.word_to_perm(n, letters)
    w = weyl.perm_from_str(text)
    if len(w) != n:
        raise ValueError(f"permutation {text!r} is not of rank {n}")
    return w


def _parse_params(text: str) -> list:
    if not text.strip():
        return []
    return [linalg.rat(tok.strip()) for tok in text.split(",")]


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_cells(args) -> int:
    _check_rank(args.n)
    cells = []
    top_dim = 0
    for w, wp in weyl.bruhat_pairs(args.n):
        chart = richardson.build_chart(w, wp, args.word_strategy)
        if chart.dim > top_dim:
            top_dim = chart.dim
        cells.append({
            "w": weyl.perm_to_str(w),
            "wp": weyl.perm_to_str(wp),
            "dim": chart.dim,
            "shape": _chart_shape(chart),
        })
    payload = {
        "n": args.n,
        "cells": cells,
        "count": len(cells),
        "top_dimensional_cells": sum(1 for c in cells if c["dim"] == top_dim),
    }
    _emit(args, payload)
    return 0


def _chart_shape(chart: richardson.Chart) -> str:
    parts = []
    node = chart
    while node is not None:
        if node.kind == "base":
            parts.append("base")
        elif node.kind == "peel":
            parts.append(f"peel({weyl.perm_to_str(node.v)})")
        else:
            parts.append(f"extend(s{node.s_index})")
        node = node.inner
    return " -> ".join(parts)


def cmd_eval(args) -> int:
    _check_rank(args.n)
    w = _parse_perm(args.n, args.w, args.format)
    wp = _parse_perm(args.n, args.wp, args.format)
    chart = richardson.build_chart(w, wp, args.word_strategy)
    params = _parse_params(args.params)
    b = richardson.eval_chart(chart, params)
    payload = {
        "n": args.n,
        "w": weyl.perm_to_str(w),
        "wp": weyl.perm_to_str(wp),
        "params": [linalg.rat_to_str(p) for p in params],
        "borel_rep": linalg.mat_to_json(b.rep),
        "stratum": flag.stratum(b).to_json(),
    }
    _emit(args, payload)
    return 0


def cmd_classify(args) -> int:
    if args.matrix_file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.matrix_file) as fh:
            raw = fh.read()
    rows = json.loads(raw)
    if isinstance(rows, dict):
        rows = rows.get("borel_rep", rows)
    g = linalg.mat_from_json(rows)
    b = flag.borel_from(g)
    result = richardson.classify(b, args.word_strategy)
    _emit(args, result.to_json())
    return 0


def cmd_audit(args) -> int:
    _check_rank(args.n)
    decomposition = audit.audit_decomposition(args.n, args.samples, args.seed)
    semigroup = audit.audit_semigroup(args.n, args.samples, args.seed)
    payload = {
        "decomposition": decomposition.to_json(),
        "semigroup": semigroup.to_json(),
    }
    _emit(args, payload)
    failures = decomposition.failures or semigroup.failures
    return EXIT_AUDIT_FAILURES if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tnnflag",
        description="Exact cell decomposition of the TNN flag variety of SL_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", default="-", help="output path, '-' for stdout")
        p.add_argument("--word-strategy", dest="word_strategy",
                       choices=list(weyl.STRATEGIES), default=weyl.SMALLEST)

    p = sub.add_parser("cells", help="list all cells with chart summaries")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("eval", help="evaluate a chart on given parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--wp", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--format", choices=["oneline", "word"], default="oneline")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="classify a det-1 rational matrix's flag")
    p.add_argument("matrix_file", help="JSON matrix file, '-' for stdin")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("audit", help="run the decomposition and semigroup audits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RankTooLarge as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_RANK
    except ParamCountMismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARAM_COUNT
    except ZeroParameter as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ZERO_PARAM
    except Singular as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SINGULAR
    except (json.JSONDecodeError, ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except TnnError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
