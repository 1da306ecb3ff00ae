"""Command-line interface.

Every subcommand takes the ambient shape as --k and --n, reads partitions,
plane partitions, and arc matrices in the same text formats the library
parses, and writes either line-oriented plain text (default) or a single
JSON document (--json).  Exact rationals are always rendered as "p/q".

Exit codes: 0 on success, 2 for invalid input, 3 when a computation runs
out of series precision, 4 for internal invariant violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import nash
from .lct import arnold_witness
from .networks import generic_arc, plucker_ord
from .partitions import (
    GrassmannShape,
    all_partitions,
    format_partition,
    parse_multi_index,
    parse_partition,
    singular_components,
)
from .plane_partitions import (
    Infinity,
    essential_profile,
    format_ext,
    format_ext_matrix,
    format_plane_partition,
    ord_schubert,
    parse_plane_partition,
)
from .series import (
    NotInBigCell,
    PrecisionExceeded,
    borel_translate,
    format_arc_matrix,
    invariant_factor_profile,
    parse_arc_matrix,
)


def _frac(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _frac_matrix(matrix) -> str:
    return "; ".join(" ".join(_frac(e) for e in row) for row in matrix)


def _ext_json(value):
    return format_ext(value) if isinstance(value, Infinity) else value


def _shape(args) -> GrassmannShape:
    return GrassmannShape(args.k, args.n)


def cmd_lct(args):
    shape = _shape(args)
    lam = parse_partition(args.lam, shape)
    arnold, vertex = arnold_witness(lam)
    payload = {
        "k": shape.k,
        "n": shape.n,
        "lambda": format_partition(lam),
        "lct": _frac(1 / arnold),
        "arnold": _frac(arnold),
        "witness": [[_frac(e) for e in row] for row in vertex],
    }
    plain = [
        f"lct: {payload['lct']}",
        f"arnold: {payload['arnold']}",
        f"witness: {_frac_matrix(vertex)}",
    ]
    return payload, plain


def cmd_lct_table(args):
    shape = _shape(args)
    rows = []
    plain = []
    for lam in all_partitions(shape):
        arnold, vertex = arnold_witness(lam)
        value = _frac(1 / arnold)
        rows.append(
            {
                "lambda": format_partition(lam),
                "lct": value,
                "witness": [[_frac(e) for e in row] for row in vertex],
            }
        )
        plain.append(f"{format_partition(lam)}: lct {value}")
    return {"k": shape.k, "n": shape.n, "rows": rows}, plain


def cmd_profile(args):
    shape = _shape(args)
    arc = parse_arc_matrix(args.arc, args.prec)
    if (arc.nrows, arc.ncols) != (shape.k, shape.n):
        raise ValueError(
            f"arc matrix is {arc.nrows} x {arc.ncols}, expected {shape.k} x {shape.n}"
        )
    translated = False
    try:
        beta = invariant_factor_profile(arc)
    except NotInBigCell:
        arc = borel_translate(arc, seed=args.seed if args.seed is not None else 0)
        beta = invariant_factor_profile(arc)
        translated = True
    alpha = essential_profile(beta)
    payload = {
        "beta": format_plane_partition(beta),
        "alpha": format_ext_matrix(alpha),
        "codim": _ext_json(beta.volume),
        "translated": translated,
    }
    plain = [
        f"beta: {payload['beta']}",
        f"alpha: {payload['alpha']}",
        f"codim: {format_ext(beta.volume)}",
    ]
    if translated:
        plain.append("translated: true")
    return payload, plain


def cmd_order(args):
    shape = _shape(args)
    beta = parse_plane_partition(args.beta, shape)
    if args.lam is not None:
        lam = parse_partition(args.lam, shape)
        value = ord_schubert(beta, lam)
    else:
        entries = parse_multi_index(args.plucker, shape)
        value = plucker_ord(beta, entries)
    return {"order": _ext_json(value)}, [f"order: {format_ext(value)}"]


def cmd_nash_compare(args):
    shape = _shape(args)
    beta = parse_plane_partition(args.beta, shape)
    beta2 = parse_plane_partition(args.beta2, shape)
    verdict = nash.compare(beta, beta2)
    payload = {"relation": verdict.relation, "witness": verdict.witness}
    return payload, [f"relation: {verdict.relation}", f"witness: {verdict.witness}"]


def cmd_codim(args):
    shape = _shape(args)
    beta = parse_plane_partition(args.beta, shape)
    if not beta.is_finite:
        value = nash.codim(beta)
        return {"codim": _ext_json(value)}, [f"codim: {format_ext(value)}"]
    volume, q, k = nash.discrepancy_data(beta)
    payload = {"codim": volume, "multiplicity (computed)": q, "discrepancy": k}
    plain = [
        f"codim: {volume}",
        f"multiplicity (computed): {q}",
        f"discrepancy: {k}",
    ]
    return payload, plain


def cmd_chain(args):
    shape = _shape(args)
    beta = parse_plane_partition(args.beta, shape)
    chain = nash.codim_chain(beta)
    payload = {
        "length": len(chain) - 1,
        "index_of_beta": chain.index(beta),
        "chain": [format_plane_partition(step) for step in chain],
    }
    return payload, payload["chain"]


def cmd_nash_valuations(args):
    shape = _shape(args)
    lam = parse_partition(args.lam, shape)
    valuations = nash.nash_valuations(lam)
    formatted = [format_plane_partition(v) for v in valuations]
    return {"valuations": formatted}, [f"valuations: {len(formatted)}"] + formatted


def cmd_sing(args):
    shape = _shape(args)
    lam = parse_partition(args.lam, shape)
    components = singular_components(lam)
    valuations = nash.nash_valuations(lam) if lam else []
    payload = {
        "smooth": not components,
        "components": [format_partition(mu) for mu in components],
        "valuations": [format_plane_partition(v) for v in valuations],
    }
    plain = [f"smooth: {'true' if payload['smooth'] else 'false'}"]
    for mu, v in zip(payload["components"], payload["valuations"]):
        plain.append(f"component: {mu}")
        plain.append(f"valuation: {v}")
    return payload, plain


def cmd_generic_arc(args):
    shape = _shape(args)
    beta = parse_plane_partition(args.beta, shape)
    arc = generic_arc(beta, precision=args.prec, seed=args.seed)
    text = format_arc_matrix(arc)
    return {"arc": text, "precision": args.prec}, [text]


def _add_subcommand(subparsers, name, handler, help_text, *flags):
    sub = subparsers.add_parser(name, help=help_text)
    sub.add_argument("--k", type=int, required=True, help="number of rows k")
    sub.add_argument("--n", type=int, required=True, help="ambient dimension n")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit one JSON document")
    group.add_argument("--plain", action="store_true", help="emit plain text (default)")
    for flag in flags:
        if flag == "lambda":
            sub.add_argument("--lambda", dest="lam", required=True, metavar="PARTS",
                             help='partition, e.g. "3,1,1" (empty for the empty one)')
        elif flag == "beta":
            sub.add_argument("--beta", required=True, metavar="MATRIX",
                             help='plane partition, e.g. "2 2; 2 1" (inf allowed)')
        elif flag == "beta2":
            sub.add_argument("--beta2", required=True, metavar="MATRIX",
                             help="second plane partition")
        elif flag == "arc":
            sub.add_argument("--arc", required=True, metavar="MATRIX",
                             help='arc matrix, e.g. "t^2, 0, 0, 1; 0, t, 1, 0"')
        elif flag == "prec":
            sub.add_argument("--prec", type=int, default=16,
                             help="series precision (default 16)")
        elif flag == "seed":
            sub.add_argument("--seed", type=int, default=None,
                             help="seed for randomized unit coefficients")
        elif flag == "order-source":
            pick = sub.add_mutually_exclusive_group(required=True)
            pick.add_argument("--lambda", dest="lam", default=None, metavar="PARTS",
                              help="order of contact with this Schubert variety")
            pick.add_argument("--plucker", default=None, metavar="INDEX",
                              help='order of this Pluecker coordinate, e.g. "[1,3]"')
    sub.set_defaults(handler=handler)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-arcs",
        description="Singularity invariants of Schubert varieties via arc spaces.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_subcommand(subparsers, "lct", cmd_lct,
                    "log canonical threshold of a Schubert pair", "lambda")
    _add_subcommand(subparsers, "arnold", cmd_lct,
                    "Arnold multiplicity of a Schubert pair", "lambda")
    _add_subcommand(subparsers, "lct-table", cmd_lct_table,
                    "thresholds of every Schubert variety of the shape")
    _add_subcommand(subparsers, "profile", cmd_profile,
                    "invariant factor profile of a concrete arc", "arc", "prec", "seed")
    _add_subcommand(subparsers, "order", cmd_order,
                    "contact order of a stratum with a variety or coordinate",
                    "beta", "order-source")
    _add_subcommand(subparsers, "nash-compare", cmd_nash_compare,
                    "containment verdict between two stratum closures",
                    "beta", "beta2")
    _add_subcommand(subparsers, "codim", cmd_codim,
                    "codimension, multiplicity, and discrepancy of a stratum", "beta")
    _add_subcommand(subparsers, "chain", cmd_chain,
                    "one-box chain through the plane partition", "beta")
    _add_subcommand(subparsers, "nash-valuations", cmd_nash_valuations,
                    "Nash valuations of a Schubert variety", "lambda")
    _add_subcommand(subparsers, "sing", cmd_sing,
                    "singular locus components and Nash valuations", "lambda")
    _add_subcommand(subparsers, "generic-arc", cmd_generic_arc,
                    "a concrete arc generic for a stratum", "beta", "prec", "seed")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, plain = args.handler(args)
    except PrecisionExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(plain))
    return 0


if __name__ == "__main__":
    sys.exit(main())
