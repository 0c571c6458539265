"""Command line interface.

Subcommands: solve, ctww, reduce, oracle, bench, gen.  Exit codes:
0 success, 2 validation error (bad files, bad arguments, malformed
sequences), 3 capability error (pre-morphism/algorithm mismatch).
"""

from __future__ import annotations

import argparse
import sys

from . import io as formats
from .bench import PlanError, bench
from .families import FAMILY_NAMES, family
from .graphs import (GraphTooLargeError, InvalidPartitionError,
                     SequenceValidationError, ctww_exact, validate_sequence)
from .morphisms import HOM
from .oracle import EnumerationCapError, solve_brute
from .reductions import csp_to_morphism, morphism_to_csp
from .semirings import (CapabilityError, WeightDomainError, format_value,
                        premorphism, premorphism_catalog)
from .solver_fine import solve_fine
from .solver_fpt import solve_fpt

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAPABILITY = 3


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_relation(args, G, H):
    if args.relation:
        R = formats.parse_rel(_read(args.relation))
    else:
        if G.alphabet_size != 2 or H.alphabet_size != 2:
            raise ValueError("--relation is required unless both graphs "
                             "use the 2-letter alphabet (HOM default)")
        R = HOM
    return R


def _load_weights(args, pm):
    if not pm.uses_weights:
        return None
    if not args.weights:
        raise WeightDomainError(
            f"pre-morphism {pm.name!r} requires --weights")
    return formats.parse_wt(_read(args.weights))


def _cmd_solve(args):
    G = formats.parse_elg(_read(args.instance))
    H = formats.parse_elg(_read(args.template))
    R = _load_relation(args, G, H)
    pm = premorphism(args.pm)
    W = _load_weights(args, pm)
    if args.algo == "brute":
        value = format_value(solve_brute(G, H, R, pm, W))
        print(f"value {value}")
        return
    base = H if args.algo == "fine" else G
    if args.seq:
        seq = validate_sequence(base, formats.parse_seq(_read(args.seq)))
    else:
        seq = ctww_exact(base)[1]
    if args.algo == "fine":
        run = solve_fine(G, H, R, seq, pm, W)
    else:
        run = solve_fpt(G, seq, H, R, pm, W)
    print(f"value {format_value(run.value)}")
    print(f"op_count {run.op_count}")
    print(f"seq_width {seq.width}")


def _cmd_ctww(args):
    H = formats.parse_elg(_read(args.graph))
    result = ctww_exact(H, budget=args.budget,
                        max_vertices=args.max_vertices)
    if result is None:
        print(f"no sequence of width <= {args.budget}")
        return
    width, seq = result
    print(f"width {width}")
    if args.seq_out:
        _write(args.seq_out, formats.emit_seq(list(seq.merges)))
    else:
        sys.stdout.write(formats.emit_seq(list(seq.merges)))


def _cmd_reduce(args):
    if args.direction == "csp2mor":
        inst = formats.parse_csp(_read(args.csp))
        H, R, G, _ = csp_to_morphism(inst)
        _write(args.template, formats.emit_elg(H))
        _write(args.instance, formats.emit_elg(G))
        _write(args.rel, formats.emit_rel(R))
    else:
        H = formats.parse_elg(_read(args.template))
        G = formats.parse_elg(_read(args.instance))
        R = formats.parse_rel(_read(args.rel))
        inst = morphism_to_csp(H, R, G)
        _write(args.csp, formats.emit_csp(inst))


def _cmd_oracle(args):
    G = formats.parse_elg(_read(args.instance))
    H = formats.parse_elg(_read(args.template))
    R = _load_relation(args, G, H)
    pm = premorphism(args.pm)
    W = _load_weights(args, pm)
    print(f"value {format_value(solve_brute(G, H, R, pm, W))}")


def _cmd_bench(args):
    csv_text = bench(_read(args.plan), max_workers=args.workers)
    if args.out:
        _write(args.out, csv_text)
    else:
        sys.stdout.write(csv_text)


def _cmd_gen(args):
    G, merges = family(args.family, args.n, seed=args.seed, p=args.p)
    _write(args.out, formats.emit_elg(G))
    if args.seq_out:
        if merges is None:
            raise ValueError(
                f"family {args.family!r} has no canonical sequence")
        _write(args.seq_out, formats.emit_seq(merges))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ctwcsp",
        description="Contraction-sequence DP solvers for generalized "
                    "binary CSPs.")
    sub = parser.add_subparsers(dest="command", required=True)
    pm_names = sorted({pm.name for pm in premorphism_catalog()})

    p = sub.add_parser("solve", help="run a solver on graph files")
    p.add_argument("--algo", choices=("fine", "fpt", "brute"),
                   required=True)
    p.add_argument("--instance", required=True, help="source graph (ELG)")
    p.add_argument("--template", required=True, help="target graph (ELG)")
    p.add_argument("--relation", help="REL file (default HOM for "
                                      "2-letter graphs)")
    p.add_argument("--seq", help="SEQ file (template side for fine, "
                                 "instance side for fpt); computed "
                                 "exactly when omitted")
    p.add_argument("--pm", required=True, choices=pm_names)
    p.add_argument("--weights", help="WT file when the pre-morphism "
                                     "uses weights")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("ctww", help="exact component twin-width")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--max-vertices", type=int, default=13)
    p.add_argument("--seq-out", help="write the optimal sequence here "
                                     "instead of stdout")
    p.set_defaults(func=_cmd_ctww)

    p = sub.add_parser("reduce", help="translate CSP <-> morphism files")
    p.add_argument("--direction", choices=("csp2mor", "mor2csp"),
                   required=True)
    p.add_argument("--csp", required=True)
    p.add_argument("--template", required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--rel", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force reference value")
    p.add_argument("--instance", required=True)
    p.add_argument("--template", required=True)
    p.add_argument("--relation")
    p.add_argument("--pm", required=True, choices=pm_names)
    p.add_argument("--weights")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="run a plan file to a CSV report")
    p.add_argument("--plan", required=True)
    p.add_argument("--out", help="CSV path (stdout when omitted)")
    p.add_argument("--workers", type=int, default=4)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("gen", help="generate a named family graph")
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--out", required=True)
    p.add_argument("--seq-out")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (formats.FormatError, PlanError, SequenceValidationError,
            InvalidPartitionError, GraphTooLargeError, EnumerationCapError,
            WeightDomainError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
