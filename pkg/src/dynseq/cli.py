"""Command-line front end: ``dynseq eval | prove | gb``.

Exit codes: 0 proved (or success), 1 refuted, 2 aborted, 3 input error.
"""
import argparse
import sys

from .documents import load_identity, load_system
from .errors import DynSeqError, Indeterminacy
from .prover import (
    ProverOptions,
    build_difference_system,
    certificate_render,
    ideal_chain,
    prove_zero,
)
from .sequences import seq_eval

EXIT_PROVED, EXIT_REFUTED, EXIT_ABORTED, EXIT_INPUT = 0, 1, 2, 3


def _fmt(field, v):
    return field.to_str(v)


def cmd_eval(args, out):
    seq = load_system(args.system)
    try:
        vals = seq_eval(seq, args.n)
    except Indeterminacy as exc:
        print(f"error: orbit hits an indeterminacy at n={exc.index}", file=sys.stderr)
        return EXIT_ABORTED
    for v in vals:
        print(_fmt(seq.field, v), file=out)
    return 0


def _options(doc_opts, args):
    opts = dict(doc_opts)
    for key in ("order", "max_steps", "extra_check_terms"):
        val = getattr(args, key, None)
        if val is not None:
            opts[key] = val
    if getattr(args, "compare_bases", False):
        opts["compare_bases"] = True
    return ProverOptions(**opts)


def cmd_prove(args, out):
    lhs, rhs, doc_opts = load_identity(args.identity)
    opts = _options(doc_opts, args)
    system, _ = build_difference_system(lhs, rhs)
    cert = prove_zero(system, opts)
    print(certificate_render(cert, "json" if args.json else "human"), file=out)
    return cert.exit_code


def cmd_gb(args, out):
    lhs, rhs, doc_opts = load_identity(args.identity)
    opts = _options(doc_opts, args)
    system, _ = build_difference_system(lhs, rhs)
    print(f"order: {opts.order}", file=out)
    for step, _ in ideal_chain(system.geo, opts.order, args.steps - 1, opts.compare_bases, stop=False):
        print(
            f"j={step.j} numerator_terms={step.numerator_terms} member={step.member} basis_size={step.basis_size}",
            file=out,
            flush=True,
        )
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="dynseq", description="Dynamical sequences and automatic identity proofs.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="print a(0..n) exactly, one term per line")
    e.add_argument("system", help="catalog:NAME, a JSON system file, or a combinator expression")
    e.add_argument("--n", type=int, required=True, help="last index to print")
    e.set_defaults(func=cmd_eval)

    def prover_flags(q):
        q.add_argument("--order", choices=["lex", "degrevlex"])
        q.add_argument("--max-steps", type=int, dest="max_steps")
        q.add_argument("--extra-check-terms", type=int, dest="extra_check_terms")
        q.add_argument("--compare-bases", action="store_true", dest="compare_bases",
                       help="detect stabilization by comparing reduced bases")

    pr = sub.add_parser("prove", help="decide an identity a(n) = b(n)")
    pr.add_argument("identity", help="catalog:NAME or a JSON identity file")
    prover_flags(pr)
    pr.add_argument("--json", action="store_true", help="structured certificate")
    pr.set_defaults(func=cmd_prove)

    g = sub.add_parser("gb", help="show the ideal chain step by step")
    g.add_argument("identity", help="catalog:NAME or a JSON identity file")
    g.add_argument("--steps", type=int, required=True)
    prover_flags(g)
    g.set_defaults(func=cmd_gb)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args, out)
    except (DynSeqError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
