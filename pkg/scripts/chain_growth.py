#!/usr/bin/env python3
"""Sizes of the cleared numerators r_j and of the bases G_j, step by step.

Useful for seeing where the cost of a proof goes.  Runs without stopping at
stabilization, for ``--steps`` steps.
"""
import argparse
import time

from dynseq.documents import catalog_identity
from dynseq.prover import build_difference_system, ideal_chain


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("identity")
    ap.add_argument("--steps", type=int, default=4)
    ap.add_argument("--order")
    args = ap.parse_args()

    lhs, rhs, opts = catalog_identity(args.identity)
    system, _ = build_difference_system(lhs, rhs)
    order = args.order or opts.get("order", "degrevlex")
    t0 = time.perf_counter()
    print(f"{args.identity}: {system.geo.dim} variables, order {order}")
    for step, _ in ideal_chain(system.geo, order, args.steps - 1, stop=False):
        print(f"  j={step.j:2d}  |r_j|={step.numerator_terms:6d}  |G_j|={step.basis_size:6d}  "
              f"member={step.member!s:5}  t={time.perf_counter() - t0:7.2f}s", flush=True)


if __name__ == "__main__":
    main()
