#!/usr/bin/env python3
"""Run every catalog identity and print its ideal-chain table.

    python scripts/reproduce_chains.py            # all identities
    python scripts/reproduce_chains.py --skip somos4-eds-sign
    python scripts/reproduce_chains.py --compare-bases
"""
import argparse
import time

from dynseq.documents import CATALOG_IDENTITIES, catalog_identity
from dynseq.prover import ProverOptions, prove_equal


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", help="identities to run (default: all)")
    ap.add_argument("--skip", action="append", default=[])
    ap.add_argument("--compare-bases", action="store_true")
    args = ap.parse_args()

    names = args.names or [n for n in CATALOG_IDENTITIES if n not in args.skip]
    print(f"{'identity':24} {'order':10} {'verdict':12} {'n0':>3} {'time':>8}  basis sizes / membership")
    for name in names:
        lhs, rhs, opts = catalog_identity(name)
        if args.compare_bases:
            opts["compare_bases"] = True
        t0 = time.perf_counter()
        cert = prove_equal(lhs, rhs, ProverOptions(**opts))
        dt = time.perf_counter() - t0
        flags = "".join("T" if s.member else "." for s in cert.chain)
        n0 = "-" if cert.n0 is None else cert.n0
        print(f"{name:24} {cert.order:10} {cert.verdict.name:12} {n0:>3} {dt:7.2f}s  {cert.chain_basis_sizes} {flags}",
              flush=True)


if __name__ == "__main__":
    main()
