#!/usr/bin/env python3
"""Print the first terms of every catalog system."""
import argparse

from dynseq.documents import CATALOG_SYSTEMS, catalog_system
from dynseq.sequences import seq_eval


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10, help="last index")
    args = ap.parse_args()
    for name, doc in CATALOG_SYSTEMS.items():
        seq = catalog_system(name)
        vals = seq_eval(seq, args.n)
        print(f"{name}: {doc.get('description', '')}")
        print("   ", ", ".join(seq.field.to_str(v) for v in vals))


if __name__ == "__main__":
    main()
