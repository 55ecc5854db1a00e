#!/usr/bin/env python3
"""Sweep the example corpus over several characteristics, comparing the
combinatorial classifier with the homological oracle, and print a summary
table plus any disagreements.

Usage: python3 scripts/run_corpus.py [--seed N] [--cap N] [--chars 0,2,3,5]
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from eicat.algebra import algebra_from_category
from eicat.category import presentation_of
from eicat.classify import classify
from eicat.families import corpus
from eicat.homology import global_dimension, is_gorenstein_oracle
from eicat.linalg import Field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cap", type=int, default=8)
    ap.add_argument("--chars", default="0,2,3,5")
    args = ap.parse_args()
    chars = [int(c) for c in args.chars.split(",")]

    rows = []
    disagreements = []
    t0 = time.time()
    for name, c in corpus(args.seed):
        p = presentation_of(c)
        for ch in chars:
            f = Field(ch)
            report = classify(c, f)
            alg = algebra_from_category(p.category, f)
            verdict = is_gorenstein_oracle(alg, args.cap)
            gldim = global_dimension(alg, args.cap)
            agrees = report.gorenstein == verdict.gorenstein
            if not agrees:
                disagreements.append((name, ch, report, verdict))
            rows.append((name, ch, alg.dim, report.free, report.gorenstein,
                         report.one_gorenstein, report.hereditary,
                         verdict.left.value, verdict.right.value, gldim.value,
                         "ok" if agrees else "MISMATCH"))
    elapsed = time.time() - t0

    hdr = ("instance", "char", "dim", "free", "gor", "1gor", "her",
           "id_l", "id_r", "gldim", "check")
    widths = [max(len(str(r[i])) for r in rows + [hdr]) for i in range(len(hdr))]
    for r in [hdr] + rows:
        print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))
    print(f"\n{len(rows)} runs in {elapsed:.1f}s; "
          f"{len(disagreements)} disagreement(s)")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
