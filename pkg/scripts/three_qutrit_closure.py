#!/usr/bin/env python3
"""Headline experiment: subspace controllability of three symmetric qutrits.

Closes the Lie algebra generated by the 8 local collective Gell-Mann
operators plus the symmetric two-body E3-E3 coupling, then reports the
per-block verdicts.  Expected: su(10) on the symmetric sector, su(8)
diagonally on the doubled adjoint block, a 1-dimensional center component,
total dimension 163.
"""

import argparse
import json
import time

from qsymlie import casimir, closure


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", default="qutrits:n=3:H",
                    choices=["qutrits:n=3:H", "qutrits:n=3:Sz2"])
    ap.add_argument("--out", default=None, help="also write the JSON report here")
    args = ap.parse_args()

    gens = closure.preset(args.preset)
    print(f"generators: {', '.join(gens.names)}")

    t0 = time.time()
    result = closure.lie_closure(gens)
    t_close = time.time() - t0
    print(f"closure: dim {result.dim}, {result.rounds} rounds, "
          f"saturated={result.saturated}, {t_close:.1f}s")

    blocks = casimir.isotypic_blocks(3, 3)
    cb = casimir.center_basis_from_blocks(blocks)
    report = closure.subspace_controllability(result, blocks, cb)

    print("\nlabel        irrep_dim  mult  restricted_dim  ok")
    for b in report.per_block:
        print(f"{str(b.label):>10}  {b.irrep_dim:>8} {b.multiplicity:>5}"
              f" {b.restricted_dim:>14}   {b.ok}")
    print(f"\ncenter component dim: {report.center_component_dim}")
    print(f"total dim:            {report.total_dim}")
    print(f"subspace controllable: {report.subspace_controllable}")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=2)
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
