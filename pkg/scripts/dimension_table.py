#!/usr/bin/env python3
"""Print dimension tables for a weight scheme and an optional relator.

Without a relator: the free Lie ring dimensions per degree.  With one,
the ideal ranks, quotient dimensions, elementary divisors, and the
candidate series coefficients side by side.  Relators are Lie words in
the bracket grammar of the CLI, e.g. "[[x1,x2],x1]".

    python scripts/dimension_table.py --m 2 --n 1 --e 3 \
        --relator "[x1,x2]" --max-degree 8 [--dump-matrices DIR]
"""

import argparse
import sys
from pathlib import Path

from magnuslie import (WeightScheme, hilbert_crosscheck, ideal_component,
                       leading_lie_form, parse_word, torsion_free_certificate,
                       witt_dimensions)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--n", type=int, default=0)
    parser.add_argument("--e", type=int, default=1)
    parser.add_argument("--relator", default=None,
                        help="group word whose leading form is the relator")
    parser.add_argument("--max-degree", type=int, default=8)
    parser.add_argument("--dump-matrices", default=None,
                        help="write degree matrices as text files here")
    args = parser.parse_args()

    scheme = WeightScheme(args.m, args.n, args.e)
    cap = args.max_degree
    dims = witt_dimensions(scheme, cap)
    if args.relator is None:
        print(f"free Lie ring dimensions for scheme {scheme}:")
        for k, dim in enumerate(dims, 1):
            print(f"  degree {k}: {dim}")
        return 0

    word = parse_word(args.relator, scheme)
    degree, rho = leading_lie_form(word, scheme, cap)
    print(f"relator leading form at degree {degree}: {rho.to_text()}")
    cert = torsion_free_certificate(rho, cap, scheme)
    table = hilbert_crosscheck(cert)
    print(f"{'deg':>4} {'dimL':>6} {'rank':>6} {'dimQ':>6} "
          f"{'torsion':>12} {'candidate':>10} {'match':>6}")
    for report in cert.degrees:
        k = report.degree
        torsion = ",".join(str(v) for v in report.torsion) or "none"
        print(f"{k:>4} {report.dim_free:>6} {report.rank:>6} "
              f"{report.dim_quotient:>6} {torsion:>12} "
              f"{table.candidate[k]:>10} {str(table.matches[k]):>6}")
    print(f"torsion-free up to degree {len(cert.degrees)}: {cert.torsion_free}")
    print(f"series cross-check: {table.formula_status}")

    if args.dump_matrices:
        out_dir = Path(args.dump_matrices)
        out_dir.mkdir(parents=True, exist_ok=True)
        for n in range(degree, cap + 1):
            component = ideal_component(rho, n, scheme)
            path = out_dir / f"ideal_degree_{n}.txt"
            path.write_text(component.matrix_text() + "\n")
            print(f"wrote {path} ({len(component.matrix)} rows)")
    return 0 if cert.torsion_free else 2


if __name__ == "__main__":
    sys.exit(main())
