"""Check the 3-CNF reduction on random formulas of growing size.

For each (n, m) cell, draws formulas, decides satisfiability by brute force
and elementariness of the literal set by subset sweep, and reports how
often each side held and whether they always matched.

    python3 scripts/reduction_sweep.py --max-vars 5 --per-cell 10
"""
import argparse
import random
import time

from elemsets.reduction import brute_force_sat, guarantee_violations, random_cnf, verify_reduction


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vars", type=int, default=5)
    ap.add_argument("--clauses", type=int, nargs="+", default=[2, 5, 10, 20])
    ap.add_argument("--per-cell", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--guarantees", action="store_true", help="also check the per-part guarantees")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mismatches = 0
    print(f"{'n':>3}{'m':>5}{'unsat':>8}{'agree':>8}{'seconds':>10}")
    for n in range(1, args.max_vars + 1):
        for m in args.clauses:
            start = time.perf_counter()
            unsat = agree = 0
            for _ in range(args.per_cell):
                cnf = random_cnf(n, m, rng)
                unsat += not brute_force_sat(cnf)
                ok = verify_reduction(cnf)
                if args.guarantees and n <= 4:
                    ok = ok and not guarantee_violations(cnf)
                agree += ok
            mismatches += args.per_cell - agree
            print(f"{n:>3}{m:>5}{unsat:>8}{agree:>8}{time.perf_counter() - start:>10.2f}")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
