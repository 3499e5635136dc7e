"""Run the randomized equivalence suite over every program family and print a table.

    python3 scripts/run_equivalence_suite.py --trials 200 --seed 0 [--json out.json]
"""
import argparse
import json
import time

from elemsets.oracle import PROPERTIES, GenParams, run_equivalence_suite

FAMILIES = ("nondisjunctive", "disjunctive", "hcf_only")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--atoms", type=int, default=6)
    ap.add_argument("--rules", type=int, default=12)
    ap.add_argument("--json", help="write all reports to this file")
    args = ap.parse_args()

    reports, failed = {}, False
    print(f"{'family':<16}{'property':<36}{'checked':>9}{'failed':>8}")
    for family in FAMILIES:
        params = GenParams(
            atom_count=args.atoms,
            rule_count=args.rules,
            allow_double_negation=family != "nondisjunctive",
            mode=family,
            seed=args.seed,
        )
        start = time.perf_counter()
        report = run_equivalence_suite(params, args.trials, include_fixtures=True)
        elapsed = time.perf_counter() - start
        for name in PROPERTIES:
            t = report.properties[name]
            print(f"{family:<16}{name:<36}{t.checked:>9}{t.failed:>8}")
        print(f"{family:<16}{report.programs} programs in {elapsed:.1f}s\n")
        if report.counterexample:
            c = report.counterexample
            print(f"counterexample ({c.property}): {c.detail}\n{c.program}")
        failed |= not report.passed
        reports[family] = report.to_dict()

    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
