"""Classify tangent-bundle positivity over the bounded surface census.

    python scripts/run_census.py --max-rays 7 --max-abs-d 3
"""
import argparse

from toricample.splitting import Verdict
from toricample.theorem import census, verify_theorem


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rays", type=int, default=7)
    ap.add_argument("--max-abs-d", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    table = census(args.max_rays, args.max_abs_d, args.workers)
    print(f"{'code':<32} {'rays':>4}  verdict")
    for row in table.rows:
        print(f"{str(list(row.code)):<32} {len(row.fan.rays):>4}  {row.classification.verdict.value}")
    print()
    for verdict, count in table.summary.items():
        print(f"{verdict:<12} {count}")
    for row in table.rows:
        if row.classification.verdict is Verdict.AMPLE:
            rep = verify_theorem(row.fan)
            print(f"ample entry {list(row.code)}: is_pn={rep.is_pn} "
                  f"simplex={rep.polytope_checks.simplex} verdict={'pass' if rep.passed else 'fail'}")


if __name__ == "__main__":
    main()
