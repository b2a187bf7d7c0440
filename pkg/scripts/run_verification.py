"""Run the full seeded verification and print failures grouped by check.

    python3 scripts/run_verification.py --seed 42 --count 1000 --workers 4
"""

import argparse
import collections
import time

from lehmus.harness import SampleConfig, run_full_suite


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--shape", default="any")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json")
    args = p.parse_args()

    cfg = SampleConfig(seed=args.seed, count=args.count, shape=args.shape)
    start = time.perf_counter()
    report = run_full_suite(cfg, workers=args.workers)
    elapsed = time.perf_counter() - start

    per_check = collections.Counter(r.check_id for r in report.records)
    failed = collections.Counter(r.check_id for r in report.failures)
    for check_id in sorted(per_check):
        if check_id.startswith("logic."):
            continue
        print(f"{check_id:28s} {per_check[check_id]:6d} run  {failed[check_id]:4d} failed")
    s = report.summary()
    print(f"\n{s['total']} checks, {s['failed']} failed, {elapsed:.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())


if __name__ == "__main__":
    main()
