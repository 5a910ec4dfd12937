"""Run every acceptance workload and print one PASS/FAIL line each (plus failures)."""

import argparse
import json
import sys

from lpa import experiments as X


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", help="also write a JSON report here")
    args = ap.parse_args()
    report = []
    for run in X.ALL:
        out = run()
        print(out.line(), flush=True)
        for f in out.failures():
            print("    " + f)
        report.append({"name": out.name, "passed": out.passed, "seconds": out.seconds,
                       "checks": [{"label": l, "ok": ok, "observed": obs} for l, ok, obs in out.checks]})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2, default=str)
    return 0 if all(r["passed"] for r in report) else 1


if __name__ == "__main__":
    sys.exit(main())
