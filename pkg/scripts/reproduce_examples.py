"""Reproduce the worked examples (degenerate / non-full reps and the Pi(V) figures)."""

from lpa.cli import repro_checks


def main():
    checks = repro_checks()
    for label, ok, observed in checks:
        print(("ok   " if ok else "FAIL ") + label + ("" if ok else f"  observed {observed}"))
    return 0 if all(ok for _, ok, _ in checks) else 1


if __name__ == "__main__":
    raise SystemExit(main())
