"""Acceptance criteria: each workload prints a PASS/FAIL line and asserts every check.

Tolerances are exact (all arithmetic is exact); runtime limits are part of the check.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from lpa import experiments as X

CRITERIA = [
    ("1 worked examples", X.run_worked_examples),
    ("2 Leavitt relations", X.run_relation_suite),
    ("3 oracle equivalence", X.run_oracle_equivalence),
    ("4 functor calculus", X.run_functor_properties),
    ("5 Chen grid", X.run_chen_grid),
    ("6 moduli probes", X.run_moduli_probes),
    ("7 not-in-S chains", X.run_not_in_S),
]


@pytest.mark.parametrize("label,run", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, run):
    out = run()
    line = f"criterion {label.split()[0]} {out.line()}"
    print(line)
    for failure in out.failures():
        print("    " + failure)
    ACCEPTANCE_LINES.append(line)
    ACCEPTANCE_LINES.extend("    " + f for f in out.failures())
    assert out.passed, "; ".join(out.failures())
