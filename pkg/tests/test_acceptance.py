"""Acceptance criteria at their stated sizes, exact equality throughout.

Each test prints one PASS/FAIL line; the lines are also collected for the
terminal summary.
"""

import pytest

from umbra import verify
from umbra.config import ACCEPTANCE_RUNS

TITLES = {
    1: "reciprocal, inverse, associativity at m=2, N=4, 50 instances",
    2: "binomial identity, shift-invariance, expansion, generating function; 4 families, m<=3, n<=5",
    3: "basis change round trip on 100 polynomials of degree <= 5, m=2,3",
    4: "expansion, J multiplicativity, commutation, inversion on 50 pairs at N=4",
    5: "falling factorial routes m<=3, n<=5; choose on 0/1 configurations m<=5, n<=4",
    6: "box restriction equals the 1-D polynomial, m<=3, n<=5",
    7: "Sheffer identity, kappa inversion, lowering law; 3 named + 2 random, m<=3, n<=5",
    8: "Hermite, Charlier and Laguerre one-dimensional reductions",
    9: "exact-moment orthogonality j,n<=3, m<=2; tau moments n<=4",
    10: "partition sums n<=6, permutation sums n<=4",
}


def test_every_criterion_has_runs():
    assert {run.criterion for run in ACCEPTANCE_RUNS} == set(TITLES)


@pytest.mark.parametrize("k", sorted(TITLES), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(k, acceptance_log):
    reports = [verify.SUITES[run.suite](**run.params) for run in ACCEPTANCE_RUNS if run.criterion == k]
    ok = all(rep.passed for rep in reports)
    checks = sum(res.instances for rep in reports for res in rep.results)
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {TITLES[k]} ({checks} checks)"
    acceptance_log.append(line)
    print(line)
    failures = [ln for rep in reports for ln in rep.lines() if ln.startswith("FAIL")]
    assert ok, "\n".join(failures)
