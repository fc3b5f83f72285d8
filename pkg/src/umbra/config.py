"""Truncation degrees and the suite runs behind the acceptance criteria."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

#: default truncation degree of one-variable series
SERIES_DEGREE = 8
#: default truncation degree for tensor series on a few sites
TENSOR_DEGREE = 6


def default_degree(fallback: int = SERIES_DEGREE) -> int:
    """Truncation degree, overridable through the ``UMBRA_DEGREE`` environment variable."""
    raw = os.environ.get("UMBRA_DEGREE")
    if raw is None or raw == "":
        return fallback
    value = int(raw)
    if value < 1:
        raise ValueError("UMBRA_DEGREE must be >= 1")
    return value


@dataclass(frozen=True)
class SuiteRun:
    """One identity suite at fixed parameters, tagged with the criterion it covers."""

    criterion: int
    suite: str
    params: dict = field(default_factory=dict)

    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.suite}({args})"


def _runs() -> tuple[SuiteRun, ...]:
    runs = [SuiteRun(1, "appendix", {"m": 2, "degree": 4, "instances": 50})]
    runs += [SuiteRun(2, "binomial", {"family": f, "m": m, "degree": 5})
             for f in ("falling", "rising", "abel", "laguerre-binomial") for m in (1, 2, 3)]
    runs += [SuiteRun(3, "basis", {"m": m, "degree": 5, "instances": 100}) for m in (2, 3)]
    runs.append(SuiteRun(4, "operators", {"m": 2, "degree": 4, "pairs": 50}))
    runs.append(SuiteRun(5, "falling", {"max_m": 3, "degree": 5, "choose_m": 5, "choose_n": 4}))
    runs.append(SuiteRun(6, "restriction", {"max_m": 3, "degree": 5}))
    runs += [SuiteRun(7, "sheffer", {"m": m, "degree": 5, "random_pairs": 2}) for m in (1, 2, 3)]
    runs.append(SuiteRun(8, "reductions", {"degree": 6}))
    runs.append(SuiteRun(9, "orthogonality", {"max_m": 2, "max_n": 3, "tau_n": 4}))
    runs += [SuiteRun(10, "combinatorial", {"m": m, "partition_n": 6, "permutation_n": 4, "seed": s})
             for m, s in ((3, 0), (1, 1), (2, 2))]
    return tuple(runs)


#: every suite run backing the acceptance criteria, at the stated sizes
ACCEPTANCE_RUNS = _runs()
