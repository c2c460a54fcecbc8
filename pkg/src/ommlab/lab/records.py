# -*- coding: utf-8 -*-
#
# records.py
#
# This file is part of ommlab.
#
# Copyright (C) 2026 The ommlab developers
#
# ommlab is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# ommlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with ommlab.  If not, see <http://www.gnu.org/licenses/>.

from dataclasses import asdict, dataclass, field
from typing import List, Optional


# column order of the record tables
RECORD_FIELDS = [
    "algorithm",
    "n",
    "k",
    "trial",
    "seed",
    "evals_first_pareto",
    "evals_full_coverage",
    "censored",
    "wall_ms",
]


@dataclass
class TrialRecord:
    """
    Outcome of one optimizer run. Evaluation counts are None when the
    milestone was not reached within the budget.
    """

    algorithm: str
    n: int
    k: int
    trial: int
    seed: int
    evals_first_pareto: Optional[int] = None
    evals_full_coverage: Optional[int] = None
    censored: bool = False
    wall_ms: Optional[float] = None

    def __post_init__(self):
        if (
            self.evals_first_pareto is not None
            and self.evals_full_coverage is not None
            and self.evals_first_pareto > self.evals_full_coverage
        ):
            raise ValueError(
                f"First Pareto point after full coverage "
                f"({self.evals_first_pareto} > {self.evals_full_coverage})"
            )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "TrialRecord":
        missing = [key for key in RECORD_FIELDS if key not in data]
        if missing:
            raise KeyError(f"Trial record misses the fields {missing}")
        return cls(**{key: data[key] for key in RECORD_FIELDS})


@dataclass
class ScalingFit:
    """
    Per-n statistics of evaluation counts normalized by a scaling law, with
    the ratio-stability verdict
    """

    algorithm: str
    law: str
    statistic: str
    n_values: List[int]
    means: List[float]
    variances: List[float]
    counts: List[int]
    ratio: float
    threshold: float
    passed: bool
    n_excluded: int = 0
    loglog_slope: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{self.algorithm} [{self.law}, {self.statistic}] "
            f"max/min = {self.ratio:.3f} (threshold {self.threshold}) {verdict}"
        )


@dataclass
class CheckResult:
    name: str
    scope: str
    passed: bool
    n_cases: int
    counterexample: Optional[str] = None


@dataclass
class VerificationReport:
    scope: str
    n_max: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data

    def __str__(self):
        lines = []
        for check in self.checks:
            status = "pass" if check.passed else "FAIL"
            line = f"[{status}] {check.scope}: {check.name} ({check.n_cases} cases)"
            if check.counterexample is not None:
                line += f"\n    counterexample: {check.counterexample}"
            lines.append(line)
        lines.append("all checks passed" if self.passed else "verification FAILED")
        return "\n".join(lines)
