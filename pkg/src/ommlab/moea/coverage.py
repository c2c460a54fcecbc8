# -*- coding: utf-8 -*-
#
# coverage.py
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

import time
from typing import Optional

from ..core.onemaxmin import InvariantViolation
from ..lab.records import TrialRecord
from .engines import Engine, default_engine_budget


def run_to_coverage(
    engine: Engine,
    budget: Optional[int] = None,
    trial: int = 0,
    check_invariants: bool = True,
    record_wall_time: bool = False,
) -> TrialRecord:
    """
    Step an engine until the values of its population (the archive for
    MOEA/D) contain the whole Pareto front, or the evaluation budget does
    not allow another step.

    When the engine's configuration guarantees that reached front points
    survive, the set of covered front points is checked to never shrink.

    Parameters
    ----------
    engine: `Engine`
        A freshly constructed engine, its initial population counts toward
        the budget
    budget: int, optional
        Evaluation budget, defaults to `default_engine_budget`
    trial: int
        Trial index written to the record
    check_invariants: bool
        Check front-point survival after every step
    record_wall_time: bool
        Store the run time in the record

    Returns
    -------
    `TrialRecord`
        Censored when the budget ran out before full coverage
    """
    inst = engine.inst
    budget = default_engine_budget(engine) if budget is None else budget
    if budget < 1:
        raise ValueError(f"Budget must be at least 1, got {budget}")
    t_start = time.perf_counter()

    def front_values():
        return {value for value in engine.covered_values() if inst.is_pareto_value(value)}

    n_front = inst.k + 1
    covered = front_values()
    first_pareto = engine.n_evals if covered else None
    full_coverage = engine.n_evals if len(covered) == n_front else None

    while full_coverage is None and engine.n_evals + engine.evals_per_step <= budget:
        engine.step()
        now = front_values()
        if check_invariants and engine.keeps_front_points and not covered <= now:
            raise InvariantViolation(
                f"{engine.name} lost the front points {sorted(covered - now)} "
                f"after {engine.n_evals} evaluations on {inst}"
            )
        covered = now
        if first_pareto is None and covered:
            first_pareto = engine.n_evals
        if len(covered) == n_front:
            full_coverage = engine.n_evals

    wall_ms = (time.perf_counter() - t_start) * 1e3 if record_wall_time else None
    return TrialRecord(
        algorithm=engine.name,
        n=inst.n,
        k=inst.k,
        trial=trial,
        seed=engine.rng.seed,
        evals_first_pareto=first_pareto,
        evals_full_coverage=full_coverage,
        censored=full_coverage is None,
        wall_ms=wall_ms,
    )
