# -*- coding: utf-8 -*-
#
# singlesolution.py
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

import numpy as np

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from ..factorydefaults import SolverParams
from ..core.bitstrings import (
    BitString,
    RngStream,
    one_bit_mutation,
    standard_bitwise_mutation,
    random_bitstring,
)
from ..core.onemaxmin import (
    CoverageReport,
    EvaluationCounter,
    InvariantViolation,
    ObjectivePair,
    ProblemInstance,
)
from ..reformulations.optimalsets import OptimalSetDescriptor
from ..reformulations.scalarization import ScalarizationSpec, scalarize_value
from ..reformulations.penalties import (
    EXTERIOR,
    PenaltySpec,
    RationalLike,
    coverage_schedule,
    exterior_optima,
    penalty_is_proper,
    penalty_of_value,
)


def default_budget(inst: ProblemInstance, params: Optional[SolverParams] = None) -> int:
    """Evaluation budget of a single scalar run, mult * n * ln(n)"""
    params = SolverParams() if params is None else params
    return max(
        params.min_budget,
        int(math.ceil(params.budget_multiplier * inst.n * math.log(inst.n))),
    )


class ScalarProblem:
    """
    Single-objective view of an instance, maximizing `fitness(f(x))`.

    Every call to `evaluate` makes exactly one counted evaluation of the
    instance and returns the fitness together with the objective pair, so
    that target checks need no further evaluations.

    Parameters
    ----------
    inst: `ProblemInstance`
    fitness: callable
        Maps an `ObjectivePair` to a comparable scalar, larger is better
    name: str
        Short description used in reports
    """

    def __init__(
        self,
        inst: ProblemInstance,
        fitness: Callable[[ObjectivePair], object],
        name: str = "",
    ):
        self.inst = inst
        self.fitness = fitness
        self.name = name
        self.counter = EvaluationCounter(inst)
        self.penalty_spec = None

    @classmethod
    def from_scalarization(cls, spec: ScalarizationSpec) -> "ScalarProblem":
        return cls(
            spec.inst,
            lambda value: scalarize_value(spec, value),
            name=f"weighted sum w={spec.w}",
        )

    @classmethod
    def from_penalty(cls, spec: PenaltySpec) -> "ScalarProblem":
        problem = cls(
            spec.inst,
            lambda value: penalty_of_value(spec, value),
            name=f"{spec.mode} penalty eps={spec.eps} r={spec.r}",
        )
        problem.penalty_spec = spec
        return problem

    @property
    def n_evals(self) -> int:
        return self.counter.n_evals

    def evaluate(self, x: BitString) -> Tuple[object, ObjectivePair]:
        value = self.counter(x)
        return self.fitness(value), value


@dataclass
class SolverRun:
    solution: BitString
    value: ObjectivePair
    fitness: object
    evaluations: int
    hit_optimum: bool
    # evaluation count at which the current solution first was Pareto optimal
    first_pareto_eval: Optional[int] = None
    # (evaluation index, fitness) at every strict improvement
    trajectory: Optional[List[Tuple[int, object]]] = None


class PenaltySurvivalMonitor:
    """
    Live check of the one-bit moves RLS accepts on a properly penalized
    problem, r > 1 / (eps + 1 - ceil(eps)).

    From an infeasible parent only a 0 in the first n-k positions or a 1 in
    the last k positions may flip. From a feasible parent the offspring is
    feasible and flips a 0 in the first n-k positions, or a 0 in the last k
    positions when the parent has f2 >= ceil(eps) + 1.

    Inactive for other specs.
    """

    def __init__(self, spec: PenaltySpec):
        self.spec = spec
        self.active = spec.mode == EXTERIOR and bool(penalty_is_proper(spec.eps, spec.r))
        self.n_checked = 0
        self._ceil = spec.eps_ceil
        self._split = spec.inst.n - spec.inst.k

    def check(
        self,
        parent: BitString,
        parent_value: ObjectivePair,
        child: BitString,
        child_value: ObjectivePair,
    ):
        if not self.active:
            return
        diff = np.flatnonzero(parent.bits != child.bits)
        if len(diff) != 1:
            return
        j = int(diff[0])
        in_prefix = j < self._split
        bit = int(parent.bits[j])
        self.n_checked += 1

        if parent_value[1] < self._ceil:
            allowed = (in_prefix and bit == 0) or (not in_prefix and bit == 1)
            if not allowed:
                raise InvariantViolation(
                    f"Infeasible parent {parent} {parent_value} accepted the flip of "
                    f"a {bit} at position {j + 1} ({self.spec})"
                )
        else:
            if child_value[1] < self._ceil:
                raise InvariantViolation(
                    f"Feasible parent {parent} {parent_value} accepted the infeasible "
                    f"offspring {child} {child_value} ({self.spec})"
                )
            allowed = (in_prefix and bit == 0) or (
                not in_prefix and bit == 0 and parent_value[1] >= self._ceil + 1
            )
            if not allowed:
                raise InvariantViolation(
                    f"Feasible parent {parent} {parent_value} accepted the flip of "
                    f"a {bit} at position {j + 1} ({self.spec})"
                )


def _elitist_search(
    problem: ScalarProblem,
    mutate: Callable[[BitString, RngStream], BitString],
    target: Optional[OptimalSetDescriptor],
    budget: int,
    rng: RngStream,
    monitor: Optional[PenaltySurvivalMonitor] = None,
    record_trajectory: bool = False,
    check_invariants: bool = True,
) -> SolverRun:
    if budget < 1:
        raise ValueError(f"Budget must be at least 1, got {budget}")
    inst = problem.inst
    evals_start = problem.n_evals

    x = random_bitstring(inst.n, rng)
    fx, vx = problem.evaluate(x)
    used = problem.n_evals - evals_start

    first_pareto = used if inst.is_pareto_value(vx) else None
    trajectory = [(used, fx)] if record_trajectory else None
    hit = target is not None and target.contains_value(vx)
    best = fx

    while not hit and used < budget:
        y = mutate(x, rng)
        fy, vy = problem.evaluate(y)
        used = problem.n_evals - evals_start

        if fy >= fx:
            if monitor is not None:
                monitor.check(x, vx, y, vy)
            if record_trajectory and fy > fx:
                trajectory.append((used, fy))
            x, fx, vx = y, fy, vy
            if first_pareto is None and inst.is_pareto_value(vx):
                first_pareto = used
            hit = target is not None and target.contains_value(vx)

        if check_invariants:
            if fx < best:
                raise InvariantViolation(
                    f"Best-so-far fitness decreased from {best} to {fx} ({problem.name})"
                )
            best = fx

    return SolverRun(
        solution=x,
        value=vx,
        fitness=fx,
        evaluations=used,
        hit_optimum=bool(hit),
        first_pareto_eval=first_pareto,
        trajectory=trajectory,
    )


def rls(
    problem: ScalarProblem,
    target: Optional[OptimalSetDescriptor],
    budget: int,
    rng: RngStream,
    monitor: Optional[PenaltySurvivalMonitor] = None,
    record_trajectory: bool = False,
    check_invariants: bool = True,
) -> SolverRun:
    """
    Randomized local search: flip one uniformly chosen bit, keep the
    offspring if its fitness is at least the parent's.

    Parameters
    ----------
    problem: `ScalarProblem`
        The problem to maximize
    target: `OptimalSetDescriptor` or None
        The run stops as soon as the current solution lies in the target
        set. Without target the whole budget is used.
    budget: int
        Maximal number of evaluations, including the initial one
    rng: `RngStream`
    monitor: `PenaltySurvivalMonitor`, optional
        Checks every accepted move
    record_trajectory: bool
        Record (evaluation index, fitness) at every strict improvement
    check_invariants: bool
        Assert that the best-so-far fitness never decreases

    Returns
    -------
    `SolverRun`
    """
    return _elitist_search(
        problem,
        one_bit_mutation,
        target,
        budget,
        rng,
        monitor=monitor,
        record_trajectory=record_trajectory,
        check_invariants=check_invariants,
    )


def one_plus_one_ea(
    problem: ScalarProblem,
    target: Optional[OptimalSetDescriptor],
    budget: int,
    rng: RngStream,
    record_trajectory: bool = False,
    check_invariants: bool = True,
) -> SolverRun:
    """(1+1) EA, as `rls` with standard bit-wise mutation"""
    return _elitist_search(
        problem,
        standard_bitwise_mutation,
        target,
        budget,
        rng,
        record_trajectory=record_trajectory,
        check_invariants=check_invariants,
    )


@dataclass
class PipelineResult:
    specs: List[PenaltySpec]
    runs: List[SolverRun]
    coverage: CoverageReport
    total_evaluations: int
    evals_first_pareto: Optional[int] = None
    evals_full_coverage: Optional[int] = None
    censored: bool = False

    @property
    def values(self) -> List[ObjectivePair]:
        return [run.value for run in self.runs]


SOLVERS = {"rls": rls, "ea": one_plus_one_ea}


def epsilon_constraint_pipeline(
    inst: ProblemInstance,
    budget_per_run: Optional[int] = None,
    rng: Optional[RngStream] = None,
    solver: str = "rls",
    r: Optional[RationalLike] = None,
    check_invariants: bool = True,
    params: Optional[SolverParams] = None,
) -> PipelineResult:
    """
    Cover the Pareto front by solving one exterior penalty problem per
    front point, following `coverage_schedule`.

    Parameters
    ----------
    inst: `ProblemInstance`
    budget_per_run: int, optional
        Evaluation budget of every scalar run, defaults to `default_budget`
    rng: `RngStream`
        Shared by the consecutive runs
    solver: 'rls' or 'ea'
    r: rational, optional
        Penalty coefficient of all specs, defaults to `SolverParams.penalty_r`.
        Coefficients r <= 2 do not recover the front.
    check_invariants: bool
        Elitism checks, and survival checks of the accepted moves for RLS

    Returns
    -------
    `PipelineResult`
        A run that exhausts its budget marks the result as censored, the
        coverage then is partial.
    """
    params = SolverParams() if params is None else params
    if solver not in SOLVERS:
        raise ValueError(f"Unknown solver '{solver}', choose from {list(SOLVERS)}")
    if rng is None:
        raise ValueError("epsilon_constraint_pipeline requires an RngStream")
    budget = default_budget(inst, params) if budget_per_run is None else budget_per_run
    r = params.penalty_r if r is None else r

    specs = coverage_schedule(inst, r=r)
    runs, collected = [], set()
    total, first_pareto, full_coverage, censored = 0, None, None, False

    for spec in specs:
        problem = ScalarProblem.from_penalty(spec)
        target = exterior_optima(spec)
        kwargs = {"check_invariants": check_invariants}
        if solver == "rls" and check_invariants:
            kwargs["monitor"] = PenaltySurvivalMonitor(spec)
        run = SOLVERS[solver](problem, target, budget, rng, **kwargs)

        if first_pareto is None and run.first_pareto_eval is not None:
            first_pareto = total + run.first_pareto_eval
        total += run.evaluations
        runs.append(run)
        collected.add(run.value)
        censored = censored or not run.hit_optimum
        if full_coverage is None and inst.coverage(collected).full:
            full_coverage = total

    return PipelineResult(
        specs=specs,
        runs=runs,
        coverage=inst.coverage(collected),
        total_evaluations=total,
        evals_first_pareto=first_pareto,
        evals_full_coverage=full_coverage,
        censored=censored,
    )
