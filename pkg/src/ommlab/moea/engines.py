# -*- coding: utf-8 -*-
#
# engines.py
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
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Type

from ..factorydefaults import MOEAParams
from ..core.bitstrings import (
    BitString,
    RngStream,
    one_bit_mutation,
    random_bitstring,
    standard_bitwise_mutation,
)
from ..core.onemaxmin import (
    EvaluationCounter,
    InvariantViolation,
    ObjectivePair,
    ProblemInstance,
    dominates,
    weakly_dominates,
)
from ..reformulations.decomposition import SubproblemSpec, scaled_subproblem_value
from .primitives import (
    TOURNAMENT,
    Individual,
    Population,
    crowding_distance,
    fast_nondominated_sort,
    hv_contributions,
    select_parents,
)


Evaluator = Callable[[BitString], ObjectivePair]


class ConfigurationError(ValueError):
    """
    Invalid algorithm parameters, e.g. a population size below the
    threshold that guarantees the survival of reached front points
    """

    pass


def _offspring(genome: BitString, evaluate: Evaluator) -> Individual:
    return Individual(genome, evaluate(genome))


def _semo_survival(pop: Population, child: Individual) -> Population:
    if any(dominates(member.value, child.value) for member in pop):
        return pop
    kept = [member for member in pop if not weakly_dominates(child.value, member.value)]
    return Population(kept + [child], capacity=pop.capacity)


def semo_step(
    pop: Population, inst: ProblemInstance, rng: RngStream, evaluate: Evaluator
) -> Population:
    """
    One SEMO iteration: a uniformly chosen parent, one-bit mutation, the
    offspring enters unless strictly dominated and removes every member it
    weakly dominates
    """
    parent = rng.choice(pop.members)
    child = _offspring(one_bit_mutation(parent.genome, rng), evaluate)
    return _semo_survival(pop, child)


def gsemo_step(
    pop: Population, inst: ProblemInstance, rng: RngStream, evaluate: Evaluator
) -> Population:
    """As `semo_step` with standard bit-wise mutation"""
    parent = rng.choice(pop.members)
    child = _offspring(standard_bitwise_mutation(parent.genome, rng), evaluate)
    return _semo_survival(pop, child)


def smsemoa_step(
    pop: Population,
    inst: ProblemInstance,
    ref: Tuple[int, int],
    rng: RngStream,
    evaluate: Evaluator,
) -> Population:
    """
    One steady-state SMS-EMOA iteration. The member of the last
    non-dominated front with the smallest hypervolume contribution is
    removed from the parents plus offspring, ties broken uniformly at
    random. All other fronts are kept.
    """
    parent = rng.choice(pop.members)
    child = _offspring(standard_bitwise_mutation(parent.genome, rng), evaluate)
    combined = pop.members + [child]

    partition = fast_nondominated_sort(combined)
    last = partition.indices[-1]
    contrib = hv_contributions([combined[i] for i in last], ref)
    candidates = last[contrib == contrib.min()]
    drop = int(candidates[rng.index(len(candidates))])

    return Population(
        [member for j, member in enumerate(combined) if j != drop],
        capacity=pop.capacity,
    )


def nsga2_generation(
    pop: Population,
    inst: ProblemInstance,
    selection: str,
    rng: RngStream,
    evaluate: Evaluator,
) -> Population:
    """
    One NSGA-II generation with N = |pop| offspring created by standard
    bit-wise mutation of the selected parents.

    Whole fronts of the combined population survive while they fit, the
    critical front is truncated to its members of largest crowding
    distance, ties broken uniformly at random.
    """
    size = len(pop)
    if selection == TOURNAMENT:
        partition = fast_nondominated_sort(pop.members)
        crowding = np.zeros(size, dtype=float)
        for idx in partition.indices:
            crowding[idx] = crowding_distance([pop[i] for i in idx])
        ranks = partition.ranks
    else:
        ranks, crowding = np.zeros(size, dtype=int), np.zeros(size, dtype=float)
    parents = select_parents(ranks, crowding, size, selection, rng)

    offspring = [
        _offspring(standard_bitwise_mutation(pop[int(i)].genome, rng), evaluate)
        for i in parents
    ]
    combined = pop.members + offspring

    survivors: List[int] = []
    for idx in fast_nondominated_sort(combined).indices:
        n_free = size - len(survivors)
        if len(idx) <= n_free:
            survivors.extend(int(i) for i in idx)
        else:
            crowding = crowding_distance([combined[i] for i in idx])
            order = np.lexsort((rng.random(len(idx)), -crowding))
            survivors.extend(int(i) for i in idx[order[:n_free]])
        if len(survivors) == size:
            break

    return Population([combined[i] for i in sorted(survivors)], capacity=pop.capacity)


@dataclass
class MoeadState:
    """
    MOEA/D with Tchebycheff subproblems h_0..h_H, H = k, and neighbourhood
    size T = 1

    Attributes
    ----------
    subproblems: list of `Individual`
        x_0, ..., x_H, the current solution of every subproblem
    z_star: `ObjectivePair`
        Reference point, the best value seen per objective
    archive: list of `Individual`
        External population, value-distinct and mutually non-dominated
    T: int
        Neighbourhood size
    """

    subproblems: List[Individual]
    z_star: ObjectivePair
    archive: List[Individual] = field(default_factory=list)
    T: int = 1


def update_archive(archive: List[Individual], child: Individual) -> List[Individual]:
    """
    Remove the members the offspring strictly dominates, then add the
    offspring unless a member strictly dominates it or holds its value
    """
    kept = [member for member in archive if not dominates(child.value, member.value)]
    if not any(
        member.value == child.value or dominates(member.value, child.value)
        for member in kept
    ):
        kept.append(child)
    return kept


def _update_reference(z_star: ObjectivePair, value: ObjectivePair) -> ObjectivePair:
    return ObjectivePair(max(z_star[0], value[0]), max(z_star[1], value[1]))


def moead_generation(
    state: MoeadState, inst: ProblemInstance, rng: RngStream, evaluate: Evaluator
) -> MoeadState:
    """
    One MOEA/D generation. For i = 0..H the offspring of x_i by one-bit
    mutation replaces x_i if h_i(offspring) <= h_i(x_i) under the current
    reference point, after which the reference point and the archive are
    updated with the offspring.

    With k = 0 the single subproblem is plain RLS on f1 (= f2).
    """
    subproblems = list(state.subproblems)
    z_star, archive = state.z_star, list(state.archive)

    for i in range(len(subproblems)):
        current = subproblems[i]
        child = _offspring(one_bit_mutation(current.genome, rng), evaluate)
        if inst.k == 0:
            accept = child.value[0] >= current.value[0]
        else:
            spec = SubproblemSpec(inst, i, z_star)
            accept = scaled_subproblem_value(spec, child.value) <= scaled_subproblem_value(
                spec, current.value
            )
        if accept:
            subproblems[i] = child
        z_star = _update_reference(z_star, child.value)
        archive = update_archive(archive, child)

    return MoeadState(subproblems, z_star, archive, state.T)


class Engine:
    """
    Base class of the population based engines.

    An engine owns its population, its random stream and an evaluation
    counter. `step` performs one iteration (one generation for NSGA-II and
    MOEA/D) and costs `evals_per_step` evaluations.

    Parameters
    ----------
    inst: `ProblemInstance`
    rng: `RngStream`
    check_invariants: bool
        Assert engine specific invariants after every step
    params: `MOEAParams`, optional
    """

    name = ""
    # whether reached front points provably survive under the configuration
    keeps_front_points = True

    def __init__(
        self,
        inst: ProblemInstance,
        rng: RngStream,
        check_invariants: bool = True,
        params: Optional[MOEAParams] = None,
    ):
        self.inst = inst
        self.rng = rng
        self.check_invariants = check_invariants
        self.params = MOEAParams() if params is None else params
        self.counter = EvaluationCounter(inst)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.inst}, seed={self.rng.seed})"

    @property
    def n_evals(self) -> int:
        return self.counter.n_evals

    @property
    def evals_per_step(self) -> int:
        return 1

    @property
    def size_scale(self) -> int:
        """Factor of n * ln(n) in the evaluation budget"""
        return max(self.inst.k, 1) + 1

    def _random_individual(self) -> Individual:
        return _offspring(random_bitstring(self.inst.n, self.rng), self.counter)

    def covered_values(self) -> set:
        return self.population.value_set()

    def step(self):
        raise NotImplementedError


class SEMO(Engine):
    name = "semo"

    def __init__(self, inst, rng, check_invariants=True, params=None):
        super().__init__(inst, rng, check_invariants=check_invariants, params=params)
        self.population = Population([self._random_individual()])

    def _step(self) -> Population:
        return semo_step(self.population, self.inst, self.rng, self.counter)

    def step(self):
        self.population = self._step()
        if self.check_invariants:
            values = self.population.values()
            if len(values) > self.inst.k + 1:
                raise InvariantViolation(
                    f"{self.name} population of size {len(values)} exceeds k+1={self.inst.k + 1}"
                )
            if len(set(values)) != len(values):
                raise InvariantViolation(f"{self.name} population holds duplicate values")


class GSEMO(SEMO):
    name = "gsemo"

    def _step(self) -> Population:
        return gsemo_step(self.population, self.inst, self.rng, self.counter)


class SMSEMOA(Engine):
    """
    Parameters
    ----------
    mu: int, optional
        Population size, defaults to `smsemoa_size_factor * (k+1)`
    ref_point: (int, int), optional
        Hypervolume reference point, defaults to `MOEAParams.ref_point`
    strict: bool, optional
        Refuse mu < k+1
    """

    name = "smsemoa"

    def __init__(
        self,
        inst,
        rng,
        mu=None,
        ref_point=None,
        strict=None,
        check_invariants=True,
        params=None,
    ):
        super().__init__(inst, rng, check_invariants=check_invariants, params=params)
        self.mu = self.params.smsemoa_size_factor * (inst.k + 1) if mu is None else int(mu)
        self.ref_point = tuple(self.params.ref_point if ref_point is None else ref_point)
        strict = self.params.strict if strict is None else strict
        if self.mu < 1:
            raise ConfigurationError(f"mu={self.mu} must be positive")
        if self.mu < inst.k + 1:
            msg = f"mu={self.mu} < k+1={inst.k + 1} required for front-point survival"
            if strict:
                raise ConfigurationError(msg)
            warnings.warn(msg, UserWarning)
            self.keeps_front_points = False
        self.population = Population(
            [self._random_individual() for _ in range(self.mu)], capacity=self.mu
        )

    @property
    def size_scale(self) -> int:
        return self.mu

    def step(self):
        self.population = smsemoa_step(
            self.population, self.inst, self.ref_point, self.rng, self.counter
        )
        if self.check_invariants and len(self.population) != self.mu:
            raise InvariantViolation(
                f"SMS-EMOA population size {len(self.population)} != mu={self.mu}"
            )


class NSGA2(Engine):
    """
    Parameters
    ----------
    N: int, optional
        Population size, defaults to `nsga2_size_factor * (k+1)`
    selection: str, optional
        'fair', 'random' or 'tournament', defaults to `MOEAParams.selection`
    strict: bool, optional
        Refuse N < 4(k+1)
    """

    name = "nsga2"

    def __init__(
        self,
        inst,
        rng,
        N=None,
        selection=None,
        strict=None,
        check_invariants=True,
        params=None,
    ):
        super().__init__(inst, rng, check_invariants=check_invariants, params=params)
        self.N = self.params.nsga2_size_factor * (inst.k + 1) if N is None else int(N)
        self.selection = self.params.selection if selection is None else selection
        strict = self.params.strict if strict is None else strict
        if self.selection not in self.params.selection_schemes:
            raise ConfigurationError(
                f"Unknown selection '{self.selection}', choose from {self.params.selection_schemes}"
            )
        if self.N < 1:
            raise ConfigurationError(f"N={self.N} must be positive")
        if self.N < 4 * (inst.k + 1):
            msg = f"N={self.N} < 4(k+1)={4 * (inst.k + 1)} required for front-point survival"
            if strict:
                raise ConfigurationError(msg)
            warnings.warn(msg, UserWarning)
            self.keeps_front_points = False
        self.population = Population(
            [self._random_individual() for _ in range(self.N)], capacity=self.N
        )

    @property
    def evals_per_step(self) -> int:
        return self.N

    @property
    def size_scale(self) -> int:
        return self.N

    def step(self):
        self.population = nsga2_generation(
            self.population, self.inst, self.selection, self.rng, self.counter
        )
        if self.check_invariants and len(self.population) != self.N:
            raise InvariantViolation(
                f"NSGA-II population size {len(self.population)} != N={self.N}"
            )


class MOEAD(Engine):
    """
    Parameters
    ----------
    T: int
        Neighbourhood size, only T = 1 is supported
    """

    name = "moead"

    def __init__(self, inst, rng, T=1, check_invariants=True, params=None):
        super().__init__(inst, rng, check_invariants=check_invariants, params=params)
        if T != 1:
            raise ConfigurationError(f"MOEA/D is implemented for T=1, got T={T}")
        subproblems = [self._random_individual() for _ in range(inst.k + 1)]
        z_star = ObjectivePair(
            max(ind.value[0] for ind in subproblems),
            max(ind.value[1] for ind in subproblems),
        )
        archive: List[Individual] = []
        for ind in subproblems:
            archive = update_archive(archive, ind)
        self.state = MoeadState(subproblems, z_star, archive, T)

    @property
    def evals_per_step(self) -> int:
        return self.inst.k + 1

    @property
    def population(self) -> Population:
        return Population(self.state.subproblems)

    def covered_values(self) -> set:
        return set(ind.value for ind in self.state.archive)

    def step(self):
        z_before = self.state.z_star
        self.state = moead_generation(self.state, self.inst, self.rng, self.counter)
        if self.check_invariants:
            if not weakly_dominates(self.state.z_star, z_before):
                raise InvariantViolation(
                    f"Reference point decreased from {z_before} to {self.state.z_star}"
                )
            values = sorted(ind.value for ind in self.state.archive)
            f2 = [value[1] for value in values]
            if any(a <= b for a, b in zip(f2, f2[1:])):
                raise InvariantViolation("MOEA/D archive is not value-distinct and non-dominated")


ENGINES: Dict[str, Type[Engine]] = {
    "semo": SEMO,
    "gsemo": GSEMO,
    "smsemoa": SMSEMOA,
    "nsga2": NSGA2,
    "moead": MOEAD,
}


def make_engine(name: str, inst: ProblemInstance, rng: RngStream, **kwargs) -> Engine:
    """
    Construct an engine by name, keyword arguments are passed on to the
    engine class (e.g. `N`, `selection`, `mu`, `ref_point`, `strict`)
    """
    try:
        engine_class = ENGINES[name]
    except KeyError:
        raise ConfigurationError(f"Unknown engine '{name}', choose from {list(ENGINES)}")
    return engine_class(inst, rng, **kwargs)


def default_engine_budget(engine: Engine) -> int:
    params = engine.params
    n = engine.inst.n
    return max(
        params.min_budget,
        int(math.ceil(params.budget_multiplier * engine.size_scale * n * math.log(n))),
    )
