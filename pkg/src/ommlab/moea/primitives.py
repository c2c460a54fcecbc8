# -*- coding: utf-8 -*-
#
# primitives.py
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
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.bitstrings import BitString, RngStream
from ..core.onemaxmin import ObjectivePair


@dataclass(eq=False)
class Individual:
    """
    A genome together with its cached objective value. Individuals compare
    by identity, several individuals may share a genome or a value.
    """

    genome: BitString
    value: ObjectivePair

    def __repr__(self):
        return f"Individual({self.genome}, {self.value})"


class Population:
    """
    Ordered collection of individuals

    Parameters
    ----------
    members: iterable of `Individual`
    capacity: int, optional
        Fixed size the population is kept at, None for unbounded populations
    """

    def __init__(self, members: Iterable[Individual] = (), capacity: Optional[int] = None):
        self.members: List[Individual] = list(members)
        self.capacity = capacity

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def values(self) -> List[ObjectivePair]:
        return [ind.value for ind in self.members]

    def value_set(self) -> set:
        return set(ind.value for ind in self.members)


def _value_array(members: Sequence[Individual]) -> np.ndarray:
    return np.array([ind.value for ind in members], dtype=np.int64).reshape(-1, 2)


def dominance_matrix(values: np.ndarray) -> np.ndarray:
    """Boolean matrix with entry (i, j) true iff value i strictly dominates value j"""
    geq = np.all(values[:, None, :] >= values[None, :, :], axis=-1)
    gt = np.any(values[:, None, :] > values[None, :, :], axis=-1)
    return geq & gt


@dataclass
class FrontPartition:
    """
    Non-dominated sorting of a sequence of individuals.

    Attributes
    ----------
    fronts: list of lists of `Individual`
        F_1, F_2, ..., members in input order within each front
    indices: list of np.ndarray
        Input positions of the members of each front
    ranks: np.ndarray
        Front index (0 for F_1) of every input position
    """

    fronts: List[List[Individual]]
    indices: List[np.ndarray]
    ranks: np.ndarray

    def __len__(self):
        return len(self.fronts)


def fast_nondominated_sort(members: Sequence[Individual]) -> FrontPartition:
    members = list(members)
    n_members = len(members)
    if n_members == 0:
        return FrontPartition([], [], np.zeros(0, dtype=int))

    dom = dominance_matrix(_value_array(members))
    n_dominating = dom.sum(axis=0)
    ranks = np.full(n_members, -1, dtype=int)

    indices = []
    current = np.flatnonzero(n_dominating == 0)
    rank = 0
    while current.size > 0:
        ranks[current] = rank
        indices.append(current)
        n_dominating = n_dominating - dom[current].sum(axis=0)
        current = np.flatnonzero((n_dominating == 0) & (ranks < 0))
        rank += 1

    fronts = [[members[i] for i in idx] for idx in indices]
    return FrontPartition(fronts, indices, ranks)


def crowding_distance(front: Sequence[Individual]) -> np.ndarray:
    """
    Crowding distances of the members of a front, aligned with the input
    order.

    Per objective the members are sorted stably by ascending value, the
    first and last members get an infinite distance and the interior
    members accumulate the gap between their neighbours normalized by the
    objective range. An objective with zero range adds nothing.

    Returns
    -------
    np.ndarray of float
    """
    values = _value_array(front)
    n_members = values.shape[0]
    dist = np.zeros(n_members, dtype=float)
    if n_members == 0:
        return dist

    for obj in range(values.shape[1]):
        order = np.argsort(values[:, obj], kind="stable")
        sorted_vals = values[order, obj]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        span = sorted_vals[-1] - sorted_vals[0]
        if n_members > 2 and span > 0:
            gaps = (sorted_vals[2:] - sorted_vals[:-2]) / span
            dist[order[1:-1]] += gaps
    return dist


def hypervolume_2d(
    values: Iterable[ObjectivePair], ref: Tuple[int, int] = (-1, -1)
) -> int:
    """
    Area dominated by a set of values and dominating the reference point,
    for maximization.

    Points are swept by descending `f1`, each adding the rectangle between
    the reference `f1` and its own `f1` above the highest `f2` seen so far.
    Exact for integral input.
    """
    ref1, ref2 = ref
    points = sorted(
        ((v[0], v[1]) for v in values if v[0] > ref1 and v[1] > ref2), reverse=True
    )
    area, top = 0, ref2
    for f1, f2 in points:
        if f2 > top:
            area += (f1 - ref1) * (f2 - top)
            top = f2
    return area


def hv_contribution(
    member: Individual,
    front: Sequence[Individual],
    ref: Tuple[int, int] = (-1, -1),
) -> int:
    """HV(front) - HV(front without member), `member` is matched by identity"""
    if not any(ind is member for ind in front):
        raise ValueError(f"{member} is not a member of the front")
    rest = [ind.value for ind in front if ind is not member]
    return hypervolume_2d([ind.value for ind in front], ref) - hypervolume_2d(rest, ref)


def hv_contributions(
    front: Sequence[Individual], ref: Tuple[int, int] = (-1, -1)
) -> np.ndarray:
    """
    Exclusive hypervolume contributions of all members, aligned with the
    input order.

    For mutually non-dominated values the contribution of a uniquely held
    value is the rectangle spanned with its two neighbours in the sorted
    front, a value held by several members contributes nothing. Other sets
    fall back to one hypervolume difference per member.
    """
    values = _value_array(front)
    n_members = values.shape[0]
    contrib = np.zeros(n_members, dtype=np.int64)
    inside = (values[:, 0] > ref[0]) & (values[:, 1] > ref[1])
    if not np.any(inside):
        return contrib

    uniq, inverse, counts = np.unique(
        values[inside], axis=0, return_inverse=True, return_counts=True
    )
    inverse = inverse.reshape(-1)
    if np.any(np.diff(uniq[:, 1]) >= 0):
        return np.array([hv_contribution(ind, front, ref) for ind in front], dtype=np.int64)

    left = np.concatenate(([ref[0]], uniq[:-1, 0]))
    right = np.concatenate((uniq[1:, 1], [ref[1]]))
    uniq_contrib = (uniq[:, 0] - left) * (uniq[:, 1] - right)
    uniq_contrib[counts > 1] = 0
    contrib[inside] = uniq_contrib[inverse]
    return contrib


FAIR = "fair"
RANDOM = "random"
TOURNAMENT = "tournament"


def select_parents(
    ranks: np.ndarray,
    crowding: np.ndarray,
    n_select: int,
    scheme: str,
    rng: RngStream,
) -> np.ndarray:
    """
    Parent indices for the next offspring population

    Parameters
    ----------
    ranks: np.ndarray
        Front index of every member
    crowding: np.ndarray
        Crowding distance of every member within its front
    n_select: int
        Number of parents
    scheme: 'fair', 'random' or 'tournament'
        fair: every member once (`n_select` must be the population size),
        random: uniform with replacement,
        tournament: binary tournaments between two distinct uniformly chosen
        members, won by the lower rank, then the larger crowding distance,
        remaining ties decided by a fair coin.
    rng: `RngStream`

    Returns
    -------
    np.ndarray of int
    """
    size = len(ranks)
    if scheme == FAIR:
        if n_select != size:
            raise ValueError(
                f"Fair selection picks every member once, n_select={n_select} != {size}"
            )
        return np.arange(size)
    elif scheme == RANDOM:
        return rng.integers(0, size, size=n_select)
    elif scheme == TOURNAMENT:
        if size == 1:
            return np.zeros(n_select, dtype=np.int64)
        a = rng.integers(0, size, size=n_select)
        b = rng.integers(0, size - 1, size=n_select)
        b = b + (b >= a)
        coin = rng.random(n_select) < 0.5
        ra, rb = ranks[a], ranks[b]
        ca, cb = crowding[a], crowding[b]
        a_wins = (
            (ra < rb)
            | ((ra == rb) & (ca > cb))
            | ((ra == rb) & (ca == cb) & coin)
        )
        return np.where(a_wins, a, b)
    else:
        raise ValueError(
            f"Unknown selection scheme '{scheme}', choose from {[FAIR, RANDOM, TOURNAMENT]}"
        )


def random_selection_probability(size: int) -> float:
    """Probability that a given member parents at least one of `size`
    offspring under uniform selection with replacement"""
    return 1.0 - (1.0 - 1.0 / size) ** size


def tournament_selection_bound(size: int, n_objectives: int = 2) -> float:
    """
    Lower bound 1 - exp(-2(N - 2m) / (N - 1)) on the probability that an
    extreme member with infinite crowding distance parents at least one
    offspring under binary tournament selection, m objectives
    """
    if size < 2:
        raise ValueError(f"Tournament selection needs at least two members, got {size}")
    return 1.0 - math.exp(-2.0 * (size - 2 * n_objectives) / (size - 1))
