# -*- coding: utf-8 -*-
#
# onemaxmin.py
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

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .bitstrings import BitString, enumerate_bitstrings


class InvariantViolation(AssertionError):
    """
    Raised when a runtime invariant of a search process fails, e.g. a
    covered Pareto front point is lost by an elitist algorithm.
    """

    pass


class ObjectivePair(NamedTuple):
    f1: int
    f2: int

    def __str__(self):
        return f"({self.f1}, {self.f2})"


def weakly_dominates(a: ObjectivePair, b: ObjectivePair) -> bool:
    return a[0] >= b[0] and a[1] >= b[1]


def dominates(a: ObjectivePair, b: ObjectivePair) -> bool:
    return a[0] >= b[0] and a[1] >= b[1] and (a[0] > b[0] or a[1] > b[1])


def nondominated_values(values: Iterable[ObjectivePair]) -> List[ObjectivePair]:
    """
    Distinct values not strictly dominated by any other value, sorted by
    ascending `f1`. Quadratic pairwise check.
    """
    distinct = sorted(set(ObjectivePair(*v) for v in values))
    return [a for a in distinct if not any(dominates(b, a) for b in distinct)]


def longest_antichain(values: Iterable[ObjectivePair]) -> int:
    """
    Size of the largest set of mutually incomparable distinct values.

    Two distinct values are incomparable iff one has the strictly larger
    `f1` and the other the strictly larger `f2`, so an antichain sorted by
    `f1` is a strictly decreasing sequence in `f2`.
    """
    distinct = sorted(set(ObjectivePair(*v) for v in values))
    if len(distinct) == 0:
        return 0
    f1 = np.array([v.f1 for v in distinct])
    f2 = np.array([v.f2 for v in distinct])
    length = np.ones(len(distinct), dtype=int)
    for j in range(len(distinct)):
        prev = (f1[:j] < f1[j]) & (f2[:j] > f2[j])
        if np.any(prev):
            length[j] = length[:j][prev].max() + 1
    return int(length.max())


@dataclass(frozen=True)
class ParetoFront:
    points: Tuple[ObjectivePair, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[ObjectivePair]:
        return iter(self.points)

    def __contains__(self, value):
        return ObjectivePair(*value) in self.points

    def __getitem__(self, i):
        return self.points[i]


@dataclass(frozen=True)
class CoverageReport:
    covered: Tuple[ObjectivePair, ...]
    missing: Tuple[ObjectivePair, ...]

    @property
    def n_covered(self) -> int:
        return len(self.covered)

    @property
    def n_front(self) -> int:
        return len(self.covered) + len(self.missing)

    @property
    def fraction(self) -> float:
        return self.n_covered / self.n_front

    @property
    def full(self) -> bool:
        return len(self.missing) == 0

    def __str__(self):
        return f"{self.n_covered}/{self.n_front} front points covered"


@dataclass(frozen=True)
class ProblemInstance:
    """
    The OneMaxMin_k bi-objective function on bitstrings of length `n`.

    Both objectives count ones on the first `n-k` positions. On the last
    `k` positions the first objective counts ones and the second counts
    zeros, so `k` sets the degree of conflict:

        f1(x) = |x|
        f2(x) = |x[1..n-k]| + k - |x[n-k+1..n]|

    The level set D_i holds the solutions with value (2n-k-i, i), the
    Pareto optimal ones are the levels i in [n-k, n].

    Parameters
    ----------
    n: int
        Bitstring length, positive
    k: int
        Conflict degree, 0 <= k <= n
    """

    n: int
    k: int

    def __post_init__(self):
        try:
            n, k = operator.index(self.n), operator.index(self.k)
        except TypeError:
            raise TypeError(
                f"n and k must be integers, got {type(self.n)} and {type(self.k)}"
            )
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if k < 0 or k > n:
            raise ValueError(f"k must satisfy 0 <= k <= n = {n}, got {k}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "k", int(k))

    def __str__(self):
        return f"OneMaxMin(n={self.n}, k={self.k})"

    @property
    def front_size(self) -> int:
        return self.k + 1

    def evaluate(self, x: BitString) -> ObjectivePair:
        if x.n != self.n:
            raise ValueError(
                f"Bitstring of length {x.n} passed to an instance with n={self.n}"
            )
        bits = x.bits
        f1 = int(np.count_nonzero(bits))
        head = int(np.count_nonzero(bits[: self.n - self.k]))
        return ObjectivePair(f1, 2 * head + self.k - f1)

    def evaluate_array(self, bits: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Vectorised evaluation of the rows of a (m, n) 0/1 array

        Returns
        -------
        (np.ndarray, np.ndarray)
            The `f1` and `f2` values of every row
        """
        bits = np.asarray(bits)
        if bits.ndim != 2 or bits.shape[1] != self.n:
            raise ValueError(f"Expected an array of shape (m, {self.n})")
        f1 = bits.sum(axis=1, dtype=np.int64)
        head = bits[:, : self.n - self.k].sum(axis=1, dtype=np.int64)
        return f1, 2 * head + self.k - f1

    def level_value(self, i: int) -> ObjectivePair:
        """Value (2n-k-i, i) of the level set D_i"""
        return ObjectivePair(2 * self.n - self.k - i, i)

    def level_of(self, value: ObjectivePair) -> Optional[int]:
        """Level index of a Pareto front value, None for non-front values"""
        if self.is_pareto_value(value):
            return int(value[1])
        return None

    def is_pareto_value(self, value: ObjectivePair) -> bool:
        f1, f2 = value
        return f1 + f2 == 2 * self.n - self.k and self.n - self.k <= f1 <= self.n

    def pareto_front(self) -> ParetoFront:
        return ParetoFront(
            tuple(
                ObjectivePair(self.n - self.k + i, self.n - i)
                for i in range(self.k + 1)
            )
        )

    def is_pareto_optimal(self, x: BitString) -> bool:
        if x.n != self.n:
            raise ValueError(
                f"Bitstring of length {x.n} passed to an instance with n={self.n}"
            )
        return bool(np.all(x.bits[: self.n - self.k]))

    def max_antichain_size(self) -> int:
        return self.k + 1

    def realized_values(self) -> List[ObjectivePair]:
        """
        All values attained on {0,1}^n, from the number of ones p in the
        first n-k and q in the last k positions
        """
        values = {
            ObjectivePair(p + q, p + self.k - q)
            for p in range(self.n - self.k + 1)
            for q in range(self.k + 1)
        }
        return sorted(values)

    def coverage(self, values: Iterable[ObjectivePair]) -> CoverageReport:
        present = set(ObjectivePair(*v) for v in values)
        front = self.pareto_front()
        return CoverageReport(
            covered=tuple(p for p in front if p in present),
            missing=tuple(p for p in front if p not in present),
        )


class EvaluationCounter:
    """
    Evaluation gateway of an instance, counting every call. Solvers and
    engines evaluate exclusively through a counter.
    """

    def __init__(self, inst: ProblemInstance):
        self.inst = inst
        self.n_evals = 0

    def __call__(self, x: BitString) -> ObjectivePair:
        self.n_evals += 1
        return self.inst.evaluate(x)


def evaluate(inst: ProblemInstance, x: BitString) -> ObjectivePair:
    return inst.evaluate(x)


def pareto_front(inst: ProblemInstance) -> ParetoFront:
    return inst.pareto_front()


def is_pareto_optimal(inst: ProblemInstance, x: BitString) -> bool:
    return inst.is_pareto_optimal(x)


def max_antichain_size(inst: ProblemInstance) -> int:
    return inst.max_antichain_size()


def coverage(inst: ProblemInstance, values: Iterable[ObjectivePair]) -> CoverageReport:
    return inst.coverage(values)


def brute_force_front(inst: ProblemInstance) -> List[ObjectivePair]:
    """
    Non-dominated values of all 2^n bitstrings, by enumeration (n <= 20)
    """
    f1, f2 = inst.evaluate_array(enumerate_bitstrings(inst.n))
    pairs = np.unique(np.stack([f1, f2], axis=1), axis=0)
    return nondominated_values(ObjectivePair(int(a), int(b)) for a, b in pairs)
