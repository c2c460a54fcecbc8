# -*- coding: utf-8 -*-
#
# optimalsets.py
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
from typing import FrozenSet, Iterable, List

from ..core.bitstrings import BitString, enumerate_bitstrings
from ..core.onemaxmin import ObjectivePair, ProblemInstance


# label of the descriptor holding every Pareto optimal solution
ALL_X = "ALL_X"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class OptimalSetDescriptor:
    """
    Symbolic optimal solution set, a union of level sets

        D_i = {x : f(x) = (2n-k-i, i)},  n-k <= i <= n

    of an instance. The level sets are large, so optima are compared and
    reported through their level indices; `expand` lists the solutions for
    small n only.

    Attributes
    ----------
    inst: `ProblemInstance`
        The instance the levels refer to
    levels: frozenset of int
        The level indices i of the union
    infeasible: bool
        Marks a constrained problem without feasible solutions, `levels`
        is empty in that case
    label: str
        Optional tag of the analytic case that produced the set
    """

    inst: ProblemInstance
    levels: FrozenSet[int]
    infeasible: bool = False
    label: str = ""

    def __post_init__(self):
        levels = frozenset(int(i) for i in self.levels)
        lo, hi = self.inst.n - self.inst.k, self.inst.n
        bad = [i for i in levels if i < lo or i > hi]
        if bad:
            raise ValueError(f"Levels {sorted(bad)} outside [{lo}, {hi}]")
        if self.infeasible and levels:
            raise ValueError("An infeasible optimal set has no levels")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def of_levels(
        cls, inst: ProblemInstance, levels: Iterable[int], label: str = ""
    ) -> "OptimalSetDescriptor":
        return cls(inst, frozenset(levels), label=label)

    @classmethod
    def level_range(
        cls, inst: ProblemInstance, lo: int, hi: int, label: str = ""
    ) -> "OptimalSetDescriptor":
        """Union of the levels lo..hi, both included"""
        return cls(inst, frozenset(range(lo, hi + 1)), label=label)

    @classmethod
    def pareto_set(cls, inst: ProblemInstance, label: str = ALL_X):
        return cls.level_range(inst, inst.n - inst.k, inst.n, label=label)

    @classmethod
    def infeasible_set(cls, inst: ProblemInstance):
        return cls(inst, frozenset(), infeasible=True, label=INFEASIBLE)

    @property
    def is_pareto_set(self) -> bool:
        return len(self.levels) == self.inst.k + 1

    def values(self) -> List[ObjectivePair]:
        return [self.inst.level_value(i) for i in sorted(self.levels)]

    def contains_value(self, value: ObjectivePair) -> bool:
        f1, f2 = value
        return f2 in self.levels and f1 == 2 * self.inst.n - self.inst.k - f2

    def count(self) -> int:
        """Number of solutions in the union, |D_i| = C(k, n-i)"""
        return sum(math.comb(self.inst.k, self.inst.n - i) for i in self.levels)

    def expand(self) -> List[BitString]:
        """
        Explicit solutions of the set, in lexicographic order (n <= 20)
        """
        bits = enumerate_bitstrings(self.inst.n)
        f1, f2 = self.inst.evaluate_array(bits)
        mask = np.zeros(bits.shape[0], dtype=bool)
        for value in self.values():
            mask |= (f1 == value.f1) & (f2 == value.f2)
        return [BitString(row) for row in bits[mask]]

    def same_set(self, other: "OptimalSetDescriptor") -> bool:
        """Set equality, ignoring the case labels"""
        return (
            self.inst == other.inst
            and self.levels == other.levels
            and self.infeasible == other.infeasible
        )

    def __str__(self):
        if self.infeasible:
            return INFEASIBLE
        levels = " u ".join(f"D_{i}" for i in sorted(self.levels))
        values = ", ".join(str(v) for v in self.values())
        return f"{levels}  values {{{values}}}"
