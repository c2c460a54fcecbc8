# -*- coding: utf-8 -*-
#
# scalarization.py
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

import sympy as sp

import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Set

from ..core.bitstrings import BitString
from ..core.onemaxmin import ObjectivePair, ProblemInstance
from .optimalsets import OptimalSetDescriptor


@dataclass(frozen=True)
class ScalarizationSpec:
    inst: ProblemInstance
    w: float

    def __post_init__(self):
        if not math.isfinite(float(self.w)):
            raise ValueError(f"Scalarization weight must be finite, got {self.w}")
        object.__setattr__(self, "w", float(self.w))


def scalarize_value(spec: ScalarizationSpec, value: ObjectivePair) -> float:
    return spec.w * value[0] + (1.0 - spec.w) * value[1]


def scalarize(
    spec: ScalarizationSpec,
    x: BitString,
    evaluate: Optional[Callable[[BitString], ObjectivePair]] = None,
) -> float:
    """
    Weighted sum w * f1(x) + (1 - w) * f2(x)

    Parameters
    ----------
    spec: `ScalarizationSpec`
    x: `BitString`
    evaluate: callable, optional
        Evaluation gateway, e.g. an `EvaluationCounter`, through which the
        single underlying evaluation is made. Defaults to the instance.
    """
    value = spec.inst.evaluate(x) if evaluate is None else evaluate(x)
    return scalarize_value(spec, value)


def scalarization_optima(spec: ScalarizationSpec) -> OptimalSetDescriptor:
    """
    The weighted sum equals |x[1..n-k]| + (2w - 1) |x[n-k+1..n]| + k(1 - w),
    so its maximizers have all ones in the first n-k positions and all ones
    (w > 1/2), all zeros (w < 1/2) or anything (w = 1/2) in the last k.
    """
    inst = spec.inst
    if spec.w > 0.5:
        return OptimalSetDescriptor.of_levels(inst, [inst.n - inst.k], label="w>1/2")
    elif spec.w < 0.5:
        return OptimalSetDescriptor.of_levels(inst, [inst.n], label="w<1/2")
    else:
        return OptimalSetDescriptor.pareto_set(inst)


def count_reachable_front_points(
    inst: ProblemInstance, optimal_value_sets: Iterable[Iterable[ObjectivePair]]
) -> int:
    """
    Worst case number of distinct front points returned when one solution
    is returned per weighted-sum problem.

    A problem with a single optimal value contributes that value, a problem
    with several tied optimal values contributes one of them, counted as a
    new point whenever one of its values is not yet reached otherwise.

    Parameters
    ----------
    optimal_value_sets: iterable of sets of `ObjectivePair`
        The optimal values of each weighted-sum problem
    """
    singles: Set[ObjectivePair] = set()
    tied: List[Set[ObjectivePair]] = []
    for values in optimal_value_sets:
        front_values = {ObjectivePair(*v) for v in values if inst.is_pareto_value(v)}
        if len(front_values) == 1:
            singles |= front_values
        elif len(front_values) > 1:
            tied.append(front_values)
    n_extra = sum(1 for values in tied if not values <= singles)
    return min(len(singles) + n_extra, inst.k + 1)


def scalarization_reachable_points(
    inst: ProblemInstance, weights: Iterable[float]
) -> int:
    """
    Number of front points a set of weights can reach, one returned solution
    per weight. Bounded by three for any weight set.
    """
    optima = [scalarization_optima(ScalarizationSpec(inst, w)) for w in set(weights)]
    return count_reachable_front_points(inst, [opt.values() for opt in optima])


def exact_weight(w: float) -> sp.Rational:
    """Decimal weight as an exact rational, 0.3 -> 3/10"""
    return sp.Rational(repr(float(w)))
