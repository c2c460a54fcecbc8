# -*- coding: utf-8 -*-
#
# decomposition.py
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

from dataclasses import dataclass
from typing import Callable, Optional

from ..core.bitstrings import BitString
from ..core.onemaxmin import ObjectivePair, ProblemInstance
from .optimalsets import OptimalSetDescriptor


@dataclass(frozen=True)
class SubproblemSpec:
    """
    Tchebycheff subproblem i of the decomposition into H+1 = k+1 problems

        h_i(x) = max{w_i |f1(x) - z1|, (1 - w_i) |f2(x) - z2|},  w_i = i/k

    to be minimized. `z_star` defaults to (n, n), the ideal point of the
    instance.
    """

    inst: ProblemInstance
    i: int
    z_star: Optional[ObjectivePair] = None

    def __post_init__(self):
        if self.i < 0 or self.i > self.inst.k:
            raise ValueError(f"Subproblem index {self.i} outside [0, {self.inst.k}]")
        z_star = (
            ObjectivePair(self.inst.n, self.inst.n)
            if self.z_star is None
            else ObjectivePair(*self.z_star)
        )
        object.__setattr__(self, "z_star", z_star)

    @property
    def H(self) -> int:
        return self.inst.k

    @property
    def weight(self) -> sp.Rational:
        # with k = 0 the single subproblem only looks at f2 (= f1)
        if self.inst.k == 0:
            return sp.Integer(0)
        return sp.Rational(self.i, self.inst.k)

    def with_reference(self, z_star: ObjectivePair) -> "SubproblemSpec":
        return SubproblemSpec(self.inst, self.i, z_star)


def scaled_subproblem_value(spec: SubproblemSpec, value: ObjectivePair) -> int:
    """k * h_i, an exact integer (h_0 itself when k = 0)"""
    z1, z2 = spec.z_star
    d1, d2 = abs(value[0] - z1), abs(value[1] - z2)
    if spec.inst.k == 0:
        return d2
    return max(spec.i * d1, (spec.inst.k - spec.i) * d2)


def subproblem_value_of(spec: SubproblemSpec, value: ObjectivePair) -> float:
    scaled = scaled_subproblem_value(spec, value)
    return float(scaled) if spec.inst.k == 0 else scaled / spec.inst.k


def subproblem_value(
    spec: SubproblemSpec,
    x: BitString,
    evaluate: Optional[Callable[[BitString], ObjectivePair]] = None,
) -> float:
    value = spec.inst.evaluate(x) if evaluate is None else evaluate(x)
    return subproblem_value_of(spec, value)


def subproblem_optima(spec: SubproblemSpec) -> OptimalSetDescriptor:
    """
    Minimizers of h_i for z* = (n, n): the level D_{n-i}, i.e. the value
    (n-k+i, n-i). This covers the boundary problems too, h_0 is minimized by
    1^{n-k}0^k and h_H by 1^n.
    """
    inst = spec.inst
    if spec.z_star != ObjectivePair(inst.n, inst.n):
        raise ValueError(
            f"Subproblem optima are known for z*=({inst.n}, {inst.n}), got {spec.z_star}"
        )
    if spec.i == 0:
        label = "h_0: 1^(n-k)0^k"
    elif spec.i == spec.H:
        label = "h_H: 1^n"
    else:
        label = f"interior i={spec.i}"
    return OptimalSetDescriptor.of_levels(inst, [inst.n - spec.i], label=label)
