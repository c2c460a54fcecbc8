# -*- coding: utf-8 -*-
#
# oracles.py
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

from ..core.bitstrings import BitString
from ..core.onemaxmin import ProblemInstance
from ..reformulations.decomposition import SubproblemSpec, subproblem_optima
from ..reformulations.penalties import (
    NONPARAMETER,
    PenaltySpec,
    constrained_optima,
    optimal_penalty_set,
    penalty_is_proper,
    penalty_thresholds,
)
from ..reformulations.scalarization import ScalarizationSpec, scalarization_optima


def _evaluate(n, k, x, pprint=True):
    """
    Evaluate a bitstring given as a string of 0/1 characters

    Returns
    -------
    `ObjectivePair`
    """
    inst = ProblemInstance(n, k)
    value = inst.evaluate(BitString.from_string(x))
    if pprint:
        print(f"({value.f1}, {value.f2})")
    return value


def _front(n, k, pprint=True):
    front = ProblemInstance(n, k).pareto_front()
    if pprint:
        for point in front:
            print(f"({point.f1}, {point.f2})")
    return front


def _oracle(kind, n, k, w=None, eps=None, r=None, i=None, mode=None, pprint=True):
    """
    Analytic optimal set of one reformulation, printed with its case label

    Parameters
    ----------
    kind: str
        "scalarization" (needs `w`), "penalty" (needs `eps` and `r` unless
        `mode` is "nonparameter"), "subproblem" (needs `i`) or
        "constrained" (needs `eps`)

    Returns
    -------
    `OptimalSetDescriptor`
    """
    inst = ProblemInstance(n, k)
    lines = [str(inst)]

    if kind == "scalarization":
        _require(w=w)
        descriptor = scalarization_optima(ScalarizationSpec(inst, w))
    elif kind == "penalty":
        if mode == NONPARAMETER:
            _require(eps=eps)
            spec = PenaltySpec.nonparameter(inst, eps)
        else:
            _require(eps=eps, r=r)
            spec = PenaltySpec.exterior(inst, eps, r)
        descriptor = optimal_penalty_set(spec)
        if inst.n - inst.k < spec.eps < inst.n:
            th = penalty_thresholds(inst, spec.eps)
            r1, r2 = th.as_floats()
            lines.append(f"r1 = {th.r1} ({r1:.6g}), r2 = {th.r2} ({r2:.6g})")
        lines.append(f"proper: {penalty_is_proper(spec.eps, spec.r)}")
    elif kind == "subproblem":
        _require(i=i)
        descriptor = subproblem_optima(SubproblemSpec(inst, i))
    elif kind == "constrained":
        _require(eps=eps)
        descriptor = constrained_optima(inst, eps)
    else:
        raise ValueError(f"Unknown oracle '{kind}'")

    lines.append(f"case: {descriptor.label}")
    lines.append(f"optimal set: {descriptor}")
    if pprint:
        print("\n".join(lines))
    return descriptor


def _require(**kwargs):
    missing = [f"--{key}" for key, val in kwargs.items() if val is None]
    if missing:
        raise ValueError(f"Missing arguments {missing}")
