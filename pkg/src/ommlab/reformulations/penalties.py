# -*- coding: utf-8 -*-
#
# penalties.py
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
import sympy as sp

import fractions
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

from ..core.bitstrings import BitString
from ..core.onemaxmin import ObjectivePair, ProblemInstance
from .optimalsets import OptimalSetDescriptor


EXTERIOR = "exterior"
NONPARAMETER = "nonparameter"

RationalLike = Union[int, float, str, fractions.Fraction, sp.Rational]

# magnitude bounds under which dyadic penalty arithmetic is exact in doubles
_FLOAT_MAX_NUMERATOR = 2**26
_FLOAT_MAX_DENOMINATOR = 2**20


def as_rational(value: RationalLike) -> sp.Rational:
    """
    Exact rational of a number. Floats are taken at their exact binary
    value, strings are parsed as decimals ("5.25", "21/4").
    """
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("Boolean passed where a rational number is expected")
    if isinstance(value, (int, np.integer)):
        return sp.Integer(int(value))
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            raise ValueError(f"Expected a finite number, got {value}")
        return sp.Rational(float(value))
    if isinstance(value, fractions.Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return sp.Rational(fractions.Fraction(value.strip()))
    raise TypeError(f"Cannot convert {type(value)} to an exact rational")


def is_dyadic(value: sp.Rational) -> bool:
    q = int(value.q)
    return q & (q - 1) == 0


def _float_exact(value: sp.Rational) -> bool:
    return (
        is_dyadic(value)
        and abs(int(value.p)) < _FLOAT_MAX_NUMERATOR
        and int(value.q) <= _FLOAT_MAX_DENOMINATOR
    )


@dataclass(frozen=True)
class PenaltySpec:
    """
    Penalty reformulation of the constrained problem

        max f1(x)  s.t.  f2(x) >= eps

    as the unconstrained maximization of

        g(x) = f1(x) + r * min{0, f2(x) - eps}

    The nonparameter penalty adds the raw violation, which is the exterior
    penalty with r = 1.

    `eps` and `r` are stored as exact rationals. Dyadic values of moderate
    size are evaluated in floating point, where the arithmetic is exact,
    others in rational arithmetic.
    """

    inst: ProblemInstance
    eps: sp.Rational
    r: sp.Rational
    mode: str = EXTERIOR

    def __post_init__(self):
        eps, r = as_rational(self.eps), as_rational(self.r)
        if self.mode not in (EXTERIOR, NONPARAMETER):
            raise ValueError(
                f"Penalty mode must be '{EXTERIOR}' or '{NONPARAMETER}', got '{self.mode}'"
            )
        if r <= 0:
            raise ValueError(f"Penalty coefficient must be positive, got r={r}")
        if self.mode == NONPARAMETER and r != 1:
            raise ValueError(f"The nonparameter penalty fixes r=1, got r={r}")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "r", r)

    @classmethod
    def exterior(cls, inst: ProblemInstance, eps: RationalLike, r: RationalLike):
        return cls(inst, eps, r, mode=EXTERIOR)

    @classmethod
    def nonparameter(cls, inst: ProblemInstance, eps: RationalLike):
        return cls(inst, eps, sp.Integer(1), mode=NONPARAMETER)

    @property
    def float_exact(self) -> bool:
        return _float_exact(self.eps) and _float_exact(self.r)

    @property
    def eps_ceil(self) -> int:
        return int(sp.ceiling(self.eps))

    def is_feasible(self, value: ObjectivePair) -> bool:
        # f2 is integral, so f2 >= eps iff f2 >= ceil(eps)
        return value[1] >= self.eps_ceil

    def __str__(self):
        return f"{self.mode} penalty (eps={self.eps}, r={self.r}) on {self.inst}"


def penalty_of_value(spec: PenaltySpec, value: ObjectivePair):
    """
    Penalty value from an objective pair, a float when `spec.float_exact`
    and a sympy Rational otherwise
    """
    f1, f2 = value
    if spec.is_feasible(value):
        return float(f1) if spec.float_exact else sp.Integer(f1)
    if spec.float_exact:
        return f1 + float(spec.r) * (f2 - float(spec.eps))
    return f1 + spec.r * (f2 - spec.eps)


def penalty_value(
    spec: PenaltySpec,
    x: BitString,
    evaluate: Optional[Callable[[BitString], ObjectivePair]] = None,
):
    value = spec.inst.evaluate(x) if evaluate is None else evaluate(x)
    return penalty_of_value(spec, value)


@dataclass(frozen=True)
class PenaltyThresholds:
    """
    Penalty coefficients separating the optimal set regimes of the exterior
    penalty for n-k < eps < n

        r1 = (ceil(eps) - (n-k)) / (eps - (n-k))
        r2 = 1 / (eps + 1 - ceil(eps))

    with 1 <= r1 <= r2. r1 = 1 iff eps is integral, r1 = r2 iff eps is
    integral or ceil(eps) = n-k+1.
    """

    r1: sp.Rational
    r2: sp.Rational

    def as_floats(self) -> Tuple[float, float]:
        return float(self.r1), float(self.r2)


def penalty_thresholds(inst: ProblemInstance, eps: RationalLike) -> PenaltyThresholds:
    eps = as_rational(eps)
    lo, hi = inst.n - inst.k, inst.n
    if not lo < eps < hi:
        raise ValueError(
            f"Penalty thresholds are defined for {lo} < eps < {hi}, got eps={eps}"
        )
    c = sp.ceiling(eps)
    return PenaltyThresholds(r1=(c - lo) / (eps - lo), r2=1 / (eps + 1 - c))


def exterior_case(spec: PenaltySpec) -> Tuple[str, List[int]]:
    """
    Analytic optimal set of the exterior penalty problem.

    On the Pareto level D_i the penalty equals 2n-k-i for i >= eps and
    2n-k-r*eps+(r-1)*i below, so the optimum is decided by eps against n-k
    and n, the integrality of eps and r against 1, r1 and r2. All
    comparisons are exact.

    Returns
    -------
    (str, list of int)
        The case label and the optimal levels
    """
    inst, eps, r = spec.inst, spec.eps, spec.r
    n, k = inst.n, inst.k
    lo = n - k

    if eps <= lo:
        return "eps<=n-k", [lo]
    if eps >= n:
        if r > 1:
            return "eps>=n, r>1", [n]
        if r == 1:
            return "eps>=n, r=1", list(range(lo, n + 1))
        return "eps>n-k, r<1", [lo]
    if r < 1:
        return "eps>n-k, r<1", [lo]

    c = int(sp.ceiling(eps))
    if r == 1:
        if eps.is_integer:
            return "n-k<eps<n integral, r=1", list(range(lo, c + 1))
        return "n-k<eps<n fractional, r=1", list(range(lo, c))

    thresholds = penalty_thresholds(inst, eps)
    r1, r2 = thresholds.r1, thresholds.r2
    low_eps = eps <= lo + 1
    if r < r1:
        if low_eps:
            return "n-k<eps<=n-k+1, 1<r<r1", [lo]
        return "n-k+1<eps<n, 1<r<=r1", [c - 1]
    if r == r1:
        if low_eps:
            return "n-k<eps<=n-k+1, r=r1", [lo, c]
        return "n-k+1<eps<n, 1<r<=r1", [c - 1]
    if r < r2:
        return "n-k<eps<n, r1<r<r2", [c - 1]
    if r == r2:
        return "n-k<eps<n, r=r2", [c - 1, c]
    return "n-k<eps<n, r>r2", [c]


def exterior_optima(spec: PenaltySpec) -> OptimalSetDescriptor:
    if spec.mode != EXTERIOR:
        raise ValueError("exterior_optima expects an exterior penalty spec")
    label, levels = exterior_case(spec)
    return OptimalSetDescriptor.of_levels(spec.inst, levels, label=label)


def nonparameter_optima(
    inst: ProblemInstance, eps: RationalLike
) -> OptimalSetDescriptor:
    label, levels = exterior_case(PenaltySpec.exterior(inst, eps, 1))
    return OptimalSetDescriptor.of_levels(inst, levels, label=f"nonparameter {label}")


def optimal_penalty_set(spec: PenaltySpec) -> OptimalSetDescriptor:
    """Analytic optimal set of either penalty mode"""
    if spec.mode == NONPARAMETER:
        return nonparameter_optima(spec.inst, spec.eps)
    return exterior_optima(spec)


def constrained_optima(
    inst: ProblemInstance, eps: RationalLike
) -> OptimalSetDescriptor:
    """
    Optimal set of max f1 s.t. f2 >= eps: infeasible above n, 1^n up to
    n-k, otherwise the level ceil(eps) with value (2n-k-ceil(eps), ceil(eps))
    """
    eps = as_rational(eps)
    n, k = inst.n, inst.k
    if eps > n:
        return OptimalSetDescriptor.infeasible_set(inst)
    if eps <= n - k:
        return OptimalSetDescriptor.of_levels(inst, [n - k], label="eps<=n-k")
    return OptimalSetDescriptor.of_levels(
        inst, [int(sp.ceiling(eps))], label="n-k<eps<=n"
    )


def penalty_is_proper(eps: RationalLike, r: RationalLike) -> bool:
    """r > 1 / (eps + 1 - ceil(eps)), the coefficient range recovering the
    constrained optimum"""
    eps, r = as_rational(eps), as_rational(r)
    return r * (eps + 1 - sp.ceiling(eps)) > 1


def optima_coincide(inst: ProblemInstance, eps: RationalLike, r: RationalLike) -> bool:
    """
    Predicts whether the exterior penalty and the constrained problem have
    the same optimal set: always for eps <= n-k, for n-k < eps <= n iff the
    coefficient is proper, never above n (the constrained problem is
    infeasible there).
    """
    eps = as_rational(eps)
    if eps <= inst.n - inst.k:
        return True
    if eps > inst.n:
        return False
    return penalty_is_proper(eps, r)


def coverage_schedule(
    inst: ProblemInstance, r: RationalLike = 3
) -> List[PenaltySpec]:
    """
    Exterior penalty specs whose optima together cover the Pareto front:
    eps_0 = n-k and eps_i = n-k+i-1/2 for i in 1..k, so that spec i has the
    optimal level D_{n-k+i} whenever r > 2.
    """
    n, k = inst.n, inst.k
    eps_list = [sp.Integer(n - k)] + [
        sp.Integer(n - k + i) - sp.Rational(1, 2) for i in range(1, k + 1)
    ]
    return [PenaltySpec.exterior(inst, eps, r) for eps in eps_list]


def best_constrained_member(
    values, eps: RationalLike
) -> Optional[ObjectivePair]:
    """
    Best value of the constrained problem within a set of values, e.g. the
    value set of a covering population. None if no value is feasible.
    """
    eps = as_rational(eps)
    feasible = [ObjectivePair(*v) for v in values if v[1] >= eps]
    if len(feasible) == 0:
        return None
    return max(feasible)
