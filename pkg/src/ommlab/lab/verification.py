# -*- coding: utf-8 -*-
#
# verification.py
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

import functools
from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple

from ..factorydefaults import LabParams
from ..core.bitstrings import BitString, enumerate_bitstrings
from ..core.onemaxmin import (
    ObjectivePair,
    ProblemInstance,
    longest_antichain,
    nondominated_values,
)
from ..reformulations.decomposition import SubproblemSpec, subproblem_optima
from ..reformulations.optimalsets import OptimalSetDescriptor
from ..reformulations.penalties import (
    PenaltySpec,
    constrained_optima,
    coverage_schedule,
    exterior_optima,
    nonparameter_optima,
    optima_coincide,
    penalty_of_value,
    penalty_thresholds,
)
from ..reformulations.scalarization import (
    ScalarizationSpec,
    count_reachable_front_points,
    exact_weight,
    scalarization_optima,
    scalarize_value,
)
from .records import CheckResult, VerificationReport


SCOPES = ["benchmark", "scalarization", "penalty", "subproblems"]

# bitstrings per instance on which the per-solution operations are called
_SAMPLE_ROWS = 1024
# largest n whose penalty values are cross-checked in rational arithmetic
_EXACT_PENALTY_N = 6
# weight grid of the scalarization checks, w = a / _WEIGHT_STEPS
_WEIGHT_STEPS = 100


class _Check:
    """Accumulates cases of one named check, keeping the first failure"""

    def __init__(self, name: str, scope: str):
        self.name = name
        self.scope = scope
        self.n_cases = 0
        self.counterexample: Optional[str] = None

    def record(self, ok: bool, describe: Callable[[], str]):
        self.n_cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = describe()

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            scope=self.scope,
            passed=self.counterexample is None,
            n_cases=self.n_cases,
            counterexample=self.counterexample,
        )


@functools.lru_cache(maxsize=4)
def _bitstrings(n: int) -> np.ndarray:
    return enumerate_bitstrings(n)


@functools.lru_cache(maxsize=64)
def _distinct_values(n: int, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """Distinct (f1, f2) pairs over all of {0,1}^n, by enumeration"""
    f1, f2 = ProblemInstance(n, k).evaluate_array(_bitstrings(n))
    pairs = np.unique(np.stack([f1, f2], axis=1), axis=0)
    return pairs[:, 0], pairs[:, 1]


def _pairs(f1: np.ndarray, f2: np.ndarray, mask: Optional[np.ndarray] = None) -> Set[ObjectivePair]:
    if mask is not None:
        f1, f2 = f1[mask], f2[mask]
    return {ObjectivePair(int(a), int(b)) for a, b in zip(f1, f2)}


def _argmax(f1: np.ndarray, f2: np.ndarray, score: np.ndarray) -> Set[ObjectivePair]:
    return _pairs(f1, f2, score == score.max())


def _fmt(values: Iterable[ObjectivePair]) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def _instances(n_lo: int, n_max: int, k_min: int = 0):
    for n in range(n_lo, n_max + 1):
        for k in range(k_min, n + 1):
            yield ProblemInstance(n, k)


def _sample_rows(n: int) -> np.ndarray:
    bits = _bitstrings(n)
    if bits.shape[0] <= _SAMPLE_ROWS:
        return bits
    idx = np.linspace(0, bits.shape[0] - 1, _SAMPLE_ROWS).astype(np.int64)
    return bits[idx]


def _descriptor_matches(
    descriptor: OptimalSetDescriptor, brute: Set[ObjectivePair]
) -> bool:
    if descriptor.infeasible:
        return len(brute) == 0
    return set(descriptor.values()) == brute


def check_benchmark(n_max: int) -> List[CheckResult]:
    """
    Front, antichain bound, objective identities and the Pareto test
    against enumeration of {0,1}^n
    """
    front = _Check("Pareto front equals the nondominated values", "benchmark")
    antichain = _Check("longest antichain has k+1 values", "benchmark")
    realized = _Check("realized values match the enumeration", "benchmark")
    identities = _Check("f1+f2 = 2|x_head|+k and f1-f2 = 2|x_tail|-k", "benchmark")
    pareto_test = _Check("is_pareto_optimal iff x_head = 1^(n-k)", "benchmark")

    for inst in _instances(1, n_max):
        n, k = inst.n, inst.k
        f1, f2 = _distinct_values(n, k)
        values = sorted(_pairs(f1, f2))

        nondominated = nondominated_values(values)
        expected = list(inst.pareto_front())
        front.record(
            sorted(nondominated) == sorted(expected),
            lambda: f"{inst}: nondominated {_fmt(nondominated)} vs front {_fmt(expected)}",
        )
        chain = longest_antichain(values)
        antichain.record(
            chain == inst.max_antichain_size() == k + 1,
            lambda: f"{inst}: longest antichain {chain}, expected {k + 1}",
        )
        realized.record(
            inst.realized_values() == values,
            lambda: f"{inst}: realized {_fmt(inst.realized_values())} vs {_fmt(values)}",
        )

        bits = _bitstrings(n)
        a1, a2 = inst.evaluate_array(bits)
        head = bits[:, : n - k].sum(axis=1, dtype=np.int64)
        tail = bits[:, n - k :].sum(axis=1, dtype=np.int64)
        bad = np.flatnonzero((a1 + a2 != 2 * head + k) | (a1 - a2 != 2 * tail - k))
        identities.record(
            bad.size == 0,
            lambda: f"{inst}: x={BitString(bits[bad[0]])}",
        )

        for row in _sample_rows(n):
            x = BitString(row)
            value = inst.evaluate(x)
            expected_optimal = bool(np.all(row[: n - k]))
            identities.record(
                value == (int(row.sum()), 2 * int(row[: n - k].sum()) + k - int(row.sum())),
                lambda: f"{inst}: evaluate({x}) = {value}",
            )
            optimal = inst.is_pareto_optimal(x)
            pareto_test.record(
                optimal == expected_optimal == inst.is_pareto_value(value),
                lambda: f"{inst}: x={x} is_pareto_optimal={optimal}",
            )

    return [front.result(), antichain.result(), realized.result(),
            identities.result(), pareto_test.result()]


def check_scalarization(n_max: int) -> List[CheckResult]:
    """
    Weighted-sum optima on the weight grid 0, 0.01, ..., 1 and the bound
    of three reachable front points
    """
    optima = _Check("weighted-sum optima", "scalarization")
    identity = _Check("weighted sum = |x_head| + (2w-1)|x_tail| + k(1-w)", "scalarization")
    reach = _Check("at most three front points reachable", "scalarization")

    weights = [a / _WEIGHT_STEPS for a in range(_WEIGHT_STEPS + 1)]
    for inst in _instances(1, n_max):
        n, k = inst.n, inst.k
        f1, f2 = _distinct_values(n, k)
        optimal_sets = []
        for w in weights:
            exact = exact_weight(w)
            p, q = int(exact.p), int(exact.q)
            # q * (w f1 + (1-w) f2), exact in integers
            brute = _argmax(f1, f2, p * f1 + (q - p) * f2)
            optimal_sets.append(brute)
            spec = ScalarizationSpec(inst, w)
            descriptor = scalarization_optima(spec)
            optima.record(
                _descriptor_matches(descriptor, brute),
                lambda: f"{inst}, w={w}: predicted {descriptor}, brute force {_fmt(brute)}",
            )
            for a, b in zip(f1, f2):
                value = ObjectivePair(int(a), int(b))
                head = (value.f1 + value.f2 - k) // 2
                tail = value.f1 - head
                predicted = head + (2 * w - 1) * tail + k * (1 - w)
                got = scalarize_value(spec, value)
                identity.record(
                    abs(got - predicted) <= 1e-9 * max(1.0, abs(predicted)),
                    lambda: f"{inst}, w={w}, f={value}: {got} vs {predicted}",
                )
        reached = count_reachable_front_points(inst, optimal_sets)
        reach.record(
            reached <= 3,
            lambda: f"{inst}: {reached} front points reachable over the weight grid",
        )
    return [optima.result(), identity.result(), reach.result()]


def epsilon_grid(inst: ProblemInstance) -> List[sp.Rational]:
    """
    Constraint levels covering every regime: below and at n-k, quarter
    points of each unit interval up to n, and above n
    """
    n, k = inst.n, inst.k
    lo = n - k
    grid = {sp.Integer(lo) - sp.Rational(3, 2), sp.Integer(lo)}
    for j in range(1, k + 1):
        for frac in (sp.Rational(1, 4), sp.Rational(1, 2), sp.Rational(3, 4), 1):
            grid.add(sp.Integer(lo + j - 1) + frac)
    grid |= {sp.Integer(n) + sp.Rational(1, 2), sp.Integer(n + 2)}
    return sorted(grid)


def coefficient_grid(inst: ProblemInstance, eps: sp.Rational) -> List[sp.Rational]:
    """
    Penalty coefficients around the thresholds r1 and r2 of eps, or a
    small fixed set outside n-k < eps < n
    """
    half = sp.Rational(1, 2)
    if not inst.n - inst.k < eps < inst.n:
        return [half, sp.Integer(1), sp.Integer(2), sp.Integer(3)]
    th = penalty_thresholds(inst, eps)
    r1, r2 = th.r1, th.r2
    below_r1 = r1 - (r1 - 1) / 2 if r1 > 1 else sp.Rational(3, 4)
    grid = {half, sp.Integer(1), below_r1, r1, (r1 + r2) / 2, r2, r2 + 1}
    return sorted(r for r in grid if r > 0)


def _penalty_argmax(f1: np.ndarray, f2: np.ndarray, eps: sp.Rational, r: sp.Rational):
    ep, eq = int(eps.p), int(eps.q)
    rp, rq = int(r.p), int(r.q)
    # eq * rq * (f1 + r * min(0, f2 - eps)), exact in integers
    score = eq * rq * f1 + rp * np.minimum(0, eq * f2 - ep)
    return _argmax(f1, f2, score)


def _constrained_argmax(f1: np.ndarray, f2: np.ndarray, eps: sp.Rational):
    ep, eq = int(eps.p), int(eps.q)
    feasible = eq * f2 >= ep
    if not feasible.any():
        return set()
    return _pairs(f1, f2, feasible & (f1 == f1[feasible].max()))


def check_penalty(n_max: int) -> List[CheckResult]:
    """
    Exterior and nonparameter penalty optima, thresholds, the constrained
    problem and the identity region over the (eps, r) grids
    """
    scope = "penalty"
    thresholds = _Check("1 <= r1 <= r2 with the integral and first-interval cases", scope)
    exterior = _Check("exterior penalty optima", scope)
    nonparameter = _Check("nonparameter penalty optima", scope)
    evaluation = _Check("penalty equals f1 on feasible values, r=1 modes agree", scope)
    constrained = _Check("constrained problem optima", scope)
    coincide = _Check("penalty and constrained optima coincide as predicted", scope)
    improper = _Check("coefficients r < 1 reach at most two front points", scope)
    schedule = _Check("coverage schedule optima cover the front", scope)

    for inst in _instances(1, n_max):
        n, k = inst.n, inst.k
        lo = n - k
        f1, f2 = _distinct_values(n, k)
        values = sorted(_pairs(f1, f2))
        improper_reach: Set[ObjectivePair] = set()

        for eps in epsilon_grid(inst):
            if lo < eps < n:
                th = penalty_thresholds(inst, eps)
                ok = bool(1 <= th.r1 <= th.r2)
                ok &= (th.r1 == 1) == bool(eps.is_integer)
                ok &= (th.r1 == th.r2) == (bool(eps.is_integer) or sp.ceiling(eps) == lo + 1)
                thresholds.record(ok, lambda: f"{inst}, eps={eps}: r1={th.r1}, r2={th.r2}")

            brute_constrained = _constrained_argmax(f1, f2, eps)
            descriptor = constrained_optima(inst, eps)
            constrained.record(
                _descriptor_matches(descriptor, brute_constrained),
                lambda: f"{inst}, eps={eps}: predicted {descriptor}, "
                f"brute force {_fmt(brute_constrained)}",
            )

            brute_r1 = _penalty_argmax(f1, f2, eps, sp.Integer(1))
            np_descriptor = nonparameter_optima(inst, eps)
            nonparameter.record(
                _descriptor_matches(np_descriptor, brute_r1),
                lambda: f"{inst}, eps={eps}: predicted {np_descriptor}, "
                f"brute force {_fmt(brute_r1)}",
            )

            for r in coefficient_grid(inst, eps):
                spec = PenaltySpec.exterior(inst, eps, r)
                brute = _penalty_argmax(f1, f2, eps, r)
                descriptor = exterior_optima(spec)
                exterior.record(
                    _descriptor_matches(descriptor, brute),
                    lambda: f"{inst}, eps={eps}, r={r}: predicted {descriptor} "
                    f"[{descriptor.label}], brute force {_fmt(brute)}",
                )
                predicted = optima_coincide(inst, eps, r)
                coincide.record(
                    predicted == (brute == brute_constrained),
                    lambda: f"{inst}, eps={eps}, r={r}: predicted coincide={predicted}, "
                    f"penalty {_fmt(brute)} vs constrained {_fmt(brute_constrained)}",
                )
                if r < 1:
                    improper_reach |= {v for v in brute if inst.is_pareto_value(v)}

                if n <= _EXACT_PENALTY_N:
                    nonparam_spec = PenaltySpec.nonparameter(inst, eps)
                    unit_spec = PenaltySpec.exterior(inst, eps, 1)
                    for value in values:
                        g = penalty_of_value(spec, value)
                        exact = value.f1 + r * sp.Min(0, value.f2 - eps)
                        ok = sp.Rational(g) == exact
                        if spec.is_feasible(value):
                            ok &= g == value.f1
                        ok &= penalty_of_value(nonparam_spec, value) == penalty_of_value(
                            unit_spec, value
                        )
                        evaluation.record(
                            ok,
                            lambda: f"{inst}, eps={eps}, r={r}, f={value}: g={g}, exact {exact}",
                        )

        if k >= 2:
            improper.record(
                len(improper_reach) <= 2,
                lambda: f"{inst}: r<1 reaches {_fmt(improper_reach)}",
            )

        covered: Set[ObjectivePair] = set()
        for i, spec in enumerate(coverage_schedule(inst)):
            brute = _penalty_argmax(f1, f2, spec.eps, spec.r)
            covered |= brute
            expected = {inst.level_value(lo + i)}
            schedule.record(
                brute == expected,
                lambda: f"{inst}, eps={spec.eps}: optima {_fmt(brute)}, expected {_fmt(expected)}",
            )
        schedule.record(
            covered == set(inst.pareto_front()),
            lambda: f"{inst}: schedule covers {_fmt(covered)}",
        )

    return [thresholds.result(), exterior.result(), nonparameter.result(),
            evaluation.result(), constrained.result(), coincide.result(),
            improper.result(), schedule.result()]


def check_subproblems(n_max: int) -> List[CheckResult]:
    optima = _Check("Tchebycheff subproblem optima for z*=(n,n)", "subproblems")
    for inst in _instances(1, n_max):
        n, k = inst.n, inst.k
        f1, f2 = _distinct_values(n, k)
        d1, d2 = np.abs(f1 - n), np.abs(f2 - n)
        for i in range(k + 1):
            # k * h_i, h_0 itself for k = 0
            scaled = d2 if k == 0 else np.maximum(i * d1, (k - i) * d2)
            brute = _argmax(f1, f2, -scaled)
            descriptor = subproblem_optima(SubproblemSpec(inst, i))
            optima.record(
                _descriptor_matches(descriptor, brute),
                lambda: f"{inst}, i={i}: predicted {descriptor}, brute force {_fmt(brute)}",
            )
    return [optima.result()]


_SCOPE_CHECKS: Dict[str, Callable[[int], List[CheckResult]]] = {
    "benchmark": check_benchmark,
    "scalarization": check_scalarization,
    "penalty": check_penalty,
    "subproblems": check_subproblems,
}


def verify(scope: str = "all", n_max: int = 10, pprint: bool = False) -> VerificationReport:
    """
    Check the analytic characterizations against exhaustive enumeration of
    every instance with n <= n_max and 0 <= k <= n.

    Parameters
    ----------
    scope: str
        One of "benchmark", "scalarization", "penalty", "subproblems" or
        "all"
    n_max: int
        Largest bitstring length, at most `LabParams.n_max_enumeration`
    pprint: bool
        Print every check as it finishes

    Returns
    -------
    `VerificationReport`
    """
    limit = LabParams().n_max_enumeration
    if n_max > limit:
        raise ValueError(
            f"n_max={n_max} exceeds the enumeration limit {limit} (2^n bitstrings per instance)"
        )
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    if scope == "all":
        scopes = SCOPES
    elif scope in _SCOPE_CHECKS:
        scopes = [scope]
    else:
        raise ValueError(f"Unknown scope '{scope}', choose from {SCOPES + ['all']}")

    report = VerificationReport(scope=scope, n_max=n_max)
    for name in scopes:
        if pprint:
            print(f">>> verifying {name} for n <= {n_max}")
        results = _SCOPE_CHECKS[name](n_max)
        report.checks.extend(results)
        if pprint:
            for check in results:
                status = "pass" if check.passed else "FAIL"
                print(f"    [{status}] {check.name} ({check.n_cases} cases)")
    return report
