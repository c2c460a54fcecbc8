# -*- coding: utf-8 -*-
#
# test_penalties.py
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

import pytest
from fractions import Fraction

from ommlab import BitString, ProblemInstance, PenaltySpec
from ommlab import penalty_value, penalty_thresholds
from ommlab import exterior_optima, nonparameter_optima, constrained_optima
from ommlab import coverage_schedule, optima_coincide
from ommlab.reformulations.penalties import (
    as_rational,
    best_constrained_member,
    exterior_case,
    optimal_penalty_set,
    penalty_is_proper,
    penalty_of_value,
)

import bruteforce_for_tests as bf


class TestPenaltyValue:
    def create_instance(self):
        self.inst = ProblemInstance(8, 4)

    def test_examples(self):
        self.create_instance()
        spec = PenaltySpec.exterior(self.inst, 5.25, 3)
        assert penalty_value(spec, BitString.ones(8)) == 4.25

        feasible = BitString("11111100")
        assert self.inst.evaluate(feasible) == (6, 6)
        assert penalty_value(spec, feasible) == 6

        nonparam = PenaltySpec.nonparameter(self.inst, 5.25)
        unit = PenaltySpec.exterior(self.inst, 5.25, 1)
        assert penalty_value(nonparam, BitString.ones(8)) == 6.75
        assert penalty_value(unit, BitString.ones(8)) == 6.75

    def test_exact_rational_path(self):
        self.create_instance()
        # r1 of eps = 5.25 is 8/5, not representable in binary
        spec = PenaltySpec.exterior(self.inst, "21/4", "8/5")
        assert not spec.float_exact
        g = penalty_of_value(spec, (8, 4))
        assert g == 8 - sp.Rational(8, 5) * sp.Rational(5, 4)
        assert g == 6

    def test_validation(self):
        self.create_instance()
        with pytest.raises(ValueError):
            PenaltySpec.exterior(self.inst, 5, 0)
        with pytest.raises(ValueError):
            PenaltySpec(self.inst, 5, 2, mode="nonparameter")
        with pytest.raises(ValueError):
            PenaltySpec(self.inst, 5, 2, mode="interior")
        with pytest.raises(TypeError):
            as_rational(True)
        assert as_rational("4.5") == sp.Rational(9, 2)
        assert as_rational(Fraction(1, 3)) == sp.Rational(1, 3)
        assert as_rational(0.1) != sp.Rational(1, 10)

    def test_feasible_penalty_is_f1(self):
        for n, k in [(6, 3), (8, 4)]:
            inst = ProblemInstance(n, k)
            for eps in ["2", "4.5", "5.25", "6"]:
                spec = PenaltySpec.exterior(inst, eps, 3)
                for value in bf.value_set(n, k):
                    if value[1] >= Fraction(eps):
                        assert penalty_of_value(spec, value) == value[0]


class TestThresholds:
    def test_examples(self):
        inst = ProblemInstance(8, 4)
        th = penalty_thresholds(inst, 5.25)
        assert th.r1 == sp.Rational(8, 5)
        assert th.r2 == 4
        assert th.as_floats() == pytest.approx((1.6, 4.0))

        th = penalty_thresholds(inst, 4.5)
        assert th.r1 == th.r2 == 2

        th = penalty_thresholds(inst, 5)
        assert th.r1 == th.r2 == 1

    def test_domain(self):
        inst = ProblemInstance(8, 4)
        for eps in [4, 3.5, 8, 9]:
            with pytest.raises(ValueError):
                penalty_thresholds(inst, eps)

    def test_ordering(self):
        inst = ProblemInstance(10, 6)
        for num in range(17, 40):
            eps = sp.Rational(num, 4)
            th = penalty_thresholds(inst, eps)
            assert 1 <= th.r1 <= th.r2
            assert (th.r1 == 1) == bool(eps.is_integer)
            assert (th.r1 == th.r2) == (bool(eps.is_integer) or sp.ceiling(eps) == 5)


class TestExteriorOptima:
    def brute(self, inst, eps, r):
        return bf.argmax_values(bf.value_set(inst.n, inst.k), bf.exterior_penalty(eps, r))

    def test_examples(self):
        inst = ProblemInstance(8, 4)
        assert exterior_optima(PenaltySpec.exterior(inst, 5.25, 5)).values() == [(6, 6)]
        low = exterior_optima(PenaltySpec.exterior(inst, 5.25, 0.5))
        assert low.values() == [(8, 4)]
        assert [str(x) for x in low.expand()] == ["11111111"]
        assert exterior_optima(PenaltySpec.exterior(inst, 5.25, 2)).values() == [(7, 5)]

        for eps, r in [("21/4", 5), ("21/4", "1/2"), ("21/4", 2)]:
            desc = exterior_optima(PenaltySpec.exterior(inst, eps, r))
            assert set(desc.values()) == self.brute(inst, Fraction(eps), Fraction(r))

    def test_case_labels_cover_all_regimes(self):
        inst = ProblemInstance(8, 4)
        cases = {
            ("3", "3"): "eps<=n-k",
            ("9", "2"): "eps>=n, r>1",
            ("8", "1"): "eps>=n, r=1",
            ("6.5", "1/2"): "eps>n-k, r<1",
            ("6", "1"): "n-k<eps<n integral, r=1",
            ("6.5", "1"): "n-k<eps<n fractional, r=1",
            ("4.75", "1.1"): "n-k<eps<=n-k+1, 1<r<r1",
            ("5.25", "1.5"): "n-k+1<eps<n, 1<r<=r1",
            ("4.75", "4/3"): "n-k<eps<=n-k+1, r=r1",
            ("5.25", "2"): "n-k<eps<n, r1<r<r2",
            ("5.25", "4"): "n-k<eps<n, r=r2",
            ("5.25", "5"): "n-k<eps<n, r>r2",
        }
        for (eps, r), label in cases.items():
            spec = PenaltySpec.exterior(inst, eps, r)
            got, levels = exterior_case(spec)
            assert got == label
            assert set(inst.level_value(i) for i in levels) == self.brute(
                inst, Fraction(eps), Fraction(r)
            )

    def test_knife_edges_match_brute_force(self):
        for n, k in [(6, 2), (6, 3), (8, 4)]:
            inst = ProblemInstance(n, k)
            for num in range(4 * (n - k) + 1, 4 * n):
                eps = sp.Rational(num, 4)
                th = penalty_thresholds(inst, eps)
                for r in [th.r1, th.r2, (th.r1 + th.r2) / 2, th.r2 + 1]:
                    desc = exterior_optima(PenaltySpec.exterior(inst, eps, r))
                    brute = self.brute(inst, Fraction(num, 4), Fraction(int(r.p), int(r.q)))
                    assert set(desc.values()) == brute

    def test_mode_check(self):
        inst = ProblemInstance(8, 4)
        with pytest.raises(ValueError):
            exterior_optima(PenaltySpec.nonparameter(inst, 5))


class TestNonparameterAndConstrained:
    def test_nonparameter_examples(self):
        inst = ProblemInstance(8, 4)
        assert nonparameter_optima(inst, 9).is_pareto_set
        assert nonparameter_optima(inst, 3).values() == [(8, 4)]
        mid = nonparameter_optima(inst, 5.25)
        assert mid.values() == [(8, 4), (7, 5)]
        assert not mid.same_set(constrained_optima(inst, 5.25))
        assert optimal_penalty_set(PenaltySpec.nonparameter(inst, 5.25)).same_set(mid)

    def test_constrained_examples(self):
        inst = ProblemInstance(8, 4)
        assert constrained_optima(inst, 3).values() == [(8, 4)]
        assert constrained_optima(inst, 9).infeasible
        assert constrained_optima(inst, 5.25).values() == [(6, 6)]
        assert constrained_optima(inst, 8).values() == [(4, 8)]

    def test_constrained_matches_brute_force(self):
        for n, k in [(6, 2), (8, 4)]:
            inst = ProblemInstance(n, k)
            values = bf.value_set(n, k)
            for num in range(-2, 2 * n + 4):
                eps = Fraction(num, 2)
                desc = constrained_optima(inst, str(eps))
                assert set(desc.values()) == bf.constrained_optimum(values, eps)

    def test_identity_region(self):
        # nonparameter (r = 1) differs from the constrained optimum above n-k
        for n, k in [(6, 2), (6, 3), (8, 4)]:
            inst = ProblemInstance(n, k)
            values = bf.value_set(n, k)
            for num in range(2 * (n - k) - 3, 2 * n + 3):
                eps = Fraction(num, 2)
                brute_np = bf.argmax_values(values, bf.exterior_penalty(eps, 1))
                assert set(nonparameter_optima(inst, str(eps)).values()) == brute_np
                same = brute_np == bf.constrained_optimum(values, eps)
                assert same == (eps <= n - k)
                assert optima_coincide(inst, str(eps), 1) == same

    def test_optima_coincide(self):
        inst = ProblemInstance(8, 4)
        assert optima_coincide(inst, 3, 0.5)
        assert optima_coincide(inst, 5.25, 5)
        assert not optima_coincide(inst, 5.25, 4)
        assert not optima_coincide(inst, 5.25, 2)
        assert optima_coincide(inst, 8, 2)
        assert not optima_coincide(inst, 8, 1)
        assert not optima_coincide(inst, 9, 5)
        assert penalty_is_proper(5.5, 3)
        assert not penalty_is_proper(5.5, 2)

    def test_best_constrained_member(self):
        values = [(8, 4), (7, 5), (6, 6), (5, 7)]
        assert best_constrained_member(values, 5.25) == (6, 6)
        assert best_constrained_member(values, 3) == (8, 4)
        assert best_constrained_member(values, 7.5) is None


class TestCoverageSchedule:
    def test_examples(self):
        inst = ProblemInstance(6, 3)
        specs = coverage_schedule(inst)
        assert [float(spec.eps) for spec in specs] == [3.0, 3.5, 4.5, 5.5]
        assert all(spec.r == 3 for spec in specs)
        targets = [exterior_optima(spec).values() for spec in specs]
        assert targets == [[(6, 3)], [(5, 4)], [(4, 5)], [(3, 6)]]

        specs = coverage_schedule(ProblemInstance(5, 0))
        assert len(specs) == 1
        assert specs[0].eps == 5
        assert exterior_optima(specs[0]).values() == [(5, 5)]

    def test_improper_coefficient(self):
        # with r < 1 the schedule only ever finds 1^n
        for n, k in [(6, 2), (6, 4), (8, 4)]:
            inst = ProblemInstance(n, k)
            values = bf.value_set(n, k)
            reached = set()
            for spec in coverage_schedule(inst, r=0.5):
                brute = bf.argmax_values(values, bf.exterior_penalty(Fraction(str(spec.eps)), "1/2"))
                reached |= brute
                assert set(exterior_optima(spec).values()) == brute
            assert len(reached) <= 2
