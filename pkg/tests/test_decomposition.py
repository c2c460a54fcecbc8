# -*- coding: utf-8 -*-
#
# test_decomposition.py
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

from ommlab import BitString, ProblemInstance
from ommlab import SubproblemSpec, subproblem_value, subproblem_optima
from ommlab.reformulations.decomposition import scaled_subproblem_value

import bruteforce_for_tests as bf


class TestSubproblemValue:
    def create_instance(self):
        self.inst = ProblemInstance(6, 3)

    def test_examples(self):
        self.create_instance()
        spec = SubproblemSpec(self.inst, 1, (6, 6))
        assert subproblem_value(spec, BitString.ones(6)) == pytest.approx(2.0)

        x = BitString("111010")
        assert self.inst.evaluate(x) == (4, 5)
        assert subproblem_value(spec, x) == pytest.approx(2 / 3)
        assert scaled_subproblem_value(spec, (4, 5)) == 2

    def test_last_subproblem_is_f1_distance(self):
        self.create_instance()
        spec = SubproblemSpec(self.inst, 3)
        for x in bf.all_bitstrings(6):
            value = bf.objective(x, 3)
            assert subproblem_value(spec, BitString(x)) == pytest.approx(6 - value[0])

    def test_spec(self):
        self.create_instance()
        spec = SubproblemSpec(self.inst, 2)
        assert spec.z_star == (6, 6)
        assert spec.H == 3
        assert spec.weight == sp.Rational(2, 3)
        assert spec.with_reference((5, 6)).z_star == (5, 6)
        assert SubproblemSpec(ProblemInstance(4, 0), 0).weight == 0

        with pytest.raises(ValueError):
            SubproblemSpec(self.inst, -1)
        with pytest.raises(ValueError):
            SubproblemSpec(self.inst, 4)


class TestSubproblemOptima:
    def test_examples(self):
        inst = ProblemInstance(6, 3)
        assert subproblem_optima(SubproblemSpec(inst, 1)).values() == [(4, 5)]
        assert subproblem_optima(SubproblemSpec(inst, 2)).values() == [(5, 4)]
        h0 = subproblem_optima(SubproblemSpec(inst, 0))
        assert [str(x) for x in h0.expand()] == ["111000"]
        hH = subproblem_optima(SubproblemSpec(inst, 3))
        assert [str(x) for x in hH.expand()] == ["111111"]

    def test_optima_match_brute_force(self):
        for n in range(1, 9):
            for k in range(n + 1):
                inst = ProblemInstance(n, k)
                values = bf.value_set(n, k)
                for i in range(k + 1):
                    if k == 0:
                        brute = bf.argmin_values(values, lambda v: abs(v[1] - n))
                    else:
                        brute = bf.argmin_values(values, bf.tchebycheff(n, k, i))
                    assert set(subproblem_optima(SubproblemSpec(inst, i)).values()) == brute

    def test_optimal_value(self):
        # min h_i = i (k - i) / k
        inst = ProblemInstance(8, 4)
        for i in range(5):
            spec = SubproblemSpec(inst, i)
            value = subproblem_optima(spec).values()[0]
            assert scaled_subproblem_value(spec, value) == i * (4 - i)

    def test_shifted_reference_refused(self):
        inst = ProblemInstance(6, 3)
        with pytest.raises(ValueError):
            subproblem_optima(SubproblemSpec(inst, 1, (5, 6)))
