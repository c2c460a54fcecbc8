# -*- coding: utf-8 -*-
#
# test_bitstrings.py
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

import pytest

from ommlab import BitString, RngStream, split_seed
from ommlab import count_ones, one_bit_mutation, standard_bitwise_mutation
from ommlab import random_bitstring, enumerate_bitstrings


class TestBitString:
    def test_construction(self):
        x = BitString("0110")
        assert x.n == 4
        assert len(x) == 4
        assert str(x) == "0110"
        assert x == BitString([0, 1, 1, 0])
        assert x == BitString.from_string("0110")
        assert repr(x) == "BitString('0110')"
        assert str(BitString.ones(3)) == "111"
        assert str(BitString.zeros(2)) == "00"

        with pytest.raises(ValueError):
            BitString("0120")
        with pytest.raises(ValueError):
            BitString([0, 2])
        with pytest.raises(ValueError):
            BitString("")

    def test_immutable(self):
        x = BitString("0110")
        with pytest.raises(ValueError):
            x.bits[0] = 1
        assert str(x) == "0110"

    def test_bit_access_and_flip(self):
        x = BitString("0110")
        assert [x.bit(i) for i in range(1, 5)] == [0, 1, 1, 0]
        with pytest.raises(IndexError):
            x.bit(0)
        with pytest.raises(IndexError):
            x.bit(5)

        y = x.flip([1, 4])
        assert str(y) == "1111"
        assert str(x) == "0110"
        assert x.hamming(y) == 2
        with pytest.raises(IndexError):
            x.flip([5])

    def test_hash_and_equality(self):
        strings = {BitString("010"), BitString([0, 1, 0]), BitString("011")}
        assert len(strings) == 2
        assert BitString("01") != BitString("010")


class TestCountOnes:
    def test_examples(self):
        assert count_ones(BitString("111000"), 1, 6) == 3
        assert count_ones(BitString("111000"), 1, 3) == 3
        assert count_ones(BitString("110101"), 4, 6) == 2
        assert count_ones(BitString("110101"), 2, 2) == 1

    def test_range_errors(self):
        x = BitString("110101")
        for a, b in [(0, 3), (4, 3), (1, 7), (7, 7)]:
            with pytest.raises(IndexError):
                count_ones(x, a, b)


class TestMutation:
    def test_forced_one_bit_mutation(self):
        rng = RngStream(1)
        x = BitString("000")
        y = one_bit_mutation(x, rng, index=2)
        assert str(y) == "010"
        assert str(x) == "000"
        with pytest.raises(IndexError):
            one_bit_mutation(x, rng, index=4)

    def test_one_bit_mutation_flips_exactly_one(self):
        rng = RngStream(7)
        x = BitString("0101101100")
        positions = []
        for _ in range(2000):
            y = one_bit_mutation(x, rng)
            assert x.hamming(y) == 1
            positions.append(int(np.flatnonzero(x.bits != y.bits)[0]))
        # every position is drawn, roughly uniformly
        counts = np.bincount(positions, minlength=10)
        assert np.all(counts > 120)

    def test_standard_bitwise_mutation(self):
        rng = RngStream(11)
        n = 20
        x = BitString.zeros(n)
        flips = np.array([x.hamming(standard_bitwise_mutation(x, rng)) for _ in range(20000)])
        # Binomial(n, 1/n): mean 1, P(no flip) = (1 - 1/n)^n
        assert flips.mean() == pytest.approx(1.0, abs=0.03)
        assert np.mean(flips == 0) == pytest.approx((1 - 1 / n) ** n, abs=0.015)

    def test_determinism(self):
        x = BitString("0110100111")
        ys1 = [str(standard_bitwise_mutation(x, rng)) for rng in [RngStream(5)] for _ in range(50)]
        ys2 = [str(standard_bitwise_mutation(x, rng)) for rng in [RngStream(5)] for _ in range(50)]
        assert ys1 == ys2


class TestRandomBitstring:
    def test_single_bit(self):
        rng = RngStream(3)
        draws = [random_bitstring(1, rng).bit(1) for _ in range(10000)]
        assert np.mean(draws) == pytest.approx(0.5, abs=0.02)

    def test_mean_number_of_ones(self):
        rng = RngStream(4)
        ones = [int(random_bitstring(10, rng).bits.sum()) for _ in range(100000)]
        assert np.mean(ones) == pytest.approx(5.0, abs=0.05)

    def test_same_seed_same_bitstring(self):
        assert random_bitstring(30, RngStream(99)) == random_bitstring(30, RngStream(99))
        with pytest.raises(ValueError):
            random_bitstring(0, RngStream(1))


class TestSeeds:
    def test_split_seed(self):
        seed = split_seed(20240101, 3, 7)
        assert seed == split_seed(20240101, 3, 7)
        assert 0 <= seed < 2**64
        others = {split_seed(20240101, c, t) for c in range(5) for t in range(20)}
        assert len(others) == 100
        assert split_seed(1, 0, 0) != split_seed(2, 0, 0)

        with pytest.raises(ValueError):
            split_seed(-1, 0)
        with pytest.raises(ValueError):
            split_seed(2**64, 0)
        with pytest.raises(ValueError):
            split_seed(1, -3)

    def test_streams(self):
        a, b = RngStream(12), RngStream(12)
        assert np.array_equal(a.random(10), b.random(10))
        assert a.spawn(1).seed == split_seed(12, 1)
        assert a.spawn(1).seed != a.spawn(2).seed
        with pytest.raises(ValueError):
            RngStream(-1)
        with pytest.raises(ValueError):
            a.choice([])


class TestEnumeration:
    def test_rows(self):
        bits = enumerate_bitstrings(3)
        assert bits.shape == (8, 3)
        assert bits.dtype == np.uint8
        assert "".join(map(str, bits[1])) == "001"
        assert "".join(map(str, bits[4])) == "100"
        assert len({tuple(row) for row in bits}) == 8

    def test_guard(self):
        with pytest.raises(ValueError):
            enumerate_bitstrings(0)
        with pytest.raises(ValueError):
            enumerate_bitstrings(21)
