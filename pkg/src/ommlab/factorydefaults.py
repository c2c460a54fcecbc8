# -*- coding: utf-8 -*-
#
# factorydefaults.py
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

from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass
class SolverParams:
    # evaluations per scalar run, in units of n * ln(n)
    budget_multiplier: float = 200.0
    # smallest budget handed to a scalar run
    min_budget: int = 16
    # penalty coefficient of the full-front schedule
    penalty_r: float = 3.0


@dataclass
class MOEAParams:
    # evaluations per run, in units of s * n * ln(n) with s the engine's size scale
    budget_multiplier: float = 200.0
    # smallest budget handed to an engine run
    min_budget: int = 64
    # hypervolume reference point
    ref_point: Tuple[int, int] = (-1, -1)
    # NSGA-II parent selection scheme
    selection: str = "random"
    selection_schemes: List[str] = field(
        default_factory=lambda: ["fair", "random", "tournament"]
    )
    # population sizes, as multiples of the front size k+1
    nsga2_size_factor: int = 4
    smsemoa_size_factor: int = 1
    # refuse population sizes below the front-point survival thresholds
    strict: bool = True


@dataclass
class LabParams:
    # repetitions per (instance, algorithm) cell
    trials_per_cell: int = 100
    # master seed of the per-trial seed split
    master_seed: int = 20240101
    # max/min ratio of per-n normalized means accepted as stable
    stability_threshold: float = 1.5
    # worker processes for trial execution
    workers: int = 1
    # exhaustive enumeration guard, 2**n bitstrings
    n_max_enumeration: int = 16
    # wall-clock timing makes records non-reproducible, off by default
    record_wall_time: bool = False
    # algorithms the lab knows how to run
    algorithms: List[str] = field(
        default_factory=lambda: [
            "rls-pipeline",
            "ea-pipeline",
            "semo",
            "gsemo",
            "nsga2",
            "smsemoa",
            "moead",
        ]
    )
    # normalization laws of the scaling fit
    laws: List[str] = field(
        default_factory=lambda: ["k-n-log-n", "n-log-n", "k1-n-log-n"]
    )
