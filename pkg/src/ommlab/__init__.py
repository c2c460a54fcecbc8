# -*- coding: utf-8 -*-
#
# __init__.py
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

from .core.bitstrings import BitString
from .core.bitstrings import RngStream, split_seed
from .core.bitstrings import count_ones, one_bit_mutation, standard_bitwise_mutation
from .core.bitstrings import random_bitstring, enumerate_bitstrings

from .core.onemaxmin import ProblemInstance
from .core.onemaxmin import ObjectivePair, ParetoFront, CoverageReport
from .core.onemaxmin import EvaluationCounter, InvariantViolation
from .core.onemaxmin import evaluate, pareto_front, is_pareto_optimal
from .core.onemaxmin import max_antichain_size, coverage, brute_force_front

from .reformulations.optimalsets import OptimalSetDescriptor
from .reformulations.scalarization import ScalarizationSpec
from .reformulations.scalarization import scalarize, scalarization_optima
from .reformulations.penalties import PenaltySpec, PenaltyThresholds
from .reformulations.penalties import penalty_value, penalty_thresholds
from .reformulations.penalties import exterior_optima, nonparameter_optima
from .reformulations.penalties import constrained_optima, coverage_schedule
from .reformulations.penalties import optima_coincide
from .reformulations.decomposition import SubproblemSpec
from .reformulations.decomposition import subproblem_value, subproblem_optima

from .solvers.singlesolution import ScalarProblem
from .solvers.singlesolution import rls, one_plus_one_ea
from .solvers.singlesolution import epsilon_constraint_pipeline

from .moea.primitives import Individual, Population
from .moea.primitives import fast_nondominated_sort, crowding_distance
from .moea.primitives import hypervolume_2d, hv_contribution, select_parents
from .moea.engines import ConfigurationError
from .moea.engines import SEMO, GSEMO, NSGA2, SMSEMOA, MOEAD
from .moea.engines import semo_step, gsemo_step, smsemoa_step
from .moea.engines import nsga2_generation, moead_generation, make_engine
from .moea.coverage import run_to_coverage

from .lab.records import TrialRecord, ScalingFit, VerificationReport
from .lab.experiments import ExperimentConfig, load_config, run_suite
from .lab.verification import verify
from .lab.scaling import fit_scaling
from .lab.export import export, import_records

from .factorydefaults import SolverParams, MOEAParams, LabParams

from .__version__ import __version__
