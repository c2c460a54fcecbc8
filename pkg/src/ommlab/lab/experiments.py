# -*- coding: utf-8 -*-
#
# experiments.py
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

import dill

import hashlib
import json
import multiprocessing
import os
import re
import time
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..factorydefaults import LabParams, MOEAParams, SolverParams
from ..core.bitstrings import RngStream, split_seed
from ..core.onemaxmin import ProblemInstance
from ..moea.engines import ConfigurationError, make_engine
from ..moea.coverage import run_to_coverage
from ..reformulations.penalties import as_rational
from ..solvers.singlesolution import epsilon_constraint_pipeline
from .records import TrialRecord


PIPELINES = {"rls-pipeline": "rls", "ea-pipeline": "ea"}

# per-algorithm keys accepted in a roster entry
ROSTER_KEYS = {
    "rls-pipeline": {"name", "budget", "budget_multiplier", "r"},
    "ea-pipeline": {"name", "budget", "budget_multiplier", "r"},
    "semo": {"name", "budget", "budget_multiplier"},
    "gsemo": {"name", "budget", "budget_multiplier"},
    "nsga2": {"name", "budget", "budget_multiplier", "N", "selection", "strict"},
    "smsemoa": {"name", "budget", "budget_multiplier", "mu", "ref_point", "strict"},
    "moead": {"name", "budget", "budget_multiplier", "T"},
}

CONFIG_KEYS = {
    "instance_grid",
    "algorithm_roster",
    "trials_per_cell",
    "master_seed",
    "workers",
    "record_wall_time",
    "cache_path",
    "cache_name",
    "save_cache",
    "recompute_cache",
}


def resolve_k(n: int, k: Union[int, str]) -> int:
    """
    Conflict degree of a grid entry, either an integer or one of the
    expressions "n" and "n/<int>" (integer division)
    """
    if isinstance(k, str):
        expr = k.replace(" ", "")
        if expr == "n":
            return n
        match = re.fullmatch(r"n/(\d+)", expr)
        if match is None:
            try:
                return int(expr)
            except ValueError:
                raise ConfigurationError(f"Cannot interpret k='{k}'")
        return n // int(match.group(1))
    return int(k)


@dataclass
class ExperimentConfig:
    """
    Configuration of an experiment suite.

    Attributes
    ----------
    instance_grid: list of (n, k)
        k is an integer or an expression "n", "n/<int>"
    algorithm_roster: list of dict
        Every entry has a `name` out of `LabParams.algorithms` and optional
        algorithm parameters (`N`, `mu`, `selection`, `ref_point`, `strict`,
        `T`, `r`, `budget`, `budget_multiplier`). Plain strings are accepted
        as entries without parameters.
    trials_per_cell: int
    master_seed: int
    workers: int
        Worker processes, results do not depend on it
    record_wall_time: bool
        Store wall-clock durations, which makes records non-reproducible
    cache_path, cache_name, save_cache, recompute_cache:
        On-disk caching of finished suites, disabled when `cache_path` is
        None
    """

    instance_grid: List[Tuple[int, Union[int, str]]]
    algorithm_roster: List[Union[str, Dict]]
    trials_per_cell: Optional[int] = None
    master_seed: Optional[int] = None
    workers: Optional[int] = None
    record_wall_time: Optional[bool] = None
    cache_path: Optional[str] = None
    cache_name: str = "suite"
    save_cache: bool = True
    recompute_cache: bool = False

    def __post_init__(self):
        defaults = LabParams()
        if self.trials_per_cell is None:
            self.trials_per_cell = defaults.trials_per_cell
        if self.master_seed is None:
            self.master_seed = defaults.master_seed
        if self.workers is None:
            self.workers = defaults.workers
        if self.record_wall_time is None:
            self.record_wall_time = defaults.record_wall_time

        if self.trials_per_cell < 1:
            raise ConfigurationError(f"trials_per_cell={self.trials_per_cell} must be >= 1")
        if self.workers < 1:
            raise ConfigurationError(f"workers={self.workers} must be >= 1")
        if not 0 <= int(self.master_seed) < 2**64:
            raise ConfigurationError(f"master_seed={self.master_seed} is not a 64-bit integer")

        grid = []
        for entry in self.instance_grid:
            n, k = entry
            n = int(n)
            k = resolve_k(n, k)
            if n < 1 or not 0 <= k <= n:
                raise ConfigurationError(f"Grid entry (n={n}, k={k}) violates 0 <= k <= n")
            grid.append((n, k))
        self.instance_grid = grid

        roster = []
        for entry in self.algorithm_roster:
            entry = {"name": entry} if isinstance(entry, str) else dict(entry)
            name = entry.get("name")
            if name not in defaults.algorithms:
                raise ConfigurationError(
                    f"Unknown algorithm '{name}', choose from {defaults.algorithms}"
                )
            unknown = set(entry) - ROSTER_KEYS[name]
            if unknown:
                raise ConfigurationError(f"Unknown parameters {sorted(unknown)} for '{name}'")
            roster.append(entry)
        self.algorithm_roster = roster

    @classmethod
    def from_dict(cls, data: Dict) -> "ExperimentConfig":
        unknown = set(data) - CONFIG_KEYS
        if unknown:
            warnings.warn(f"Ignoring unknown config keys {sorted(unknown)}", UserWarning)
        return cls(**{key: val for key, val in data.items() if key in CONFIG_KEYS})

    def cells(self) -> List[Tuple[int, Dict, int, int]]:
        """(cell index, roster entry, n, k), instances outermost"""
        cells = []
        for n, k in self.instance_grid:
            for entry in self.algorithm_roster:
                cells.append((len(cells), entry, n, k))
        return cells

    def unique_hash(self) -> str:
        """
        Hexadecimal sha256 hash of everything that determines the records
        """
        h = hashlib.new("sha256")
        h.update(
            json.dumps(
                {
                    "instance_grid": self.instance_grid,
                    "algorithm_roster": self.algorithm_roster,
                    "trials_per_cell": self.trials_per_cell,
                    "master_seed": int(self.master_seed),
                    "record_wall_time": self.record_wall_time,
                },
                sort_keys=True,
            ).encode()
        )
        return h.hexdigest()


def load_config(file_name: str) -> ExperimentConfig:
    try:
        with open(file_name, "r", encoding="utf-8") as file:
            data = json.load(file)
    except OSError as err:
        raise IOError(f"Could not read config file {file_name}: {err}") from err
    except json.JSONDecodeError as err:
        raise ConfigurationError(f"Config file {file_name} is not valid JSON: {err}") from err
    return ExperimentConfig.from_dict(data)


def validate_cell(entry: Dict, n: int, k: int):
    """
    Raise `ConfigurationError` for parameters that violate the preconditions
    of the corresponding coverage guarantee
    """
    inst = ProblemInstance(n, k)
    name = entry["name"]
    if name in PIPELINES:
        r = as_rational(entry.get("r", SolverParams().penalty_r))
        if r <= 0:
            raise ConfigurationError(f"Penalty coefficient r={r} must be positive")
        return
    if entry.get("budget") is not None and int(entry["budget"]) < 1:
        raise ConfigurationError(f"budget={entry['budget']} must be >= 1")
    # constructing the engine runs its parameter checks
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        _build_engine(entry, inst, RngStream(0))


def _build_engine(entry: Dict, inst: ProblemInstance, rng: RngStream):
    params = MOEAParams()
    if "budget_multiplier" in entry:
        params.budget_multiplier = float(entry["budget_multiplier"])
    kwargs = {
        key: entry[key]
        for key in ("N", "mu", "selection", "ref_point", "strict", "T")
        if key in entry and key in ROSTER_KEYS[entry["name"]]
    }
    return make_engine(entry["name"], inst, rng, params=params, **kwargs)


def run_trial(
    entry: Dict,
    n: int,
    k: int,
    trial: int,
    seed: int,
    record_wall_time: bool = False,
) -> TrialRecord:
    """
    One seeded run of a roster entry on the instance (n, k)
    """
    inst = ProblemInstance(n, k)
    rng = RngStream(seed)
    name = entry["name"]

    if name in PIPELINES:
        params = SolverParams()
        if "budget_multiplier" in entry:
            params.budget_multiplier = float(entry["budget_multiplier"])
        t_start = time.perf_counter()
        result = epsilon_constraint_pipeline(
            inst,
            budget_per_run=entry.get("budget"),
            rng=rng,
            solver=PIPELINES[name],
            r=entry.get("r"),
            params=params,
        )
        wall_ms = (time.perf_counter() - t_start) * 1e3 if record_wall_time else None
        return TrialRecord(
            algorithm=name,
            n=n,
            k=k,
            trial=trial,
            seed=seed,
            evals_first_pareto=result.evals_first_pareto,
            evals_full_coverage=result.evals_full_coverage,
            censored=result.censored,
            wall_ms=wall_ms,
        )

    engine = _build_engine(entry, inst, rng)
    return run_to_coverage(
        engine,
        budget=entry.get("budget"),
        trial=trial,
        record_wall_time=record_wall_time,
    )


def _run_task(task) -> Tuple[int, int, TrialRecord]:
    cell_index, entry, n, k, trial, seed, record_wall_time = task
    record = run_trial(entry, n, k, trial, seed, record_wall_time=record_wall_time)
    return cell_index, trial, record


def suite_tasks(cfg: ExperimentConfig) -> List[tuple]:
    return [
        (
            cell_index,
            entry,
            n,
            k,
            trial,
            split_seed(cfg.master_seed, cell_index, trial),
            cfg.record_wall_time,
        )
        for cell_index, entry, n, k in cfg.cells()
        for trial in range(cfg.trials_per_cell)
    ]


def _execute_suite(cfg: ExperimentConfig, pprint: bool = False) -> List[TrialRecord]:
    for cell_index, entry, n, k in cfg.cells():
        validate_cell(entry, n, k)
    tasks = suite_tasks(cfg)
    if pprint:
        print(
            f">>> running {len(tasks)} trials in {len(cfg.cells())} cells "
            f"on {cfg.workers} worker(s)"
        )

    if cfg.workers > 1:
        with multiprocessing.Pool(cfg.workers) as pool:
            results = pool.map(_run_task, tasks, chunksize=1)
    else:
        results = []
        for task in tasks:
            results.append(_run_task(task))
            if pprint and task[4] == cfg.trials_per_cell - 1:
                print(f"    cell {task[0]}: {task[1]['name']} on (n={task[2]}, k={task[3]}) done")

    results.sort(key=lambda res: (res[0], res[1]))
    return [record for _, _, record in results]


def run_suite(cfg: ExperimentConfig, pprint: bool = False) -> List[TrialRecord]:
    """
    Run every trial of every (instance, algorithm) cell.

    The seed of trial t in cell c is `split_seed(master_seed, c, t)`, trials
    run in `cfg.workers` processes and the records are returned sorted by
    (cell, trial), so the output does not depend on the worker count.

    With `cfg.cache_path` set, the records are stored with dill under a
    hash of the configuration and reloaded on later calls, unless
    `cfg.recompute_cache` is set.

    Raises
    ------
    ConfigurationError
        If a cell's algorithm parameters violate the preconditions of the
        coverage guarantees (e.g. N < 4(k+1) for NSGA-II in strict mode)
    """
    if cfg.cache_path is None:
        return _execute_suite(cfg, pprint=pprint)

    os.makedirs(cfg.cache_path, exist_ok=True)
    file_name = os.path.join(
        cfg.cache_path, f"{cfg.cache_name}_cache_{cfg.unique_hash()}.p"
    )
    if pprint:
        print(f"\n>>>> Cache file for suite:\n    {file_name}\n<<<<")

    try:
        # ensure that the suite is recomputed if 'recompute' is true
        if cfg.recompute_cache:
            raise IOError
        with open(file_name, "rb") as file:
            records = [TrialRecord.from_dict(data) for data in dill.load(file)]
    except (Exception, IOError, EOFError, KeyError) as err:
        if pprint:
            if cfg.recompute_cache:
                logstr = ">>> Force recomputing cache..."
            else:
                logstr = ">>> No cache found, recomputing..."
            print(logstr)
        if os.path.exists(file_name) and not cfg.recompute_cache:
            warnings.warn(f"Could not load suite cache {file_name}: {err}", UserWarning)
        records = _execute_suite(cfg, pprint=pprint)
        if cfg.save_cache:
            with open(file_name, "wb") as file:
                dill.dump([record.to_dict() for record in records], file)
    return records
