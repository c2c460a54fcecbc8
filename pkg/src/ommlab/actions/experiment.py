# -*- coding: utf-8 -*-
#
# experiment.py
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

import json
import sys

from ..lab.experiments import ROSTER_KEYS, ConfigurationError
from ..lab.experiments import load_config, run_suite, run_trial
from ..lab.export import export, import_records
from ..lab.scaling import fit_scaling_by_algorithm
from ..lab.verification import verify

# command line spelling of roster keys
FLAGS = {
    "budget": "--budget",
    "N": "--N",
    "mu": "--mu",
    "selection": "--selection",
    "r": "--r",
    "strict": "--non-strict",
}


def _run(algo, n, k, seed, params, pprint=False):
    """
    One trial of `algo`, printed as JSON to stdout

    Returns
    -------
    int
        exit code, 1 when the run was censored
    """
    entry = {"name": algo}
    entry.update({key: val for key, val in params.items() if val is not None})
    unused = sorted(set(entry) - ROSTER_KEYS[algo])
    if unused:
        flags = ", ".join(FLAGS.get(key, key) for key in unused)
        raise ConfigurationError(f"Option(s) {flags} do not apply to '{algo}'")
    record = run_trial(entry, n, k, trial=0, seed=seed)
    print(json.dumps(record.to_dict(), indent=2))
    return 1 if record.censored else 0


def _suite(config, out, workers=None, pprint=False):
    cfg = load_config(config)
    if workers is not None:
        cfg.workers = workers
    records = run_suite(cfg, pprint=pprint)
    export(records, out)
    if pprint:
        n_censored = sum(rec.censored for rec in records)
        print(f">>> {len(records)} records ({n_censored} censored) written to {out}")
    return 0


def _verify(scope, n_max, out=None, pprint=False):
    report = verify(scope, n_max, pprint=pprint)
    print(report)
    if out is not None:
        export(report, out, fmt="json")
    return 0 if report.passed else 1


def _fit(path, law, statistic="full", threshold=None, out=None, pprint=False):
    records = import_records(path)
    fits = fit_scaling_by_algorithm(records, law, statistic=statistic, threshold=threshold)
    if pprint:
        for fit in fits:
            print(fit, file=sys.stderr)
    print(json.dumps([fit.to_dict() for fit in fits], indent=2))
    if out is not None:
        export(fits, out)
    return 0 if all(fit.passed for fit in fits) else 1
