# -*- coding: utf-8 -*-
#
# scaling.py
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
from scipy import stats

import math
import warnings
from collections import defaultdict
from typing import Dict, Iterable, List, Optional

from ..factorydefaults import LabParams
from .records import ScalingFit, TrialRecord


STATISTICS = {
    "full": "evals_full_coverage",
    "first": "evals_first_pareto",
}


def law_value(law: str, n: int, k: int) -> float:
    """
    Normalizer of an evaluation count: max{k,1} n ln n ("k-n-log-n"),
    n ln n ("n-log-n") or (k+1) n ln n ("k1-n-log-n")
    """
    # ln 1 = 0, n = 1 falls back to n
    nlogn = n * math.log(n) if n > 1 else float(n)
    if law == "k-n-log-n":
        return max(k, 1) * nlogn
    elif law == "n-log-n":
        return nlogn
    elif law == "k1-n-log-n":
        return (k + 1) * nlogn
    raise ValueError(f"Unknown scaling law '{law}', choose from {LabParams().laws}")


def fit_scaling(
    records: Iterable[TrialRecord],
    law: str,
    statistic: str = "full",
    threshold: Optional[float] = None,
) -> ScalingFit:
    """
    Normalize evaluation counts by a scaling law and test whether the
    per-n means stay within a constant factor of each other.

    Censored records and records without the statistic are excluded with a
    warning.

    Parameters
    ----------
    records: iterable of `TrialRecord`
        Runs of a single algorithm
    law: str
        "k-n-log-n", "n-log-n" or "k1-n-log-n"
    statistic: str
        "full" (evaluations to full coverage) or "first" (evaluations to
        the first Pareto optimal solution)
    threshold: float, optional
        Largest accepted max/min ratio of the per-n means, defaults to
        `LabParams.stability_threshold`

    Returns
    -------
    `ScalingFit`

    Raises
    ------
    ValueError
        If the records mix algorithms, the law or statistic is unknown or
        fewer than two distinct n remain
    """
    if statistic not in STATISTICS:
        raise ValueError(f"Unknown statistic '{statistic}', choose from {list(STATISTICS)}")
    if threshold is None:
        threshold = LabParams().stability_threshold
    records = list(records)
    algorithms = sorted({rec.algorithm for rec in records})
    if len(algorithms) > 1:
        raise ValueError(f"Records of several algorithms {algorithms}, fit them separately")
    attr = STATISTICS[statistic]

    normalized: Dict[int, List[float]] = defaultdict(list)
    n_excluded = 0
    for rec in records:
        count = getattr(rec, attr)
        if rec.censored or count is None:
            n_excluded += 1
            continue
        normalized[rec.n].append(count / law_value(law, rec.n, rec.k))
    if n_excluded > 0:
        warnings.warn(
            f"{n_excluded} of {len(records)} records censored or without the "
            f"'{statistic}' statistic, excluded from the fit",
            UserWarning,
        )
    if len(normalized) < 2:
        raise ValueError(
            f"A scaling fit needs records at two or more distinct n, got {sorted(normalized)}"
        )

    n_values = sorted(normalized)
    samples = [np.asarray(normalized[n]) for n in n_values]
    means = np.array([s.mean() for s in samples])
    variances = [float(s.var(ddof=1)) if s.size > 1 else 0.0 for s in samples]
    ratio = float(means.max() / means.min()) if means.min() > 0 else math.inf

    slope = None
    if np.all(means > 0):
        slope = float(stats.linregress(np.log(n_values), np.log(means)).slope)

    return ScalingFit(
        algorithm=algorithms[0] if algorithms else "",
        law=law,
        statistic=statistic,
        n_values=n_values,
        means=[float(m) for m in means],
        variances=variances,
        counts=[int(s.size) for s in samples],
        ratio=ratio,
        threshold=float(threshold),
        passed=bool(ratio <= threshold),
        n_excluded=n_excluded,
        loglog_slope=slope,
    )


def fit_scaling_by_algorithm(
    records: Iterable[TrialRecord],
    law: str,
    statistic: str = "full",
    threshold: Optional[float] = None,
) -> List[ScalingFit]:
    """One `fit_scaling` per algorithm, in order of first appearance"""
    grouped: Dict[str, List[TrialRecord]] = {}
    for rec in records:
        grouped.setdefault(rec.algorithm, []).append(rec)
    return [
        fit_scaling(recs, law, statistic=statistic, threshold=threshold)
        for recs in grouped.values()
    ]
