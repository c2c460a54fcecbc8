# -*- coding: utf-8 -*-
#
# ommlab.py
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

import argparse
import sys

from ..factorydefaults import LabParams, MOEAParams
from ..core.bitstrings import split_seed
from ..lab.verification import SCOPES
from .oracles import _evaluate, _front, _oracle
from .experiment import _fit, _run, _suite, _verify


def parse_cmd_args(argv=None):
    lab_params = LabParams()
    parser = argparse.ArgumentParser(
        prog="ommlab",
        description="Laboratory for the OneMaxMin_k benchmark: evaluation, "
        "analytic optima of its single-objective reformulations, seeded "
        "optimizer runs and experiment suites, brute-force verification "
        "and scaling-law fits.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Print progress information",
    )
    subparsers = parser.add_subparsers(dest="action", required=True)

    def add_instance_args(sub):
        sub.add_argument("--n", type=int, required=True, help="Bitstring length")
        sub.add_argument("--k", type=int, required=True, help="Conflict degree, 0 <= k <= n")

    sub = subparsers.add_parser("evaluate", help="Print (f1, f2) of a bitstring")
    add_instance_args(sub)
    sub.add_argument("--x", required=True, help="The bitstring, e.g. 0110")

    sub = subparsers.add_parser("front", help="Print the k+1 Pareto front points")
    add_instance_args(sub)

    sub = subparsers.add_parser(
        "oracle", help="Print the analytic optimal set of a reformulation"
    )
    sub.add_argument(
        "kind", choices=["scalarization", "penalty", "subproblem", "constrained"]
    )
    add_instance_args(sub)
    sub.add_argument("--w", type=float, help="Weight of f1 (scalarization)")
    sub.add_argument(
        "--eps",
        help="Constraint level on f2 (penalty, constrained), "
        "decimals or fractions such as 4.5 or 9/2",
    )
    sub.add_argument("--r", help="Penalty coefficient (exterior penalty)")
    sub.add_argument(
        "--mode",
        choices=["exterior", "nonparameter"],
        default="exterior",
        help="Penalty mode, default 'exterior'",
    )
    sub.add_argument("--i", type=int, help="Subproblem index, 0 <= i <= k")

    sub = subparsers.add_parser("run", help="One seeded run, printed as a JSON record")
    sub.add_argument("--algo", required=True, choices=lab_params.algorithms)
    add_instance_args(sub)
    sub.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Stream seed, derived from the default master seed and (n, k) "
        "if not provided",
    )
    sub.add_argument("--budget", type=int, help="Evaluation budget")
    sub.add_argument("--N", type=int, help="NSGA-II population size")
    sub.add_argument("--mu", type=int, help="SMS-EMOA population size")
    sub.add_argument(
        "--selection",
        choices=MOEAParams().selection_schemes,
        help="NSGA-II parent selection",
    )
    sub.add_argument("--r", help="Penalty coefficient of the pipelines")
    sub.add_argument(
        "--non-strict",
        action="store_true",
        help="Allow population sizes below the front-point survival thresholds",
    )

    sub = subparsers.add_parser("suite", help="Run an experiment suite from a config file")
    sub.add_argument("--config", required=True, help="JSON experiment configuration")
    sub.add_argument("--out", required=True, help="Output file, .csv or .json")
    sub.add_argument("--workers", type=int, help="Overrides the configured worker count")

    sub = subparsers.add_parser("verify", help="Brute-force verification of the analytic results")
    sub.add_argument("--scope", choices=SCOPES + ["all"], default="all")
    sub.add_argument("--n-max", type=int, default=10, dest="n_max")
    sub.add_argument("--out", help="Write the report as JSON")

    sub = subparsers.add_parser("fit", help="Scaling-law fit of stored trial records")
    sub.add_argument("--in", required=True, dest="path", help="Records, .csv or .json")
    sub.add_argument("--law", required=True, choices=lab_params.laws)
    sub.add_argument("--statistic", choices=["full", "first"], default="full")
    sub.add_argument(
        "--threshold",
        type=float,
        default=None,
        help=f"Max/min ratio accepted as stable, default {lab_params.stability_threshold}",
    )
    sub.add_argument("--out", help="Also write the fits to a .csv or .json file")

    return parser.parse_args(argv)


def main(argv=None):
    # parse the commandline args
    cmd_args = parse_cmd_args(argv)
    pprint = cmd_args.verbose

    try:
        if cmd_args.action == "evaluate":
            _evaluate(cmd_args.n, cmd_args.k, cmd_args.x)
            return 0
        elif cmd_args.action == "front":
            _front(cmd_args.n, cmd_args.k)
            return 0
        elif cmd_args.action == "oracle":
            _oracle(
                cmd_args.kind,
                cmd_args.n,
                cmd_args.k,
                w=cmd_args.w,
                eps=cmd_args.eps,
                r=cmd_args.r,
                i=cmd_args.i,
                mode=cmd_args.mode,
            )
            return 0
        elif cmd_args.action == "run":
            seed = cmd_args.seed
            if seed is None:
                seed = split_seed(LabParams().master_seed, cmd_args.n, cmd_args.k)
            params = {
                "budget": cmd_args.budget,
                "N": cmd_args.N,
                "mu": cmd_args.mu,
                "selection": cmd_args.selection,
                "r": cmd_args.r,
                "strict": False if cmd_args.non_strict else None,
            }
            return _run(cmd_args.algo, cmd_args.n, cmd_args.k, seed, params, pprint=pprint)
        elif cmd_args.action == "suite":
            return _suite(cmd_args.config, cmd_args.out, workers=cmd_args.workers, pprint=pprint)
        elif cmd_args.action == "verify":
            return _verify(cmd_args.scope, cmd_args.n_max, out=cmd_args.out, pprint=pprint)
        elif cmd_args.action == "fit":
            return _fit(
                cmd_args.path,
                cmd_args.law,
                statistic=cmd_args.statistic,
                threshold=cmd_args.threshold,
                out=cmd_args.out,
                pprint=pprint,
            )
    except (ValueError, TypeError, KeyError) as err:
        # ConfigurationError is a ValueError
        print(f"ommlab {cmd_args.action}: {err}", file=sys.stderr)
        return 2
    except IOError as err:
        print(f"ommlab {cmd_args.action}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
