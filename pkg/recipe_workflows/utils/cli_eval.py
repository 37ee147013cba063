# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import argparse

from recipe_workflows.utils.modes import MODES
from recipe_workflows.utils.str2bool import str2bool


def cli_eval(parser=None):
    """command line arguments (CLI) to evaluate a trained system, added to ``parser`` if given"""
    if parser is None:
        parser = argparse.ArgumentParser(description="Evaluate a trained workflow builder")
    parser.add_argument("--config", required=False, default=None,
                        help="Path of a JSON configuration file (the flags below override its values)")
    parser.add_argument("--seed", required=False, default=None, type=int,
                        help="Seed of the data split (use the one of the training)")
    parser.add_argument("--dataset", required=False, default=None,
                        help="Path of the labeled dataset (JSON lines)")
    parser.add_argument("--checkpoint", required=False, default=None,
                        help="Directory where the trained system has been saved")
    parser.add_argument("--mode", required=False, default=None, choices=MODES,
                        help="The system to evaluate")
    parser.add_argument("--theta", required=False, default=None, type=float,
                        help="Decision threshold (default 0.5)")
    parser.add_argument("--split", required=False, default="test", choices=["train", "val", "test", "all"],
                        help="Part of the dataset to evaluate on (default \"test\")")
    parser.add_argument("--output", required=False, default=None,
                        help="Directory of metrics.json (default: the checkpoint directory)")
    parser.add_argument("--reduce_gold", type=str2bool, nargs="?", const=True, default=False,
                        help="Transitively reduce the gold workflows before computing the metrics")
    parser.add_argument("--verbose", type=str2bool, nargs="?", const=True, default=False,
                        help="Print information and progress bars")
    return parser
