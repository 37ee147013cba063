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


def cli_predict(parser=None):
    """command line arguments (CLI) to predict the workflows of new recipes"""
    if parser is None:
        parser = argparse.ArgumentParser(description="Predict the workflows of recipes")
    parser.add_argument("--config", required=False, default=None,
                        help="Path of a JSON configuration file (the flags below override its values)")
    parser.add_argument("--dataset", required=False, default=None,
                        help="Path of the recipes (JSON lines), gold workflows are ignored")
    parser.add_argument("--checkpoint", required=False, default=None,
                        help="Directory where the trained system has been saved")
    parser.add_argument("--mode", required=False, default=None, choices=MODES,
                        help="The trained system to use")
    parser.add_argument("--theta", required=False, default=None, type=float,
                        help="Decision threshold (default 0.5)")
    parser.add_argument("--output", required=False, default=None,
                        help="Path of the predicted workflows (JSON lines, default predictions.jsonl next to "
                             "the recipes)")
    parser.add_argument("--dot", type=str2bool, nargs="?", const=True, default=False,
                        help="Also write one graphviz DOT file per recipe next to the predictions")
    parser.add_argument("--force", type=str2bool, nargs="?", const=True, default=False,
                        help="Overwrite existing outputs")
    parser.add_argument("--verbose", type=str2bool, nargs="?", const=True, default=False,
                        help="Print information and progress bars")
    return parser
