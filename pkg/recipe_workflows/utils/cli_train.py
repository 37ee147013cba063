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


def cli_train(parser=None):
    """some default command line arguments (cli) for training the systems, added to ``parser`` if given"""
    if parser is None:
        parser = argparse.ArgumentParser(description="Train a workflow builder")
    parser.add_argument("--config", required=False, default=None,
                        help="Path of a JSON configuration file (the flags below override its values)")
    parser.add_argument("--seed", required=False, default=None, type=int,
                        help="Seed of the data split and of the training")
    parser.add_argument("--dataset", required=False, default=None,
                        help="Path of the labeled dataset (JSON lines)")
    parser.add_argument("--checkpoint", required=False, default=None,
                        help="Directory where the trained system is saved")
    parser.add_argument("--mode", required=False, default=None, choices=MODES,
                        help="The system to train")
    parser.add_argument("--theta", required=False, default=None, type=float,
                        help="Decision threshold used for the validation F1 (default 0.5)")
    parser.add_argument("--epochs", required=False, default=None, type=int,
                        help="Maximum number of training epochs")
    parser.add_argument("--log", required=False, default=None,
                        help="Path of the CSV training log (default: train_log.csv in the checkpoint directory)")
    parser.add_argument("--verbose", type=str2bool, nargs="?", const=True, default=False,
                        help="Print information and progress bars")
    return parser
