# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import argparse

from recipe_workflows.utils.str2bool import str2bool


def cli_generate(parser=None):
    """command line arguments (CLI) of the synthetic dataset generation"""
    if parser is None:
        parser = argparse.ArgumentParser(description="Generate a synthetic recipe dataset")
    parser.add_argument("--config", required=False, default=None,
                        help="Path of a JSON configuration file (its \"gen\" section is used)")
    parser.add_argument("--seed", required=False, default=None, type=int,
                        help="Seed of the generator")
    parser.add_argument("--dataset", required=False, default=None,
                        help="Path of the dataset to write (JSON lines)")
    parser.add_argument("--n_recipes", required=False, default=None, type=int,
                        help="Number of recipes to generate")
    parser.add_argument("--force", type=str2bool, nargs="?", const=True, default=False,
                        help="Overwrite the dataset if it already exists")
    parser.add_argument("--verbose", type=str2bool, nargs="?", const=True, default=False,
                        help="Print information and progress bars")
    return parser
