#!/usr/bin/env python3

# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

import os

from recipe_workflows.core.dataset_io import load_dataset
from recipe_workflows.utils import cli_train, TrainingParam, split_dataset
from recipe_workflows.utils.train_generic import train_generic
from recipe_workflows.HandCrafted.HandCrafted import HandCrafted
from recipe_workflows.HandCrafted.HandCraftedMM import HandCraftedMM


def train(train_set,
          val_set=None,
          name=None,
          multimodal=False,
          save_path=None,
          log_path=None,
          training_param=None,
          theta=0.5,
          seed=0,
          verbose=True):
    """
    Fit the hand-crafted feature baseline on ``train_set``.

    Parameters
    ----------
    train_set: :class:`recipe_workflows.core.Dataset`
        The labeled training recipes

    val_set: :class:`recipe_workflows.core.Dataset`
        Validation recipes, only used to fill the training log

    name: ``str``
        Name of the system (``None`` for the default name of the variant)

    multimodal: ``bool``
        Whether to add the image similarities to the text features (:class:`HandCraftedMM`)

    save_path: ``str``
        Where to save the fitted detector

    log_path: ``str``
        Path of the CSV training log

    training_param: :class:`recipe_workflows.utils.TrainingParam`
        Only ``l2`` and ``detector_epochs`` are used

    theta: ``float``
        Decision threshold of the system

    seed: ``int``
        Seed of the balanced pair sampling and of the solver

    verbose: ``bool``
        If you want something to be printed on the terminal

    Returns
    -------
    system: :class:`HandCrafted` or :class:`HandCraftedMM`
        The fitted system

    """
    cls = HandCraftedMM if multimodal else HandCrafted
    kwargs = {"theta": theta, "verbose": verbose}
    if name is not None:
        kwargs["name"] = name
    system = cls(**kwargs)
    train_generic(system,
                  train_set,
                  val_set=val_set,
                  save_path=save_path,
                  training_param=TrainingParam() if training_param is None else training_param,
                  log_path=log_path,
                  seed=seed)
    return system


if __name__ == "__main__":
    args = cli_train().parse_args()
    seed = 0 if args.seed is None else args.seed
    train_set, val_set, _ = split_dataset(load_dataset(args.dataset), seed)
    save_path = "saved_models" if args.checkpoint is None else args.checkpoint
    os.makedirs(save_path, exist_ok=True)
    train(train_set,
          val_set,
          multimodal=args.mode == "handcrafted_mm",
          save_path=save_path,
          log_path=args.log,
          theta=0.5 if args.theta is None else args.theta,
          seed=seed,
          verbose=args.verbose)
