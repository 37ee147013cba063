# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os

from recipe_workflows.core.dataset_io import load_dataset
from recipe_workflows.utils.splits import split_dataset
from recipe_workflows.utils.make_builder import make_builder
from recipe_workflows.cli.RunConfig import RUN_CONFIG_NAME

TRAIN_LOG_NAME = "train_log.csv"


def cmd_train(run, verbose=False):
    """
    Train the system ``run.mode`` on the training part of ``run.dataset``, with early stopping on the validation
    part. The best system is saved in ``run.checkpoint`` together with the run configuration; the CSV log goes to
    ``run.log`` (``train_log.csv`` in the checkpoint directory by default).

    Returns
    -------
    builder: :class:`recipe_workflows.utils.BaseWorkflowBuilder`
        The trained system

    """
    run.require("dataset", "checkpoint")
    dataset = load_dataset(run.dataset)
    train_set, val_set, test_set = split_dataset(dataset, run.seed, run.split_fractions)
    if verbose:
        print("INFO: split of {} recipes: {} train, {} validation, {} test"
              "".format(len(dataset), len(train_set), len(val_set), len(test_set)))
    os.makedirs(run.checkpoint, exist_ok=True)
    log_path = os.path.join(run.checkpoint, TRAIN_LOG_NAME) if run.log is None else run.log

    builder = make_builder(run.mode, model_config=run.model, theta=run.theta, d_img=dataset.d_img or None,
                           verbose=verbose)
    builder.train(train_set,
                  val_set=val_set if len(val_set) else None,
                  training_param=run.training,
                  save_path=run.checkpoint,
                  log_path=log_path,
                  seed=run.seed)
    run.save_as_json(run.checkpoint, name=RUN_CONFIG_NAME)
    return builder
