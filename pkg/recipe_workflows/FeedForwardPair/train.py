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
from recipe_workflows.FeedForwardPair.FeedForwardPair import FeedForwardPair, DEFAULT_NAME
from recipe_workflows.FeedForwardPair.FeedForwardPair_NNParam import FeedForwardPair_NNParam


def train(train_set,
          val_set=None,
          name=DEFAULT_NAME,
          epochs=None,
          save_path=None,
          load_path=None,
          log_path=None,
          training_param=None,
          kwargs_archi={},
          seed=0,
          verbose=True):
    """
    Train the feed forward pair baseline. The parameters have the same meaning as in
    :func:`recipe_workflows.PointerWorkflow.train`, ``kwargs_archi`` builds a :class:`FeedForwardPair_NNParam`.

    Returns
    -------
    system: :class:`FeedForwardPair`
        The trained system

    """
    kwargs_archi = dict(kwargs_archi)
    kwargs_archi.setdefault("d_img", train_set.d_img)
    system = FeedForwardPair(nn_archi=FeedForwardPair_NNParam(**kwargs_archi), name=name, verbose=verbose)
    train_generic(system,
                  train_set,
                  val_set=val_set,
                  save_path=save_path,
                  load_path=load_path,
                  training_param=TrainingParam() if training_param is None else training_param,
                  epochs=epochs,
                  log_path=log_path,
                  seed=seed)
    return system


if __name__ == "__main__":
    args = cli_train().parse_args()
    seed = 0 if args.seed is None else args.seed
    train_set, val_set, _ = split_dataset(load_dataset(args.dataset), seed)
    save_path = "saved_models" if args.checkpoint is None else args.checkpoint
    os.makedirs(save_path, exist_ok=True)
    train(train_set, val_set, epochs=args.epochs, save_path=save_path, log_path=args.log,
          kwargs_archi={"theta": 0.5 if args.theta is None else args.theta}, seed=seed, verbose=args.verbose)
