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
from recipe_workflows.PointerWorkflow.PointerWorkflow import PointerWorkflow, DEFAULT_NAME
from recipe_workflows.PointerWorkflow.PointerWorkflow_NNParam import PointerWorkflow_NNParam


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
    This function implements the "training" part of the system "PointerWorkflow".

    Parameters
    ----------
    train_set: :class:`recipe_workflows.core.Dataset`
        The labeled training recipes

    val_set: :class:`recipe_workflows.core.Dataset`
        The labeled validation recipes, used for early stopping

    name: ``str``
        The name of your model.

    epochs: ``int``
        Maximum number of epochs (``None`` to use the one of ``training_param``)

    save_path: ``str``
        Where do you want to save your model.

    load_path: ``str``
        If you want to reload your model, specify the path where it is located. **NB** if a model is reloaded
        its architecture is the one that was saved and ``kwargs_archi`` is not used.

    log_path: ``str``
        Path of the CSV training log

    training_param: :class:`recipe_workflows.utils.TrainingParam`
        The parameters describing the way you will train your model.

    kwargs_archi: ``dict``
        Key word arguments used for making the :class:`PointerWorkflow_NNParam` object that will be used to build
        the model.

    seed: ``int``
        Seed of the initialization and of the training

    verbose: ``bool``
        If you want something to be printed on the terminal

    Returns
    -------

    model: :class:`PointerWorkflow`
        The trained model.

    Examples
    ---------

    .. code-block:: python

        from recipe_workflows.core import load_dataset
        from recipe_workflows.utils import TrainingParam, split_dataset
        from recipe_workflows.PointerWorkflow import train

        dataset = load_dataset("recipes.jsonl")
        train_set, val_set, test_set = split_dataset(dataset, seed=0)
        tp = TrainingParam(lr=1e-3, epochs=30)
        kwargs_archi = {"d_img": dataset.d_img, "d_model": 64, "n_heads": 4, "fusion_mode": "joint_transformer"}
        train(train_set, val_set, name="MyModel", save_path="/WHERE/I/SAVE/THE/MODEL", training_param=tp,
              kwargs_archi=kwargs_archi)

    """
    if training_param is None:
        training_param = TrainingParam()
    kwargs_archi = dict(kwargs_archi)
    kwargs_archi.setdefault("d_img", train_set.d_img)
    nn_archi = PointerWorkflow_NNParam(**kwargs_archi)
    if load_path is not None and verbose:
        print("INFO: Reloading a model, the architecture parameters will be ignored")
    model = PointerWorkflow(nn_archi=nn_archi, name=name, verbose=verbose)
    train_generic(model,
                  train_set,
                  val_set=val_set,
                  save_path=save_path,
                  load_path=load_path,
                  training_param=training_param,
                  epochs=epochs,
                  log_path=log_path,
                  seed=seed)
    return model


if __name__ == "__main__":
    args = cli_train().parse_args()
    seed = 0 if args.seed is None else args.seed
    dataset = load_dataset(args.dataset)
    train_set, val_set, _ = split_dataset(dataset, seed)
    save_path = "saved_models" if args.checkpoint is None else args.checkpoint
    os.makedirs(save_path, exist_ok=True)
    train(train_set,
          val_set,
          epochs=args.epochs,
          save_path=save_path,
          log_path=os.path.join(save_path, "train_log.csv") if args.log is None else args.log,
          kwargs_archi={"fusion_mode": "concat" if args.mode is None else args.mode,
                        "theta": 0.5 if args.theta is None else args.theta},
          seed=seed,
          verbose=args.verbose)
