# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.


def train_generic(builder,
                  train_set,
                  val_set=None,
                  save_path=None,
                  load_path=None,
                  **kwargs_train):
    """
    This function is a helper to train more easily any system using its default "train" method.

    Parameters
    ----------
    builder: :class:`recipe_workflows.utils.BaseWorkflowBuilder`
        The system to train

    train_set: :class:`recipe_workflows.core.Dataset`
        The training recipes

    val_set: :class:`recipe_workflows.core.Dataset`
        The validation recipes (``None`` to deactivate early stopping)

    save_path: ``str``
        Where to save the trained system (put None do deactivate saving)

    load_path: ``str``
        Path to load the system from before training it again.

    kwargs_train: ``dict``
        Other argument that will be passed to `builder.train(...)`

    Returns
    -------
    builder: :class:`recipe_workflows.utils.BaseWorkflowBuilder`
        The trained system.

    """
    if load_path is not None:
        builder.load(load_path)
    builder.train(train_set, val_set=val_set, save_path=save_path, **kwargs_train)
    return builder
