# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ConfigError, CheckpointError
from recipe_workflows.utils.modes import MODES, FUSION_MODES
from recipe_workflows.PointerWorkflow.PointerWorkflow import PointerWorkflow
from recipe_workflows.PointerWorkflow.PointerWorkflow_NNParam import PointerWorkflow_NNParam
from recipe_workflows.HandCrafted.HandCrafted import HandCrafted
from recipe_workflows.HandCrafted.HandCraftedMM import HandCraftedMM
from recipe_workflows.ImageSimilarity.ImageSimilarity import ImageSimilarity
from recipe_workflows.FeedForwardPair.FeedForwardPair import FeedForwardPair
from recipe_workflows.FeedForwardPair.FeedForwardPair_NNParam import FeedForwardPair_NNParam

# name of the saved system (directory inside the checkpoint) of each mode
SYSTEM_NAMES = {
    "text_only": "PointerWorkflow",
    "image_only": "PointerWorkflow",
    "concat": "PointerWorkflow",
    "joint_transformer": "PointerWorkflow",
    "handcrafted": "HandCrafted",
    "handcrafted_mm": "HandCraftedMM",
    "imgsim": "ImageSimilarity",
    "ffpair": "FeedForwardPair",
}


def make_builder(mode, model_config=None, theta=None, d_img=None, verbose=False):
    """
    Create the untrained system selected by ``mode`` (one of :data:`recipe_workflows.utils.MODES`).

    Parameters
    ----------
    mode: ``str``
        A fusion mode of the pointer network or the name of a baseline

    model_config: :class:`recipe_workflows.PointerWorkflow.PointerWorkflow_NNParam`
        Architecture of the pointer network, its ``fusion_mode`` is replaced by ``mode``. Not used by the baselines.

    theta: ``float``
        Decision threshold (``None`` for the default of the system)

    d_img: ``int``
        Dimension of the image features, ``None`` to keep the one of the architecture

    verbose: ``bool``
        Whether the system prints information

    Returns
    -------
    res: :class:`recipe_workflows.utils.BaseWorkflowBuilder`

    """
    if mode not in MODES:
        raise ConfigError("unknown mode \"{}\", it should be one of {}".format(mode, ", ".join(MODES)))
    name = SYSTEM_NAMES[mode]
    if mode in FUSION_MODES:
        if model_config is None:
            model_config = PointerWorkflow_NNParam()
        updates = {"fusion_mode": mode}
        if d_img is not None:
            updates["d_img"] = d_img
        return PointerWorkflow(nn_archi=model_config.replace(**updates), name=name, theta=theta, verbose=verbose)
    if mode == "ffpair":
        nn_archi = FeedForwardPair_NNParam() if d_img is None else FeedForwardPair_NNParam(d_img=d_img)
        return FeedForwardPair(nn_archi=nn_archi, name=name, theta=theta, verbose=verbose)
    cls = {"handcrafted": HandCrafted, "handcrafted_mm": HandCraftedMM, "imgsim": ImageSimilarity}[mode]
    return cls(name=name, theta=0.5 if theta is None else theta, verbose=verbose)


def load_builder(mode, path, theta=None, verbose=False):
    """the system of ``mode`` saved with its ``save(path)`` method"""
    builder = make_builder(mode, theta=theta, verbose=verbose)
    builder.load(path)
    if mode in FUSION_MODES and builder.nn_archi.fusion_mode != mode:
        raise CheckpointError("the model saved in \"{}\" uses the fusion mode \"{}\", not \"{}\""
                              "".format(path, builder.nn_archi.fusion_mode, mode))
    if theta is not None:
        builder.theta = float(theta)
    elif hasattr(builder, "nn_archi"):
        builder.theta = builder.nn_archi.theta
    return builder
