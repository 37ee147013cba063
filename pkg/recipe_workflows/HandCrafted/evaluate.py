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
from recipe_workflows.metrics.visibility import sidecar_path, load_visibility
from recipe_workflows.utils import cli_eval, split_dataset
from recipe_workflows.utils.eval_generic import eval_generic
from recipe_workflows.HandCrafted.HandCrafted import HandCrafted
from recipe_workflows.HandCrafted.HandCraftedMM import HandCraftedMM

DEFAULT_LOGS_DIR = "./logs-eval/hand-crafted"


def evaluate(dataset,
             name=None,
             multimodal=False,
             load_path=None,
             logs_path=DEFAULT_LOGS_DIR,
             theta=0.5,
             reduce_gold=False,
             visibility=None,
             verbose=False):
    """
    Evaluate a fitted hand-crafted baseline on the labeled recipes of ``dataset``.

    See :func:`recipe_workflows.PointerWorkflow.evaluate` for the meaning of the parameters, ``multimodal``
    selects :class:`HandCraftedMM`.

    Returns
    -------
    system: :class:`HandCrafted` or :class:`HandCraftedMM`
        The loaded system

    report: :class:`recipe_workflows.metrics.MetricsReport`
        Its metrics on ``dataset``

    """
    if load_path is None:
        raise RuntimeError("Cannot evaluate a model if there is nothing to be loaded.")
    cls = HandCraftedMM if multimodal else HandCrafted
    system = cls(theta=theta, verbose=verbose) if name is None else cls(name=name, theta=theta, verbose=verbose)
    system.load(load_path)
    report, _, _ = eval_generic(system, dataset, reduce_gold=reduce_gold, visibility=visibility,
                                logs_path=logs_path, verbose=verbose)
    return system, report


if __name__ == "__main__":
    args = cli_eval().parse_args()
    _, _, test_set = split_dataset(load_dataset(args.dataset), 0 if args.seed is None else args.seed)
    vis_path = sidecar_path(args.dataset)
    evaluate(test_set,
             multimodal=args.mode == "handcrafted_mm",
             load_path=os.path.abspath(args.checkpoint),
             logs_path=args.output,
             theta=0.5 if args.theta is None else args.theta,
             reduce_gold=args.reduce_gold,
             visibility=load_visibility(vis_path) if os.path.exists(vis_path) else None,
             verbose=True)
