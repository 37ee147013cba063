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
from recipe_workflows.PointerWorkflow.PointerWorkflow import PointerWorkflow, DEFAULT_NAME

DEFAULT_LOGS_DIR = "./logs-eval/pointer-workflow"


def evaluate(dataset,
             name=DEFAULT_NAME,
             load_path=None,
             logs_path=DEFAULT_LOGS_DIR,
             theta=None,
             reduce_gold=False,
             visibility=None,
             verbose=False):
    """
    How to evaluate the performances of the trained PointerWorkflow model.

    Parameters
    ----------
    dataset: :class:`recipe_workflows.core.Dataset`
        The labeled recipes on which you evaluate your model

    name: ``str``
        The name of the trained model

    load_path: ``str``
        Path where the model has been stored

    logs_path: ``str``
        Where to write the results of the assessment

    theta: ``float``
        The decision threshold, ``None`` to use the one of the model architecture

    reduce_gold: ``bool``
        Whether to transitively reduce the gold workflows first

    visibility: ``dict``
        Visibility labels of the gold edges, for the recall per visibility class

    verbose: ``bool``
        Print the results

    Returns
    -------
    model: :class:`PointerWorkflow`
        The loaded model that has been evaluated.

    report: :class:`recipe_workflows.metrics.MetricsReport`
        The metrics of the model on ``dataset``.

    Examples
    -------

    .. code-block:: python

        from recipe_workflows.core import load_dataset
        from recipe_workflows.PointerWorkflow import evaluate

        test_set = load_dataset("test.jsonl")
        model, report = evaluate(test_set, name="MyModel", load_path="/WHERE/I/SAVED/THE/MODEL", verbose=True)

    """
    if load_path is None:
        raise RuntimeError("Cannot evaluate a model if there is nothing to be loaded.")
    model = PointerWorkflow(name=name, verbose=verbose)
    model.load(load_path)
    report, _, _ = eval_generic(model, dataset, theta=theta, reduce_gold=reduce_gold, visibility=visibility,
                                logs_path=logs_path, verbose=verbose)
    return model, report


if __name__ == "__main__":
    args = cli_eval().parse_args()
    dataset = load_dataset(args.dataset)
    _, _, test_set = split_dataset(dataset, 0 if args.seed is None else args.seed)
    vis_path = sidecar_path(args.dataset)
    evaluate(test_set,
             load_path=os.path.abspath(args.checkpoint),
             logs_path=args.output,
             theta=args.theta,
             reduce_gold=args.reduce_gold,
             visibility=load_visibility(vis_path) if os.path.exists(vis_path) else None,
             verbose=True)
