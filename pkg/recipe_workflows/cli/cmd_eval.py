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
from recipe_workflows.utils.splits import split_dataset
from recipe_workflows.utils.eval_generic import eval_generic
from recipe_workflows.utils.make_builder import load_builder

SPLITS = ("train", "val", "test", "all")


def cmd_eval(run, split="test", reduce_gold=False, verbose=False):
    """
    Evaluate the system saved in ``run.checkpoint`` on a part of ``run.dataset`` (the same split as the
    training for the same seed). The result row is printed, ``metrics.json`` (and ``metrics_by_visibility.json``
    when the visibility labels of the dataset exist) are written in ``run.output`` or, by default, in the
    checkpoint directory.

    Returns
    -------
    report: :class:`recipe_workflows.metrics.MetricsReport`

    """
    run.require("dataset", "checkpoint")
    dataset = load_dataset(run.dataset)
    if split != "all":
        parts = dict(zip(SPLITS, split_dataset(dataset, run.seed, run.split_fractions)))
        dataset = parts[split]
    builder = load_builder(run.mode, run.checkpoint, theta=run.theta, verbose=verbose)
    vis_path = sidecar_path(run.dataset)
    visibility = load_visibility(vis_path) if os.path.exists(vis_path) else None
    report, _, _ = eval_generic(builder,
                                dataset,
                                reduce_gold=reduce_gold,
                                visibility=visibility,
                                logs_path=run.checkpoint if run.output is None else run.output,
                                verbose=True)
    return report
