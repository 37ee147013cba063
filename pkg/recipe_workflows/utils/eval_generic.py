# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json

from recipe_workflows.Exceptions import DataError
from recipe_workflows.metrics.MetricsReport import MetricsReport
from recipe_workflows.metrics.edge_metrics import evaluate
from recipe_workflows.metrics.visibility import recall_by_visibility

METRICS_FILE = "metrics.json"
VISIBILITY_METRICS_FILE = "metrics_by_visibility.json"


def eval_generic(builder,
                 dataset,
                 theta=None,
                 reduce_gold=False,
                 visibility=None,
                 logs_path=None,
                 verbose=False):
    """
    Predict the workflows of the recipes of ``dataset`` with a trained system and compare them with the gold ones.

    Parameters
    ----------
    builder: :class:`recipe_workflows.utils.BaseWorkflowBuilder`
        The trained system

    dataset: :class:`recipe_workflows.core.Dataset`
        Recipes with their gold workflow

    theta: ``float``
        Decision threshold (``None`` for the default one of the system)

    reduce_gold: ``bool``
        Whether to transitively reduce the gold workflows before comparing

    visibility: ``dict``
        Optional visibility labels of the gold edges (see :func:`recipe_workflows.metrics.load_visibility`), the
        recall is then also given per visibility class

    logs_path: ``str``
        Directory where ``metrics.json`` (and ``metrics_by_visibility.json``) are written, ``None`` to not write them

    verbose: ``bool``
        Print the table row of the results

    Returns
    -------
    report: :class:`recipe_workflows.metrics.MetricsReport`
        The metrics

    by_visibility: ``dict`` or ``None``
        Recall per visibility class

    predictions: ``list``
        The predicted :class:`recipe_workflows.core.WorkflowGraph`, in the order of ``dataset``

    """
    for recipe in dataset:
        if not recipe.has_gold:
            raise DataError("recipe \"{}\" has no gold workflow, it cannot be evaluated".format(recipe.id))
    gold = [recipe.gold_workflow for recipe in dataset]
    predictions = builder.predict_dataset(dataset, theta)
    for recipe, pred in zip(dataset, predictions):
        if pred.n != recipe.n:
            raise DataError("recipe \"{}\": the predicted workflow has {} nodes for {} steps"
                            "".format(recipe.id, pred.n, recipe.n))
    report = evaluate(gold, predictions, reduce_gold=reduce_gold)
    by_visibility = None
    if visibility is not None:
        by_visibility = recall_by_visibility([el.id for el in dataset], gold, predictions, visibility)

    if logs_path is not None:
        os.makedirs(logs_path, exist_ok=True)
        report.save_as_json(logs_path, name=METRICS_FILE)
        if by_visibility is not None:
            with open(os.path.join(logs_path, VISIBILITY_METRICS_FILE), "w", encoding="utf-8") as f:
                json.dump(by_visibility, fp=f, indent=4, sort_keys=True)

    if verbose:
        print(MetricsReport.table_header())
        print(report.table_row(builder.name))
        if by_visibility is not None:
            for cls_nm, vals in sorted(by_visibility.items()):
                print("recall on {:<5} edges: {:6.2f} ({} / {})".format(cls_nm, 100. * vals["recall"],
                                                                       vals["n_found"], vals["n_gold_edges"]))
    return report, by_visibility, predictions
