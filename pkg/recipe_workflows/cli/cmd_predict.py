# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import re
import json

from tqdm import tqdm

from recipe_workflows.Exceptions import OutputExistsError, ArgumentError
from recipe_workflows.core.dataset_io import read_recipes
from recipe_workflows.graphkit.export_dot import export_dot
from recipe_workflows.utils.make_builder import load_builder

PREDICTIONS_NAME = "predictions.jsonl"
_UNSAFE_CHARS = re.compile(r"[^A-Za-z0-9._-]")


def dot_file_name(recipe_id):
    """file name of the DOT graph of a recipe: characters other than letters, digits, ``.``, ``_`` and ``-`` are
    replaced by ``_`` and leading dots are removed, so the file always stays in the output directory"""
    name = _UNSAFE_CHARS.sub("_", recipe_id).lstrip(".")
    return "{}.dot".format(name or "_")


def dot_path(output, recipe_id):
    """DOT file of a recipe, next to the predictions file"""
    return os.path.join(os.path.dirname(os.path.abspath(output)), dot_file_name(recipe_id))


def cmd_predict(run, dot=False, force=False, verbose=False):
    """
    Predict the workflow of every recipe of ``run.dataset`` (gold workflows, if any, are ignored).

    One json object ``{"id": ..., "n": ..., "edges": [[j, i], ...]}`` per line is written to ``run.output``
    (``predictions.jsonl`` next to the recipes by default) and, with ``dot``, one DOT file per recipe in the
    same directory, named after the recipe id by :func:`dot_file_name`.

    Returns
    -------
    predictions: ``list``
        The predicted :class:`recipe_workflows.core.WorkflowGraph`

    """
    run.require("dataset", "checkpoint")
    recipes = read_recipes(run.dataset)
    output = run.output
    if output is None:
        output = os.path.join(os.path.dirname(os.path.abspath(run.dataset)), PREDICTIONS_NAME)
    if dot:
        owners = {}
        for recipe in recipes:
            other = owners.setdefault(dot_file_name(recipe.id), recipe.id)
            if other != recipe.id:
                raise ArgumentError("recipes \"{}\" and \"{}\" would share the DOT file \"{}\""
                                    "".format(other, recipe.id, dot_file_name(recipe.id)))
    targets = [output] + ([dot_path(output, recipe.id) for recipe in recipes] if dot else [])
    existing = [el for el in targets if os.path.exists(el)]
    if existing and not force:
        raise OutputExistsError("\"{}\" already exists, use --force to overwrite it".format(existing[0]))
    os.makedirs(os.path.dirname(os.path.abspath(output)), exist_ok=True)

    builder = load_builder(run.mode, run.checkpoint, theta=run.theta, verbose=verbose)
    predictions = []
    with open(output, "w", encoding="utf-8") as f:
        for recipe in tqdm(recipes, disable=not verbose):
            pred = builder.predict(recipe)
            predictions.append(pred)
            f.write(json.dumps({"id": recipe.id, "n": pred.n, "edges": pred.to_list()}))
            f.write("\n")
            if dot:
                with open(dot_path(output, recipe.id), "w", encoding="utf-8") as f_dot:
                    f_dot.write(export_dot(recipe, pred))
    if verbose:
        print("INFO: workflows of {} recipes written to \"{}\"".format(len(recipes), output))
    return predictions
