# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json

from recipe_workflows.Exceptions import ParseError, ValidationError
from recipe_workflows.core.CookingStep import CookingStep
from recipe_workflows.core.Recipe import Recipe
from recipe_workflows.core.WorkflowGraph import WorkflowGraph
from recipe_workflows.core.Dataset import Dataset
from recipe_workflows.core.tokenize import detokenize
from recipe_workflows.core.vocab import build_vocab


def recipe_to_json(recipe):
    """
    Represent a recipe as a json serializable dictionary.

    Keys are always written in the order ``id``, ``steps``, ``edges`` and floats are written with their full
    precision, so that serializing the same recipe twice gives exactly the same bytes.
    """
    steps = []
    for step in recipe.steps:
        steps.append({"text": detokenize(step.text),
                      "image_features": step.images.tolist()})
    edges = recipe.gold_workflow.to_list() if recipe.gold_workflow is not None else None
    return {"id": recipe.id, "steps": steps, "edges": edges}


def recipe_from_json(obj, line=None):
    """
    Build a :class:`recipe_workflows.core.Recipe` from its json representation.

    Structural problems of the json object raise a :class:`ParseError` (with the line number when given),
    violated invariants raise a :class:`ValidationError` naming the recipe.
    """
    if not isinstance(obj, dict):
        raise ParseError("a recipe should be a json object, found {}".format(type(obj).__name__), line)
    for key in ("id", "steps"):
        if key not in obj:
            raise ParseError("missing key \"{}\"".format(key), line)
    recipe_id = str(obj["id"])
    if not isinstance(obj["steps"], list):
        raise ParseError("\"steps\" should be a list", line)

    steps = []
    for k, step_json in enumerate(obj["steps"]):
        if not isinstance(step_json, dict) or "text" not in step_json:
            raise ParseError("step {} of recipe \"{}\" should be an object with a \"text\"".format(k, recipe_id),
                             line)
        images = step_json.get("image_features")
        if images is not None and not isinstance(images, list):
            raise ParseError("\"image_features\" of step {} should be a list of vectors".format(k), line)
        try:
            steps.append(CookingStep(k, str(step_json["text"]), images))
        except ValidationError as exc:
            raise ValidationError(str(exc), recipe_id) from exc
        except (TypeError, ValueError) as exc:
            raise ParseError("invalid image features in step {}: {}".format(k, exc), line) from exc

    gold = None
    edges = obj.get("edges")
    if edges is not None:
        if not isinstance(edges, list) or not all(isinstance(el, list) and len(el) == 2 for el in edges):
            raise ParseError("\"edges\" should be a list of [j, i] pairs", line)
        for el in edges:
            if any(isinstance(x, bool) or not isinstance(x, int) for x in el):
                raise ParseError("edge indices of recipe \"{}\" should be integers, found {}".format(recipe_id, el),
                                 line)
        try:
            gold = WorkflowGraph(len(steps), [(el[0], el[1]) for el in edges])
        except ValidationError as exc:
            raise ValidationError(str(exc), recipe_id) from exc
        except (TypeError, ValueError) as exc:
            raise ParseError("invalid edge in recipe \"{}\": {}".format(recipe_id, exc), line) from exc

    recipe = Recipe(recipe_id, steps, gold)
    recipe.validate()
    return recipe


def read_recipes(path):
    """read all the recipes of a JSON-Lines file, blank lines are ignored"""
    if not os.path.exists(path):
        raise FileNotFoundError("No path are located at \"{}\"".format(path))
    recipes = []
    with open(path, "r", encoding="utf-8") as f:
        for line_num, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError("malformed json ({})".format(exc.msg), line_num) from exc
            recipes.append(recipe_from_json(obj, line_num))
    return recipes


def load_dataset(path, d_img=None, min_count=1):
    """
    Load and validate a dataset stored as JSON-Lines, one recipe per line.

    Parameters
    ----------
    path: ``str``
        Path of the file

    d_img: ``int``
        Expected dimension of the image features. By default it is inferred from the first image found.

    min_count: ``int``
        Passed to :func:`recipe_workflows.core.build_vocab` for the vocabulary of the loaded dataset.

    Returns
    -------
    dataset: :class:`recipe_workflows.core.Dataset`

    """
    recipes = read_recipes(path)
    return Dataset(recipes, d_img=d_img, vocab=build_vocab(recipes, min_count=min_count))


def save_dataset(dataset, path):
    """write a dataset as JSON-Lines, ``load_dataset(path)`` gives back an equal dataset"""
    recipes = dataset.recipes if isinstance(dataset, Dataset) else dataset
    with open(path, "w", encoding="utf-8") as f:
        for recipe in recipes:
            f.write(json.dumps(recipe_to_json(recipe), ensure_ascii=False))
            f.write("\n")
