# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json
import warnings

from recipe_workflows.Exceptions import ParseError, ArgumentError

VISIBILITY_CLASSES = ("text", "image", "both")
VISIBILITY_FORMAT_VERSION = 1


def sidecar_path(dataset_path):
    """where the visibility labels of a dataset file are stored"""
    return dataset_path + ".visibility.json"


def save_visibility(visibility, path):
    """
    Save the per edge visibility labels.

    Parameters
    ----------
    visibility: ``dict``
        recipe id -> ``{(j, i): "text" | "image" | "both"}``

    path: ``str``
        Output file

    """
    recipes = {}
    for recipe_id, labels in visibility.items():
        recipes[recipe_id] = [[int(j), int(i), str(lbl)]
                              for (j, i), lbl in sorted(labels.items(), key=lambda el: (el[0][1], el[0][0]))]
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"format_version": VISIBILITY_FORMAT_VERSION, "recipes": recipes}, fp=f, sort_keys=True)


def load_visibility(path):
    """read back the labels written by :func:`save_visibility`"""
    if not os.path.exists(path):
        raise FileNotFoundError("No path are located at \"{}\"".format(path))
    with open(path, "r", encoding="utf-8") as f:
        try:
            content = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError("malformed visibility file \"{}\" ({})".format(path, exc.msg), exc.lineno) from exc
    if content.get("format_version") != VISIBILITY_FORMAT_VERSION:
        raise ParseError("unsupported visibility format version \"{}\"".format(content.get("format_version")))
    res = {}
    for recipe_id, labels in content["recipes"].items():
        res[recipe_id] = {(int(j), int(i)): str(lbl) for j, i, lbl in labels}
    return res


def recall_by_visibility(recipe_ids, gold, pred, visibility):
    """
    Recall of the gold edges stratified by visibility class.

    Returns
    -------
    res: ``dict``
        class -> ``{"n_gold_edges": int, "n_found": int, "recall": float}``. Recall is 0 for a class without
        any gold edge.

    """
    if not len(recipe_ids) == len(gold) == len(pred):
        raise ArgumentError("recipe ids, gold and predicted workflows should have the same length")
    counts = {cls_: [0, 0] for cls_ in VISIBILITY_CLASSES}
    nb_missing = 0
    for recipe_id, g, p in zip(recipe_ids, gold, pred):
        labels = visibility.get(recipe_id)
        if labels is None:
            nb_missing += 1
            continue
        for edge in g.edges:
            cls_ = labels.get(edge)
            if cls_ not in counts:
                continue
            counts[cls_][0] += 1
            if edge in p.edges:
                counts[cls_][1] += 1
    if nb_missing:
        warnings.warn("{} recipes have no visibility labels, they are ignored in the breakdown".format(nb_missing))
    res = {}
    for cls_, (nb_gold, nb_found) in counts.items():
        res[cls_] = {"n_gold_edges": nb_gold,
                     "n_found": nb_found,
                     "recall": nb_found / nb_gold if nb_gold else 0.}
    return res
