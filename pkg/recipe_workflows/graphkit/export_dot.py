# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ArgumentError

NB_TOKENS_LABEL = 6


def _quote(txt):
    return "\"{}\"".format(str(txt).replace("\\", "\\\\").replace("\"", "\\\""))


def step_label(step):
    """1-indexed number of the step followed by its first words"""
    words = list(step.text[:NB_TOKENS_LABEL])
    if len(step.text) > NB_TOKENS_LABEL:
        words.append("...")
    return "{}: {}".format(step.index + 1, " ".join(words))


def export_dot(recipe, g, **graph_attrs):
    """
    Render the workflow of a recipe in the DOT language.

    Nodes are named after the 1-indexed step number and labeled with the first words of the step. Keyword
    arguments are written as graph level attributes (``rankdir="LR"`` for example).

    Parameters
    ----------
    recipe: :class:`recipe_workflows.core.Recipe`
        The recipe the graph was built for

    g: :class:`recipe_workflows.core.WorkflowGraph`
        The workflow to render, must have as many nodes as the recipe has steps

    Returns
    -------
    res: ``str``
        The DOT source

    """
    if g.n != recipe.n:
        raise ArgumentError("graph has {} nodes but recipe \"{}\" has {} steps".format(g.n, recipe.id, recipe.n))
    attrs = {"rankdir": "TB"}
    attrs.update(graph_attrs)
    output = ["{}={};".format(k, _quote(v)) for k, v in sorted(attrs.items())]
    output.append("node [shape=box,fontname=\"sans-serif\",fontsize=\"12\"];")
    for step in recipe.steps:
        output.append("{} [label={}];".format(_quote(step.index + 1), _quote(step_label(step))))
    for j, i in g.sorted_edges():
        output.append("{} -> {};".format(_quote(j + 1), _quote(i + 1)))
    return "digraph {} {{\n{}\n}}\n".format(_quote(recipe.id), "\n".join("  " + el for el in output))
