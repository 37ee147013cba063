# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import warnings

from recipe_workflows.Exceptions import ArgumentError
from recipe_workflows.graphkit import transitive_reduce
from recipe_workflows.metrics.MetricsReport import MetricsReport, f1


def _ratio(num, denom, other_size):
    # empty denominator: 1 only if the other edge set is empty too
    if denom == 0:
        return 1. if other_size == 0 else 0.
    return num / denom


def _check_pairs(gold, pred):
    gold = list(gold)
    pred = list(pred)
    if len(gold) != len(pred):
        raise ArgumentError("{} gold workflows but {} predicted ones".format(len(gold), len(pred)))
    if not gold:
        raise ArgumentError("at least one workflow is needed for the evaluation")
    for k, (g, p) in enumerate(zip(gold, pred)):
        if g.n != p.n:
            raise ArgumentError("workflow {}: gold graph has {} nodes, predicted one has {}".format(k, g.n, p.n))
    return gold, pred


def evaluate(gold, pred, reduce_gold=False):
    """
    Compare predicted workflows to the gold ones.

    With ``E_k`` the gold edges and ``F_k`` the predicted edges of recipe ``k`` (``N`` recipes):

    - edge level precision ``sum_k |F_k & E_k| / sum_k |F_k|`` and recall ``sum_k |F_k & E_k| / sum_k |E_k|``
    - recipe level precision ``1/N sum_k |F_k & E_k| / |F_k|`` and recall ``1/N sum_k |F_k & E_k| / |E_k|``

    A ratio with an empty denominator counts 1 when both edge sets are empty, 0 otherwise.

    Parameters
    ----------
    gold: ``list``
        The gold :class:`recipe_workflows.core.WorkflowGraph`

    pred: ``list``
        The predicted workflows, in the same order

    reduce_gold: ``bool``
        Whether to apply :func:`recipe_workflows.graphkit.transitive_reduce` to the gold graphs first

    Returns
    -------
    res: :class:`recipe_workflows.metrics.MetricsReport`

    """
    gold, pred = _check_pairs(gold, pred)
    if reduce_gold:
        gold = [transitive_reduce(el) for el in gold]

    correct_tot = 0
    pred_tot = 0
    gold_tot = 0
    recipe_p = 0.
    recipe_r = 0.
    for g, p in zip(gold, pred):
        correct = len(g.edges & p.edges)
        correct_tot += correct
        pred_tot += len(p)
        gold_tot += len(g)
        recipe_p += _ratio(correct, len(p), len(g))
        recipe_r += _ratio(correct, len(g), len(p))
    nb = len(gold)
    return MetricsReport(edge_p=_ratio(correct_tot, pred_tot, gold_tot),
                         edge_r=_ratio(correct_tot, gold_tot, pred_tot),
                         recipe_p=recipe_p / nb,
                         recipe_r=recipe_r / nb,
                         n_recipes=nb,
                         n_gold_edges=gold_tot,
                         n_pred_edges=pred_tot)


def pair_accuracy(gold, pred):
    """fraction of all the candidate pairs ``j < i`` whose edge / no edge status is predicted correctly"""
    gold, pred = _check_pairs(gold, pred)
    nb_pairs = 0
    nb_ok = 0
    for g, p in zip(gold, pred):
        pairs = g.n * (g.n - 1) // 2
        nb_pairs += pairs
        nb_ok += pairs - len(g.edges ^ p.edges)
    if nb_pairs == 0:
        warnings.warn("pair accuracy computed on workflows without any candidate pair")
        return 1.
    return nb_ok / nb_pairs
