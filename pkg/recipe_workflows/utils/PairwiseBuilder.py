# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os

import numpy as np

from recipe_workflows.Exceptions import TrainingError, CheckpointError
from recipe_workflows.graphkit.EdgeProbMatrix import EdgeProbMatrix
from recipe_workflows.graphkit.graph_algos import build_workflow
from recipe_workflows.utils.BaseWorkflowBuilder import BaseWorkflowBuilder, EPS_LOSS
from recipe_workflows.utils.LinearDetector import LinearDetector, train_linear_detector
from recipe_workflows.utils.TrainingParam import TrainingParam
from recipe_workflows.utils.pair_features import recipe_pair_matrix, recipe_tfidf, text_pair_features, \
    multimodal_pair_features


def sample_balanced_pairs(recipes, rng):
    """
    As many positive pairs (gold edges) as negative pairs (non edges ``j < i``), drawn without replacement from
    the recipes with the random generator ``rng``.

    Returns
    -------
    res: ``list``
        ``(recipe_position, j, i, label)`` sorted by recipe then pair, so the result only depends on ``rng``

    """
    positives = []
    negatives = []
    for k, recipe in enumerate(recipes):
        gold = recipe.gold_workflow
        for i in range(recipe.n):
            for j in range(i):
                if (j, i) in gold:
                    positives.append((k, j, i, 1))
                else:
                    negatives.append((k, j, i, 0))
    nb = min(len(positives), len(negatives))
    if nb == 0:
        raise TrainingError("balanced sampling needs both gold edges and non edges ({} edge(s), {} non edge(s))"
                            "".format(len(positives), len(negatives)))
    pos_id = rng.choice(len(positives), size=nb, replace=False)
    neg_id = rng.choice(len(negatives), size=nb, replace=False)
    res = [positives[el] for el in pos_id] + [negatives[el] for el in neg_id]
    return sorted(res)


def pairwise_proba(recipe, detector):
    """:class:`recipe_workflows.graphkit.EdgeProbMatrix` filled with ``detector(recipe, j, i)`` for each ``j < i``"""
    probs = np.zeros((recipe.n, recipe.n), dtype=np.float64)
    for i in range(recipe.n):
        for j in range(i):
            probs[i, j] = float(detector(recipe, j, i))
    return EdgeProbMatrix(recipe.n, probs)


def baseline_predict(recipe, detector, theta=0.5):
    """
    Workflow of ``recipe`` predicted from a pairwise detector: every pair is scored independently, then the graph
    is built with :func:`recipe_workflows.graphkit.build_workflow`.

    Parameters
    ----------
    recipe: :class:`recipe_workflows.core.Recipe`
        The recipe

    detector: ``callable``
        ``detector(recipe, j, i)`` returns the probability that ``(j, i)`` is an edge

    theta: ``float``
        The decision threshold

    """
    return build_workflow(pairwise_proba(recipe, detector), theta)


class PairwiseBuilder(BaseWorkflowBuilder):
    """
    A system made of a linear detector over the hand-crafted features of step pairs.

    The feature function is given by the subclasses with the class attribute ``feature_fn``
    (``feature_fn(recipe, j, i)`` returns the feature vector of a pair). The detector is fitted once on a balanced
    sample of pairs of the training recipes.
    """
    iterative = False
    feature_fn = staticmethod(text_pair_features)
    nb_features = None

    def __init__(self, name, theta=0.5, verbose=False):
        BaseWorkflowBuilder.__init__(self, name, theta=theta, verbose=verbose)
        self.detector = LinearDetector.zeros(self.nb_features)

    def pair_features(self, recipe):
        """``(pairs, features)`` of all the candidate pairs of ``recipe``"""
        return recipe_pair_matrix(recipe, type(self).feature_fn)

    def pair_proba(self, recipe, j, i):
        """probability that ``(j, i)`` is an edge, usable as the ``detector`` of :func:`baseline_predict`"""
        return float(self.detector.predict_proba(type(self).feature_fn(recipe, j, i)))

    def predict_proba(self, recipe):
        pairs, features = self.pair_features(recipe)
        probs = np.zeros((recipe.n, recipe.n), dtype=np.float64)
        if pairs:
            values = self.detector.predict_proba(features)
            for (j, i), val in zip(pairs, values):
                probs[i, j] = val
        return EdgeProbMatrix(recipe.n, probs)

    def sample_features(self, recipes, rng):
        """features and labels of a balanced sample of pairs"""
        sample = sample_balanced_pairs(recipes, rng)
        feature_fn = type(self).feature_fn
        takes_tfidf = feature_fn in (text_pair_features, multimodal_pair_features)
        cache = {}
        rows = []
        for k, j, i, _ in sample:
            if takes_tfidf:
                if k not in cache:
                    cache[k] = recipe_tfidf(recipes[k])
                rows.append(feature_fn(recipes[k], j, i, tfidf=cache[k]))
            else:
                rows.append(feature_fn(recipes[k], j, i))
        return np.stack(rows), np.array([el[3] for el in sample], dtype=np.float64)

    def _init_training(self, train_recipes, training_param, seed):
        self._seed = seed
        self.detector = LinearDetector.zeros(self.nb_features)

    def _train_epoch(self, train_recipes, rng):
        features, labels = self.sample_features(train_recipes, rng)
        tp = self._training_param
        self.detector = train_linear_detector(features, labels, l2=tp.l2, epochs=tp.detector_epochs, seed=self._seed)
        probs = np.clip(self.detector.predict_proba(features), EPS_LOSS, 1. - EPS_LOSS)
        return float(-np.mean(labels * np.log(probs) + (1. - labels) * np.log(1. - probs)))

    def _get_state(self):
        return self.detector.copy()

    def _set_state(self, state):
        self.detector = state.copy()

    def save(self, path):
        if path is None:
            return
        tmp_me = self._dir_to_save(path)
        if self._training_param is not None:
            self._training_param.save_as_json(tmp_me, name="training_params.json")
        self.detector.save(tmp_me)

    def load(self, path):
        tmp_me = self._dir_to_load(path)
        tp_path = os.path.join(tmp_me, "training_params.json")
        if os.path.exists(tp_path):
            self._training_param = TrainingParam.from_json(tp_path)
        detector = LinearDetector.load(tmp_me)
        if detector.nb_features != self.nb_features:
            raise CheckpointError("the detector stored in \"{}\" uses {} features, {} expects {}"
                                  "".format(tmp_me, detector.nb_features, self.name, self.nb_features))
        self.detector = detector
