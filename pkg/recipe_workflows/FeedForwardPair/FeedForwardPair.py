# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os

import numpy as np

from recipe_workflows.Exceptions import CheckpointError
from recipe_workflows.graphkit.EdgeProbMatrix import EdgeProbMatrix
from recipe_workflows.tensor.Adam import Adam
from recipe_workflows.tensor.Tensor import backward, no_grad
from recipe_workflows.tensor.checkpoint import save_checkpoint, load_checkpoint
from recipe_workflows.tensor import functional as F
from recipe_workflows.utils.BaseWorkflowBuilder import BaseWorkflowBuilder, EPS_LOSS
from recipe_workflows.utils.PairwiseBuilder import sample_balanced_pairs
from recipe_workflows.utils.TrainingParam import TrainingParam
from recipe_workflows.FeedForwardPair.FeedForwardPair_NN import step_pair_inputs
from recipe_workflows.FeedForwardPair.FeedForwardPair_NNParam import FeedForwardPair_NNParam

DEFAULT_NAME = "FeedForwardPair"


def candidate_pairs(n):
    """every ``(j, i)`` with ``j < i < n``, ordered by ``i`` then ``j``"""
    return [(j, i) for i in range(n) for j in range(i)]


def feedforward_pair_detector(recipe, j, i, network):
    """probability given by ``network`` (a :class:`FeedForwardPair_NN`) that ``(j, i)`` is an edge of ``recipe``"""
    with no_grad():
        return float(network.pair_proba(recipe, [(j, i)])[0])


class FeedForwardPair(BaseWorkflowBuilder):
    """
    Image baseline made of a two layer feed forward network over the concatenated image features of two steps.

    At each epoch a new balanced sample of step pairs (as many edges as non edges) is drawn from the training
    recipes and the network is trained on it with Adam, by minibatches of ``batch_size`` pairs.
    """
    def __init__(self, nn_archi=None, name=DEFAULT_NAME, theta=None, verbose=False):
        if nn_archi is None:
            nn_archi = FeedForwardPair_NNParam()
        BaseWorkflowBuilder.__init__(self, name, theta=nn_archi.theta if theta is None else theta, verbose=verbose)
        self.nn_archi = nn_archi
        self.network = None
        self._optimizer = None

    def predict_proba(self, recipe):
        if self.network is None:
            raise CheckpointError("the model \"{}\" has not been trained or loaded".format(self.name))
        pairs = candidate_pairs(recipe.n)
        probs = np.zeros((recipe.n, recipe.n), dtype=np.float64)
        with no_grad():
            values = self.network.pair_proba(recipe, pairs)
        for (j, i), val in zip(pairs, values):
            probs[i, j] = val
        return EdgeProbMatrix(recipe.n, probs)

    def _init_training(self, train_recipes, training_param, seed):
        if self.network is None:
            dims = {recipe.d_img for recipe in train_recipes if recipe.d_img is not None}
            if len(dims) == 1 and self.nn_archi.d_img not in dims:
                self.nn_archi = self.nn_archi.replace(d_img=dims.pop())
            self.network = self.nn_archi.make_nn(training_param, seed=seed)
        self._optimizer = Adam(self.network.parameters(),
                               lr=training_param.lr,
                               betas=training_param.betas,
                               eps=training_param.adam_eps,
                               max_global_norm_grad=training_param.max_global_norm_grad)

    def _train_epoch(self, train_recipes, rng):
        sample = sample_balanced_pairs(train_recipes, rng)
        d_img = self.nn_archi.d_img
        inputs = np.concatenate([step_pair_inputs(train_recipes[k], [(j, i)], d_img) for k, j, i, _ in sample])
        labels = np.array([el[3] for el in sample], dtype=np.float64)
        order = rng.permutation(len(sample))
        batch_size = self._training_param.batch_size
        losses = []
        self.network.train()
        for beg in range(0, len(order), batch_size):
            ids = order[beg:beg + batch_size]
            self._optimizer.zero_grad()
            loss = F.binary_cross_entropy(self.network(inputs[ids]), labels[ids], eps=EPS_LOSS)
            backward(loss)
            self._optimizer.step()
            losses.append(loss.item() * len(ids))
        self.network.eval()
        return float(np.sum(losses) / len(order))

    def _get_state(self):
        return self.network.state_dict()

    def _set_state(self, state):
        self.network.load_state_dict(state)

    def save(self, path):
        if path is None:
            return
        if self.network is None:
            raise CheckpointError("the model \"{}\" has not been trained or loaded".format(self.name))
        tmp_me = self._dir_to_save(path)
        if self._training_param is not None:
            self._training_param.save_as_json(tmp_me, name="training_params.json")
        self.nn_archi.save_as_json(tmp_me, "nn_architecture.json")
        save_checkpoint(self.network.state_dict(), os.path.join(tmp_me, "weights.json"))

    def load(self, path):
        tmp_me = self._dir_to_load(path)
        self.nn_archi = FeedForwardPair_NNParam.from_json(os.path.join(tmp_me, "nn_architecture.json"))
        tp_path = os.path.join(tmp_me, "training_params.json")
        if os.path.exists(tp_path):
            self._training_param = TrainingParam.from_json(tp_path)
        self.network = self.nn_archi.make_nn(self._training_param)
        try:
            self.network.load_state_dict(load_checkpoint(os.path.join(tmp_me, "weights.json")))
        except CheckpointError as exc:
            raise CheckpointError("Impossible to load the model located at \"{}\" with error \n{}".format(path, exc))
        self.network.eval()
