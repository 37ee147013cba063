# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np

from recipe_workflows.Exceptions import ShapeError
from recipe_workflows.tensor.Module import Module
from recipe_workflows.tensor.Tensor import as_tensor
from recipe_workflows.tensor.layers import Linear
from recipe_workflows.tensor import functional as F


def step_pair_inputs(recipe, pairs, d_img):
    """``(len(pairs), 2 * d_img)`` array: averaged images of step ``j`` followed by those of step ``i``"""
    means = np.stack([step.mean_image(d_img) for step in recipe.steps]) if recipe.n else np.zeros((0, d_img))
    if means.shape[1] != d_img:
        raise ShapeError("recipe \"{}\" has image features of dimension {}, the network expects {}"
                         "".format(recipe.id, means.shape[1], d_img))
    if not pairs:
        return np.zeros((0, 2 * d_img), dtype=np.float64)
    j_ids = np.array([el[0] for el in pairs])
    i_ids = np.array([el[1] for el in pairs])
    return np.concatenate([means[j_ids], means[i_ids]], axis=1)


class FeedForwardPair_NN(Module):
    """
    Two layer feed forward network scoring a step pair from the concatenation of the averaged image features of
    both steps: ``sigmoid(relu(x W1 + b1) W2 + b2)``.
    """
    def __init__(self, nn_params, training_param=None, seed=0):
        Module.__init__(self)
        self._nn_archi = nn_params
        self._training_param = training_param
        rng = np.random.default_rng(seed)
        self.d_img = nn_params.d_img
        self.hidden = self.add_module("hidden", Linear(2 * nn_params.d_img, nn_params.hidden_size, rng))
        self.output = self.add_module("output", Linear(nn_params.hidden_size, 1, rng))

    def forward(self, x):
        x = as_tensor(x)
        squeeze = x.ndim == 1
        if squeeze:
            x = F.reshape(x, (1, x.shape[0]))
        res = F.sigmoid(self.output(F.relu(self.hidden(x))))
        return F.reshape(res, (1,) if squeeze else (x.shape[0],))

    def pair_proba(self, recipe, pairs):
        """numpy probabilities of the ``(j, i)`` pairs of ``recipe``"""
        if not pairs:
            return np.zeros(0, dtype=np.float64)
        return self.forward(step_pair_inputs(recipe, pairs, self.d_img)).numpy().reshape(-1)
