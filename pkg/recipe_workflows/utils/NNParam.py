# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.utils.BaseParam import BaseParam


class NNParam(BaseParam):
    """
    Architecture of a neural network (sizes, number of layers, dropout etc.), saved as
    ``nn_architecture.json`` next to the weights of a trained system.

    It is recommended to overload this class for each specific network.

    Attributes
    ----------
    nn_class: ``type``
        The network class (a :class:`recipe_workflows.tensor.Module`) built by :func:`NNParam.make_nn`

    """
    _default_json_name = "nn_architecture.json"
    nn_class = None

    def make_nn(self, training_param=None, seed=0):
        """build the network described by this instance, initialized with the random seed ``seed``"""
        return self.nn_class(self, training_param=training_param, seed=seed)
