# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ConfigError
from recipe_workflows.utils.NNParam import NNParam
from recipe_workflows.FeedForwardPair.FeedForwardPair_NN import FeedForwardPair_NN


class FeedForwardPair_NNParam(NNParam):
    """
    Architecture of :class:`FeedForwardPair_NN`.

    Attributes
    ----------
    d_img: ``int``
        Dimension of the image feature vectors (the network input has twice this size)

    hidden_size: ``int``
        Number of units of the hidden layer

    theta: ``float``
        Default decision threshold

    """
    _int_attr = ["d_img", "hidden_size"]
    _float_attr = ["theta"]
    nn_class = FeedForwardPair_NN

    def __init__(self, d_img=32, hidden_size=64, theta=0.5):
        self.d_img = int(d_img)
        self.hidden_size = int(hidden_size)
        self.theta = float(theta)
        self.check()

    def check(self):
        if self.d_img < 1 or self.hidden_size < 1:
            raise ConfigError("d_img and hidden_size should be >= 1, found \"{}\" and \"{}\""
                              "".format(self.d_img, self.hidden_size))
        if not 0. <= self.theta <= 1.:
            raise ConfigError("theta should be in [0, 1], found \"{}\"".format(self.theta))
