# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.utils.PairwiseBuilder import PairwiseBuilder
from recipe_workflows.utils.pair_features import image_pair_features, NB_IMAGE_FEATURES

DEFAULT_NAME = "ImageSimilarity"


class ImageSimilarity(PairwiseBuilder):
    """
    Image baseline: a linear detector over the average, maximum and minimum cosine similarity between the images
    of two steps. A fourth feature flags the pairs where one of the steps has no image (its similarities are 0).
    """
    feature_fn = staticmethod(image_pair_features)
    nb_features = NB_IMAGE_FEATURES + 1

    def __init__(self, name=DEFAULT_NAME, theta=0.5, verbose=False):
        PairwiseBuilder.__init__(self, name, theta=theta, verbose=verbose)
