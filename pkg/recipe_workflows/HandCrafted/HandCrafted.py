# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.utils.PairwiseBuilder import PairwiseBuilder
from recipe_workflows.utils.pair_features import text_pair_features, NB_TEXT_FEATURES

DEFAULT_NAME = "HandCrafted"


class HandCrafted(PairwiseBuilder):
    """
    Text baseline: a linear detector over 6 hand-crafted features of each step pair (shared content words,
    TF-IDF cosine, normalized distance, parallel cue, anaphor and Jaccard similarity), see
    :func:`recipe_workflows.utils.pair_features.text_pair_features`.

    Examples
    --------

    .. code-block:: python

        from recipe_workflows.HandCrafted import HandCrafted

        system = HandCrafted()
        system.train(train_set, val_set, save_path="saved_models")
        workflow = system.predict(test_set[0])

    """
    feature_fn = staticmethod(text_pair_features)
    nb_features = NB_TEXT_FEATURES

    def __init__(self, name=DEFAULT_NAME, theta=0.5, verbose=False):
        PairwiseBuilder.__init__(self, name, theta=theta, verbose=verbose)
