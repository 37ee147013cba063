# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np
from sklearn.metrics.pairwise import cosine_similarity

from recipe_workflows.Exceptions import ArgumentError


def dedup_frames(features, tau=0.9):
    """
    Remove the near duplicate frames of a video, given their feature vectors in temporal order.

    Frames are scanned from left to right and a frame is dropped when its cosine similarity with the last kept
    frame is strictly above ``tau``. The first frame is always kept. The cosine similarity with a zero vector is 0.

    Parameters
    ----------
    features: ``list`` or :class:`numpy.ndarray`
        The feature vectors of the frames

    tau: ``float``
        The similarity threshold, in ``[-1, 1]``

    Returns
    -------
    kept: ``list``
        The indices of the kept frames, in increasing order

    Examples
    --------

    .. code-block:: python

        dedup_frames([[1., 0.], [0.95, 0.31], [0., 1.]], tau=0.9)  # [0, 2]

    """
    if not -1. <= tau <= 1.:
        raise ArgumentError("tau should be in [-1, 1], found \"{}\"".format(tau))
    if len(features) == 0:
        return []
    features = np.asarray(features, dtype=np.float64)
    if features.ndim != 2:
        raise ArgumentError("dedup_frames expects a list of vectors, found shape {}".format(features.shape))
    sims = cosine_similarity(features)
    kept = [0]
    for k in range(1, features.shape[0]):
        if sims[kept[-1], k] <= tau:
            kept.append(k)
    return kept


def dedup_step_images(step, tau=0.9):
    """the step with the near duplicate images removed (see :func:`dedup_frames`)"""
    if step.nb_images <= 1:
        return step
    return step.replace(images=step.images[dedup_frames(step.images, tau)])
