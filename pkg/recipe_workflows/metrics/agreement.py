# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np
from sklearn.metrics import cohen_kappa_score

from recipe_workflows.Exceptions import ArgumentError


def cohens_kappa(a, b):
    """
    Cohen's Kappa between two binary annotations of the same items.

    ``kappa = (p_o - p_e) / (1 - p_e)`` where ``p_o`` is the observed agreement and ``p_e`` the chance agreement
    given by the product of the marginals. When both annotators always give the same single label
    (``p_e == p_o == 1``) the agreement is perfect and 1.0 is returned.

    Examples
    --------

    .. code-block:: python

        from recipe_workflows.metrics import cohens_kappa

        cohens_kappa([1, 1, 0, 0], [1, 0, 0, 0])  # p_o = 0.75, p_e = 0.5 -> 0.5

    """
    a = np.asarray(a).reshape(-1)
    b = np.asarray(b).reshape(-1)
    if a.shape[0] != b.shape[0]:
        raise ArgumentError("annotations have different lengths: {} and {}".format(a.shape[0], b.shape[0]))
    if a.shape[0] == 0:
        raise ArgumentError("at least one annotated item is needed")
    labels = set(np.unique(a).tolist()) | set(np.unique(b).tolist())
    if not labels <= {0, 1}:
        raise ArgumentError("labels should be binary (0 / 1), found {}".format(sorted(labels)))
    if len(labels) == 1:
        return 1.0
    return float(cohen_kappa_score(a.astype(int), b.astype(int), labels=[0, 1]))


def graph_agreement(g_a, g_b):
    """
    Agreement between two workflows drawn for the same recipe.

    Each graph is turned into a one-hot vector over all the candidate pairs ``j < i`` and the Cohen's Kappa of
    the two vectors is returned.
    """
    if g_a.n != g_b.n:
        raise ArgumentError("graphs have {} and {} nodes".format(g_a.n, g_b.n))
    rows, cols = np.triu_indices(g_a.n, k=1)
    return cohens_kappa(g_a.adjacency()[rows, cols].astype(int), g_b.adjacency()[rows, cols].astype(int))
