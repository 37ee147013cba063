# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import warnings
from collections import OrderedDict

import numpy as np
from scipy.special import expit
from sklearn.exceptions import ConvergenceWarning
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler

from recipe_workflows.Exceptions import TrainingError, CheckpointError, ShapeError
from recipe_workflows.tensor.checkpoint import save_checkpoint, load_checkpoint


class LinearDetector(object):
    """
    Linear pairwise edge detector: ``P(edge) = sigmoid(x . weights + bias)`` for the feature vector ``x`` of a
    step pair.

    Attributes
    ----------
    weights: :class:`numpy.ndarray`
        One weight per feature, expressed on the raw (not standardized) features

    bias: ``float``
        The intercept

    """
    def __init__(self, weights, bias=0.):
        self.weights = np.array(weights, dtype=np.float64).reshape(-1)
        self.bias = float(bias)

    @classmethod
    def zeros(cls, nb_features):
        """the untrained detector, it outputs 0.5 for every pair"""
        return cls(np.zeros(nb_features), 0.)

    @property
    def nb_features(self):
        return self.weights.shape[0]

    def decision_function(self, features):
        features = np.asarray(features, dtype=np.float64)
        if features.shape[-1] != self.nb_features:
            raise ShapeError("linear detector: expected {} features, found shape {}"
                             "".format(self.nb_features, features.shape))
        return features @ self.weights + self.bias

    def predict_proba(self, features):
        return expit(self.decision_function(features))

    def copy(self):
        return LinearDetector(self.weights.copy(), self.bias)

    def save(self, path, name="weights.json"):
        save_checkpoint(OrderedDict([("weights", self.weights), ("bias", np.array([self.bias]))]),
                        os.path.join(path, name))

    @classmethod
    def load(cls, path, name="weights.json"):
        state = load_checkpoint(os.path.join(path, name))
        if "weights" not in state or "bias" not in state:
            raise CheckpointError("\"{}\" does not contain a linear detector".format(os.path.join(path, name)))
        return cls(state["weights"], float(state["bias"].reshape(-1)[0]))

    def __eq__(self, other):
        if not isinstance(other, LinearDetector):
            return NotImplemented
        return np.array_equal(self.weights, other.weights) and self.bias == other.bias

    def __repr__(self):
        return "LinearDetector(weights={}, bias={})".format(self.weights.tolist(), self.bias)


def train_linear_detector(features, labels, l2=1e-2, epochs=200, seed=0):
    """
    Fit a L2 regularized logistic regression on standardized features, and express it back on the raw features.

    Parameters
    ----------
    features: :class:`numpy.ndarray`
        Shape ``(nb_pairs, nb_features)``

    labels: :class:`numpy.ndarray`
        1 for a gold edge, 0 otherwise

    l2: ``float``
        Regularization strength (the inverse of the ``C`` of scikit-learn)

    epochs: ``int``
        Maximum number of iterations of the solver

    seed: ``int``
        Random state of the solver

    Returns
    -------
    res: :class:`LinearDetector`

    """
    features = np.asarray(features, dtype=np.float64)
    labels = np.asarray(labels).astype(np.int64).reshape(-1)
    if features.ndim != 2 or features.shape[0] != labels.shape[0]:
        raise ShapeError("train_linear_detector: features of shape {} for {} labels"
                         "".format(features.shape, labels.shape[0]))
    if np.unique(labels).shape[0] < 2:
        raise TrainingError("a detector cannot be trained on a single class (labels {})"
                            "".format(np.unique(labels).tolist()))
    scaler = StandardScaler()
    scaled = scaler.fit_transform(features)
    clf = LogisticRegression(C=1. / l2, solver="lbfgs", max_iter=int(epochs), random_state=seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", category=ConvergenceWarning)
        clf.fit(scaled, labels)
    w_scaled = clf.coef_.reshape(-1)
    weights = w_scaled / scaler.scale_
    bias = float(clf.intercept_[0] - np.sum(w_scaled * scaler.mean_ / scaler.scale_))
    return LinearDetector(weights, bias)
