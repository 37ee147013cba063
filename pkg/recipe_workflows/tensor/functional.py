# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
Differentiable operations on :class:`recipe_workflows.tensor.Tensor`.

Each function computes its forward value with numpy and registers on the gradient tape the exact derivative
used by :func:`recipe_workflows.tensor.backward`.
"""

import numpy as np
from scipy.special import expit

from recipe_workflows.Exceptions import ArgumentError, ShapeError
from recipe_workflows.tensor.Tensor import Tensor, as_tensor, make_result, add, sub, mul, div, neg, matmul, \
    slice_, reshape, transpose, sum_, mean

# large negative value added to the masked attention scores
MASK_VALUE = -1e9


def relu(x):
    x = as_tensor(x)
    pos = x.data > 0.
    return make_result("relu", np.where(pos, x.data, 0.), (x,), lambda g: (g * pos,))


def sigmoid(x):
    x = as_tensor(x)
    s = expit(x.data)
    return make_result("sigmoid", s, (x,), lambda g: (g * s * (1. - s),))


def tanh(x):
    x = as_tensor(x)
    t = np.tanh(x.data)
    return make_result("tanh", t, (x,), lambda g: (g * (1. - t * t),))


def exp(x):
    x = as_tensor(x)
    e = np.exp(x.data)
    return make_result("exp", e, (x,), lambda g: (g * e,))


def log(x):
    x = as_tensor(x)
    return make_result("log", np.log(x.data), (x,), lambda g: (g / x.data,))


def clip(x, low, high):
    """clamp the values in ``[low, high]``, no gradient flows where the value was clamped"""
    x = as_tensor(x)
    inside = (x.data >= low) & (x.data <= high)
    return make_result("clip", np.clip(x.data, low, high), (x,), lambda g: (g * inside,))


def softmax(x, axis=-1):
    x = as_tensor(x)
    shifted = x.data - x.data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    s = e / e.sum(axis=axis, keepdims=True)

    def _backward(g):
        return (s * (g - (g * s).sum(axis=axis, keepdims=True)),)
    return make_result("softmax", s, (x,), _backward)


def layer_norm(x, eps=1e-12):
    """
    Normalize the last axis to zero mean and unit variance (no affine part, see
    :class:`recipe_workflows.tensor.LayerNorm` for the learnable scale and shift).
    """
    x = as_tensor(x)
    dim = x.shape[-1]
    mu = x.data.mean(axis=-1, keepdims=True)
    centered = x.data - mu
    var = (centered ** 2).mean(axis=-1, keepdims=True)
    inv_std = 1. / np.sqrt(var + eps)
    xhat = centered * inv_std

    def _backward(g):
        g_sum = g.sum(axis=-1, keepdims=True)
        gx_sum = (g * xhat).sum(axis=-1, keepdims=True)
        return (inv_std / dim * (dim * g - g_sum - xhat * gx_sum),)
    return make_result("layer_norm", xhat, (x,), _backward)


def concat(tensors, axis=-1):
    tensors = [as_tensor(el) for el in tensors]
    if not tensors:
        raise ArgumentError("concat needs at least one tensor")
    try:
        data = np.concatenate([el.data for el in tensors], axis=axis)
    except ValueError:
        raise ShapeError("concat: incompatible shapes {} along axis {}".format([el.shape for el in tensors], axis))
    splits = np.cumsum([el.shape[axis] for el in tensors])[:-1]

    def _backward(g):
        return tuple(np.split(g, splits, axis=axis))
    return make_result("concat", data, tensors, _backward)


def stack(tensors, axis=0):
    tensors = [as_tensor(el) for el in tensors]
    if not tensors:
        raise ArgumentError("stack needs at least one tensor")
    try:
        data = np.stack([el.data for el in tensors], axis=axis)
    except ValueError:
        raise ShapeError("stack: incompatible shapes {}".format([el.shape for el in tensors]))

    def _backward(g):
        return tuple(np.take(g, k, axis=axis) for k in range(len(tensors)))
    return make_result("stack", data, tensors, _backward)


def embedding_lookup(weight, ids):
    """rows of ``weight`` selected by the integer array ``ids`` (any shape)"""
    weight = as_tensor(weight)
    ids = np.asarray(ids, dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= weight.shape[0]):
        raise ArgumentError("embedding_lookup: ids should be in [0, {}), found [{}, {}]"
                            "".format(weight.shape[0], ids.min(), ids.max()))

    def _backward(g):
        res = np.zeros_like(weight.data)
        np.add.at(res, ids, g)
        return (res,)
    return make_result("embedding_lookup", weight.data[ids], (weight,), _backward)


def dropout(x, rate, train_mode, rng=None):
    """
    Inverted dropout: in training mode each value is zeroed with probability ``rate`` and the others are scaled
    by ``1 / (1 - rate)``. Outside training mode, or without a random generator, it is the identity.
    """
    x = as_tensor(x)
    if not 0. <= rate < 1.:
        raise ArgumentError("dropout rate should be in [0, 1), found \"{}\"".format(rate))
    if not train_mode or rate == 0. or rng is None:
        return x
    keep = (rng.random(x.shape) >= rate) / (1. - rate)
    return make_result("dropout", x.data * keep, (x,), lambda g: (g * keep,))


def masked_scores(scores, mask):
    """add :data:`MASK_VALUE` to the scores where the boolean ``mask`` is false"""
    return add(scores, Tensor(np.where(mask, 0., MASK_VALUE)))


def binary_cross_entropy(probs, targets, weights=None, eps=1e-7):
    """
    Mean negative log likelihood of independent Bernoulli ``targets`` under ``probs``.

    Probabilities are clamped to ``[eps, 1 - eps]`` before the log. When ``weights`` (0 / 1 array) is given,
    only the selected entries count and the mean is taken over them.
    """
    probs = as_tensor(probs)
    targets = np.asarray(targets, dtype=np.float64)
    if targets.shape != probs.shape:
        raise ShapeError("binary_cross_entropy: probabilities {} and targets {}".format(probs.shape, targets.shape))
    if weights is None:
        weights = np.ones_like(targets)
    weights = np.asarray(weights, dtype=np.float64)
    nb = weights.sum()
    if nb == 0:
        raise ArgumentError("binary_cross_entropy: no entry selected")
    p = clip(probs, eps, 1. - eps)
    ll = add(mul(log(p), targets * weights), mul(log(sub(1., p)), (1. - targets) * weights))
    return div(neg(sum_(ll)), float(nb))


__all__ = ["add", "sub", "mul", "div", "neg", "matmul", "slice_", "reshape", "transpose", "sum_", "mean",
           "relu", "sigmoid", "tanh", "exp", "log", "clip", "softmax", "layer_norm", "concat", "stack",
           "embedding_lookup", "dropout", "masked_scores", "binary_cross_entropy", "MASK_VALUE"]
