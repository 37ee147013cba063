# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np

from recipe_workflows.Exceptions import ArgumentError


def init_adam_state(params):
    """first and second moment buffers (zeros) and the step counter, one entry per parameter"""
    return {"t": 0,
            "m": [np.zeros_like(param.data) for param in params],
            "v": [np.zeros_like(param.data) for param in params]}


def adam_step(params, grads, state, lr, betas=(0.9, 0.999), eps=1e-8):
    """
    One Adam update with bias correction, in place on ``params``.

    A ``None`` gradient is treated as a zero gradient: the moments decay but the parameter is only moved by what
    the moments still hold.
    """
    if len(params) != len(grads) or len(params) != len(state["m"]):
        raise ArgumentError("adam_step: {} parameters, {} gradients and {} moment buffers"
                            "".format(len(params), len(grads), len(state["m"])))
    beta1, beta2 = betas
    state["t"] += 1
    t = state["t"]
    corr1 = 1. - beta1 ** t
    corr2 = 1. - beta2 ** t
    for param, grad, m, v in zip(params, grads, state["m"], state["v"]):
        if grad is None:
            grad = np.zeros_like(param.data)
        m *= beta1
        m += (1. - beta1) * grad
        v *= beta2
        v += (1. - beta2) * grad * grad
        m_hat = m / corr1
        v_hat = v / corr2
        param.data = param.data - lr * m_hat / (np.sqrt(v_hat) + eps)


def clip_by_global_norm(grads, max_norm):
    """rescale the gradients so that their global L2 norm is at most ``max_norm``, returns the norm before"""
    norm = float(np.sqrt(sum(float((g * g).sum()) for g in grads if g is not None)))
    if max_norm is not None and norm > max_norm > 0.:
        scale = max_norm / norm
        grads = [None if g is None else g * scale for g in grads]
    return grads, norm


class Adam(object):
    """
    Adam optimizer over the trainable parameters of a :class:`recipe_workflows.tensor.Module`.

    .. code-block:: python

        from recipe_workflows.tensor import Adam, backward

        optimizer = Adam(network.parameters(), lr=1e-3)
        optimizer.zero_grad()
        backward(loss)
        optimizer.step()

    """
    def __init__(self, params, lr=1e-3, betas=(0.9, 0.999), eps=1e-8, max_global_norm_grad=None):
        self.params = list(params)
        self.lr = float(lr)
        self.betas = tuple(betas)
        self.eps = float(eps)
        self.max_global_norm_grad = max_global_norm_grad
        self.state = init_adam_state(self.params)
        self.last_grad_norm = None

    def zero_grad(self):
        for param in self.params:
            param.zero_grad()

    def step(self, scale=1.):
        """apply one update with the accumulated gradients multiplied by ``scale``"""
        grads = [None if param.grad is None else param.grad * scale for param in self.params]
        grads, self.last_grad_norm = clip_by_global_norm(grads, self.max_global_norm_grad)
        adam_step(self.params, grads, self.state, self.lr, self.betas, self.eps)
