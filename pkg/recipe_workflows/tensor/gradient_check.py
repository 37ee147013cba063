# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
Comparison of the gradients computed by :func:`recipe_workflows.tensor.backward` with central finite differences.
"""

import numpy as np

from recipe_workflows.tensor.Tensor import backward, no_grad


def numerical_grad(loss_fn, params, h=1e-4):
    """
    Central differences ``(f(x + h) - f(x - h)) / 2h`` of the scalar ``loss_fn()`` with respect to each value of
    each parameter. The parameters are restored after the call.
    """
    res = []
    with no_grad():
        for param in params:
            grad = np.zeros_like(param.data)
            flat = param.data.reshape(-1)
            for k in range(flat.size):
                orig = flat[k]
                flat[k] = orig + h
                f_plus = float(loss_fn().data)
                flat[k] = orig - h
                f_minus = float(loss_fn().data)
                flat[k] = orig
                grad.reshape(-1)[k] = (f_plus - f_minus) / (2. * h)
            res.append(grad)
    return res


def relative_error(analytic, numeric, floor=1e-5):
    """elementwise ``|a - n| / max(|a| + |n|, floor)``"""
    analytic = np.asarray(analytic, dtype=np.float64)
    numeric = np.asarray(numeric, dtype=np.float64)
    return np.abs(analytic - numeric) / np.maximum(np.abs(analytic) + np.abs(numeric), floor)


def check_gradients(loss_fn, params, h=1e-4, tol=1e-3):
    """
    Compare the analytic gradients of ``loss_fn`` with the numerical ones.

    Returns
    -------
    ok: ``bool``
        Whether every relative error is below ``tol``

    max_err: ``float``
        The largest relative error

    """
    for param in params:
        param.zero_grad()
    backward(loss_fn())
    analytic = [np.zeros_like(param.data) if param.grad is None else param.grad.copy() for param in params]
    numeric = numerical_grad(loss_fn, params, h=h)
    max_err = 0.
    for a_grad, n_grad in zip(analytic, numeric):
        if a_grad.size:
            max_err = max(max_err, float(relative_error(a_grad, n_grad).max()))
    return max_err < tol, max_err
