# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import threading
from contextlib import contextmanager

import numpy as np

from recipe_workflows.Exceptions import ArgumentError, ShapeError

# the gradient tape is per thread: one training loop per worker
_TAPE_STATE = threading.local()


def is_grad_enabled():
    return getattr(_TAPE_STATE, "enabled", True)


@contextmanager
def no_grad():
    """
    Inside this context, operations are not recorded on the gradient tape (used for inference).

    .. code-block:: python

        from recipe_workflows.tensor import no_grad

        with no_grad():
            probs = network.decode(recipe)

    """
    prev = is_grad_enabled()
    _TAPE_STATE.enabled = False
    try:
        yield
    finally:
        _TAPE_STATE.enabled = prev


class TapeNode(object):
    """
    Entry of the gradient tape: how a tensor was computed.

    Attributes
    ----------
    op: ``str``
        Name of the operation, for error messages

    parents: ``tuple``
        The input :class:`Tensor` of the operation

    backward_fn: ``callable``
        Maps the gradient of the output to the tuple of gradients of the parents (``None`` for a parent that
        does not need one)

    """
    __slots__ = ("op", "parents", "backward_fn")

    def __init__(self, op, parents, backward_fn):
        self.op = op
        self.parents = parents
        self.backward_fn = backward_fn


class Tensor(object):
    """
    A n-dimensional array of double precision values that records, on the gradient tape, the operations it
    takes part in.

    Attributes
    ----------
    data: :class:`numpy.ndarray`
        The values, always ``float64``

    grad: :class:`numpy.ndarray` or ``None``
        Accumulated gradient (same shape as :attr:`Tensor.data`), only filled for the leaves of the tape that
        require a gradient, typically the parameters of a model

    requires_grad: ``bool``
        Whether a gradient should flow back to this tensor

    tape_node: :class:`TapeNode` or ``None``
        How this tensor was computed, ``None`` for a leaf

    """
    __array_priority__ = 100

    def __init__(self, data, requires_grad=False, name=None):
        self.data = np.asarray(data, dtype=np.float64)
        self.requires_grad = bool(requires_grad)
        self.grad = None
        self.tape_node = None
        self.name = name

    @property
    def shape(self):
        return self.data.shape

    @property
    def ndim(self):
        return self.data.ndim

    @property
    def size(self):
        return self.data.size

    def item(self):
        return float(self.data.reshape(-1)[0]) if self.data.size == 1 else self.data.item()

    def numpy(self):
        return self.data

    def zero_grad(self):
        self.grad = None

    def detach(self):
        """a constant tensor sharing the values of this one"""
        return Tensor(self.data)

    def backward(self):
        backward(self)

    # operators
    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __neg__(self):
        return neg(self)

    def __matmul__(self, other):
        return matmul(self, other)

    def __rmatmul__(self, other):
        return matmul(other, self)

    def __getitem__(self, item):
        return slice_(self, item)

    def sum(self, axis=None, keepdims=False):
        return sum_(self, axis=axis, keepdims=keepdims)

    def mean(self, axis=None, keepdims=False):
        return mean(self, axis=axis, keepdims=keepdims)

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        return reshape(self, shape)

    def transpose(self, *axes):
        if len(axes) == 1 and isinstance(axes[0], (tuple, list)):
            axes = tuple(axes[0])
        return transpose(self, axes if axes else None)

    def __repr__(self):
        return "Tensor(shape={}, requires_grad={})".format(self.shape, self.requires_grad)


def as_tensor(x):
    """wrap ``x`` in a constant :class:`Tensor` if it is not a tensor already"""
    if isinstance(x, Tensor):
        return x
    return Tensor(x)


def make_result(op, data, parents, backward_fn):
    """
    Create the output of an operation and record it on the tape when a parent needs a gradient.
    """
    res = Tensor(data)
    if is_grad_enabled() and any(el.requires_grad for el in parents):
        res.requires_grad = True
        res.tape_node = TapeNode(op, tuple(parents), backward_fn)
    return res


def unbroadcast(grad, shape):
    """sum ``grad`` over the axes that were broadcast to go from ``shape`` to ``grad.shape``"""
    if grad.shape == tuple(shape):
        return grad
    nb_extra = grad.ndim - len(shape)
    if nb_extra > 0:
        grad = grad.sum(axis=tuple(range(nb_extra)))
    axes = tuple(k for k, dim in enumerate(shape) if dim == 1 and grad.shape[k] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)
    return grad.reshape(shape)


def _broadcast_shape(op, a, b):
    try:
        return np.broadcast(a.data, b.data).shape
    except ValueError:
        raise ShapeError("{}: incompatible shapes {} and {}".format(op, a.shape, b.shape))


def _topological_order(root):
    order = []
    visited = set()
    stack = [(root, False)]
    while stack:
        node, processed = stack.pop()
        if processed:
            order.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        if node.tape_node is not None:
            for parent in node.tape_node.parents:
                if parent.requires_grad and id(parent) not in visited:
                    stack.append((parent, False))
    return order


def backward(loss):
    """
    Back propagate from a scalar ``loss``.

    After the call, the ``grad`` attribute of every leaf tensor that requires a gradient (the parameters) holds
    the derivative of ``loss`` with respect to it. Gradients accumulate across calls until they are reset with
    :func:`Tensor.zero_grad`.
    """
    if not isinstance(loss, Tensor):
        raise ArgumentError("backward expects a Tensor, found \"{}\"".format(type(loss).__name__))
    if loss.size != 1:
        raise ArgumentError("backward needs a scalar loss, found a tensor of shape {}".format(loss.shape))
    if not loss.requires_grad:
        raise ArgumentError("the loss is not on the gradient tape (no parameter requires a gradient)")

    order = _topological_order(loss)
    grads = {id(loss): np.ones_like(loss.data)}
    for node in reversed(order):
        grad = grads.pop(id(node), None)
        if grad is None:
            continue
        if node.tape_node is None:
            node.grad = grad.copy() if node.grad is None else node.grad + grad
            continue
        parent_grads = node.tape_node.backward_fn(grad)
        for parent, p_grad in zip(node.tape_node.parents, parent_grads):
            if p_grad is None or not parent.requires_grad:
                continue
            key = id(parent)
            if key in grads:
                grads[key] = grads[key] + p_grad
            else:
                grads[key] = p_grad


# arithmetic
def add(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("add", a, b)

    def _backward(g):
        return unbroadcast(g, a.shape), unbroadcast(g, b.shape)
    return make_result("add", a.data + b.data, (a, b), _backward)


def sub(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("sub", a, b)

    def _backward(g):
        return unbroadcast(g, a.shape), unbroadcast(-g, b.shape)
    return make_result("sub", a.data - b.data, (a, b), _backward)


def mul(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("mul", a, b)

    def _backward(g):
        return unbroadcast(g * b.data, a.shape), unbroadcast(g * a.data, b.shape)
    return make_result("mul", a.data * b.data, (a, b), _backward)


def div(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("div", a, b)

    def _backward(g):
        return unbroadcast(g / b.data, a.shape), unbroadcast(-g * a.data / (b.data ** 2), b.shape)
    return make_result("div", a.data / b.data, (a, b), _backward)


def neg(a):
    a = as_tensor(a)
    return make_result("neg", -a.data, (a,), lambda g: (-g,))


def matmul(a, b):
    """matrix product of the two last axes, the leading axes are broadcast (both inputs need ``ndim >= 2``)"""
    a, b = as_tensor(a), as_tensor(b)
    if a.ndim < 2 or b.ndim < 2:
        raise ShapeError("matmul: both operands need at least 2 dimensions, found {} and {}".format(a.shape, b.shape))
    if a.shape[-1] != b.shape[-2]:
        raise ShapeError("matmul: incompatible shapes {} and {}".format(a.shape, b.shape))
    try:
        data = np.matmul(a.data, b.data)
    except ValueError:
        raise ShapeError("matmul: incompatible shapes {} and {}".format(a.shape, b.shape))

    def _backward(g):
        g_a = np.matmul(g, np.swapaxes(b.data, -1, -2))
        g_b = np.matmul(np.swapaxes(a.data, -1, -2), g)
        return unbroadcast(g_a, a.shape), unbroadcast(g_b, b.shape)
    return make_result("matmul", data, (a, b), _backward)


# structure
def slice_(a, index):
    """``a[index]`` for any numpy index (basic or advanced), the gradient is scattered back"""
    a = as_tensor(a)
    if isinstance(index, Tensor):
        index = index.data.astype(np.int64)
    try:
        data = a.data[index]
    except IndexError as exc:
        raise ShapeError("slice: invalid index for shape {} ({})".format(a.shape, exc))

    basic = _is_basic_index(index)

    def _backward(g):
        res = np.zeros_like(a.data)
        if basic:
            res[index] += g
        else:
            # repeated indices must accumulate
            np.add.at(res, index, g)
        return (res,)
    return make_result("slice", np.array(data, dtype=np.float64), (a,), _backward)


def _is_basic_index(index):
    items = index if isinstance(index, tuple) else (index,)
    return all(isinstance(el, (int, np.integer, slice)) or el is None or el is Ellipsis for el in items)


def reshape(a, shape):
    a = as_tensor(a)
    try:
        data = a.data.reshape(shape)
    except ValueError:
        raise ShapeError("reshape: cannot reshape {} into {}".format(a.shape, shape))
    return make_result("reshape", data, (a,), lambda g: (g.reshape(a.shape),))


def transpose(a, axes=None):
    a = as_tensor(a)
    if axes is None:
        axes = tuple(reversed(range(a.ndim)))
    if sorted(axes) != list(range(a.ndim)):
        raise ShapeError("transpose: axes {} do not match shape {}".format(axes, a.shape))
    inv = tuple(np.argsort(axes))
    return make_result("transpose", np.transpose(a.data, axes), (a,), lambda g: (np.transpose(g, inv),))


def _norm_axes(axis, ndim):
    if axis is None:
        return tuple(range(ndim))
    if isinstance(axis, int):
        axis = (axis,)
    return tuple(sorted(el % ndim for el in axis))


def sum_(a, axis=None, keepdims=False):
    a = as_tensor(a)
    axes = _norm_axes(axis, a.ndim)

    def _backward(g):
        if not keepdims:
            for ax in axes:
                g = np.expand_dims(g, ax)
        return (np.broadcast_to(g, a.shape).copy(),)
    return make_result("sum", a.data.sum(axis=axes, keepdims=keepdims), (a,), _backward)


def mean(a, axis=None, keepdims=False):
    a = as_tensor(a)
    axes = _norm_axes(axis, a.ndim)
    count = int(np.prod([a.shape[ax] for ax in axes])) if axes else 1
    return div(sum_(a, axis=axes, keepdims=keepdims), float(max(count, 1)))
