# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from collections import OrderedDict

import numpy as np

from recipe_workflows.Exceptions import ConfigError, CheckpointError
from recipe_workflows.tensor.Tensor import Tensor


class Parameter(Tensor):
    """
    A leaf tensor owned by a model.

    Attributes
    ----------
    name: ``str``
        Local name of the parameter inside the module that owns it. The full path, for example
        ``"encoder.layer0.attn.wq.weight"``, is given by :func:`Module.named_parameters`

    trainable: ``bool``
        Whether the optimizer updates it (and so whether it requires a gradient)

    """
    def __init__(self, data, name, trainable=True):
        Tensor.__init__(self, np.array(data, dtype=np.float64), requires_grad=trainable, name=name)
        self.trainable = bool(trainable)

    def __repr__(self):
        return "Parameter(name=\"{}\", shape={}, trainable={})".format(self.name, self.shape, self.trainable)


class Module(object):
    """
    Base class of every neural building block: it owns named :class:`Parameter` and sub modules, and knows
    whether it is in training mode (dropout active) or not.
    """
    def __init__(self):
        self._params = OrderedDict()
        self._modules = OrderedDict()
        self.training = True

    def add_param(self, name, data, trainable=True):
        if name in self._params or name in self._modules:
            raise ConfigError("parameter name \"{}\" already used in {}".format(name, type(self).__name__))
        param = Parameter(data, name=name, trainable=trainable)
        self._params[name] = param
        return param

    def add_module(self, name, module):
        if name in self._params or name in self._modules:
            raise ConfigError("module name \"{}\" already used in {}".format(name, type(self).__name__))
        self._modules[name] = module
        return module

    def named_parameters(self, prefix=""):
        """list of ``(full_name, parameter)`` in a deterministic order, names are unique"""
        res = []
        for name, param in self._params.items():
            res.append((prefix + name, param))
        for name, module in self._modules.items():
            res.extend(module.named_parameters(prefix=prefix + name + "."))
        if not prefix:
            names = [el for el, _ in res]
            if len(set(names)) != len(names):
                raise ConfigError("parameter names are not unique")
        return res

    def parameters(self, trainable_only=True):
        return [param for _, param in self.named_parameters() if param.trainable or not trainable_only]

    def train(self, mode=True):
        self.training = bool(mode)
        for module in self._modules.values():
            module.train(mode)
        return self

    def eval(self):
        return self.train(False)

    def zero_grad(self):
        for param in self.parameters(trainable_only=False):
            param.zero_grad()

    def state_dict(self):
        """copy of all the parameter values, by full name"""
        return OrderedDict((name, param.data.copy()) for name, param in self.named_parameters())

    def load_state_dict(self, state):
        """set every parameter from ``state`` (name -> array), the names and shapes must match exactly"""
        params = OrderedDict(self.named_parameters())
        missing = sorted(set(params) - set(state))
        extra = sorted(set(state) - set(params))
        if missing or extra:
            raise CheckpointError("parameters do not match the model: missing {}, unexpected {}"
                                  "".format(missing, extra))
        for name, param in params.items():
            value = np.asarray(state[name], dtype=np.float64)
            if value.shape != param.shape:
                raise CheckpointError("parameter \"{}\" has shape {} in the checkpoint but {} in the model"
                                      "".format(name, value.shape, param.shape))
            param.data = value.copy()
            param.grad = None

    def nb_parameters(self):
        return int(sum(param.size for param in self.parameters(trainable_only=False)))

    def forward(self, *args, **kwargs):
        raise NotImplementedError()

    def __call__(self, *args, **kwargs):
        return self.forward(*args, **kwargs)
