# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ConfigError
from recipe_workflows.utils.BaseParam import BaseParam


class TrainingParam(BaseParam):
    """
    A class to store the training parameters of the systems.

    Attributes
    ----------
    lr: ``float``
        The learning rate of the Adam optimizer

    beta1: ``float``
        Decay rate of the first moment estimate of Adam

    beta2: ``float``
        Decay rate of the second moment estimate of Adam

    adam_eps: ``float``
        Constant added to the denominator of the Adam update

    epochs: ``int``
        Maximum number of passes over the training recipes

    batch_size: ``int``
        Number of recipes whose gradients are accumulated (and averaged) before each optimizer step

    patience: ``int``
        Training stops when the validation average F1 has not improved for this number of epochs. Set it to
        ``None`` to deactivate early stopping.

    max_global_norm_grad: ``float``
        Maximum global norm of the gradient (can make the training more stable), ``None`` to deactivate clipping

    l2: ``float``
        Strength of the L2 regularization of the linear pairwise detectors

    detector_epochs: ``int``
        Maximum number of solver iterations of the linear pairwise detectors

    """
    _default_json_name = "training_params.json"
    _int_attr = ["epochs", "batch_size", "patience", "detector_epochs"]
    _float_attr = ["lr", "beta1", "beta2", "adam_eps", "max_global_norm_grad", "l2"]

    def __init__(self,
                 lr=1e-3,
                 beta1=0.9,
                 beta2=0.999,
                 adam_eps=1e-8,
                 epochs=30,
                 batch_size=16,
                 patience=5,
                 max_global_norm_grad=None,
                 l2=1e-2,
                 detector_epochs=200):
        self.lr = float(lr)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.adam_eps = float(adam_eps)
        self.epochs = int(epochs)
        self.batch_size = int(batch_size)
        self.patience = int(patience) if patience is not None else None
        self.max_global_norm_grad = float(max_global_norm_grad) if max_global_norm_grad is not None else None
        self.l2 = float(l2)
        self.detector_epochs = int(detector_epochs)
        self.check()

    def check(self):
        if self.lr <= 0.:
            raise ConfigError("the learning rate should be > 0, found \"{}\"".format(self.lr))
        for nm in ["beta1", "beta2"]:
            if not 0. <= getattr(self, nm) < 1.:
                raise ConfigError("\"{}\" should be in [0, 1), found \"{}\"".format(nm, getattr(self, nm)))
        if self.epochs < 0:
            raise ConfigError("the number of epochs should be >= 0, found \"{}\"".format(self.epochs))
        if self.batch_size < 1:
            raise ConfigError("the batch size should be >= 1, found \"{}\"".format(self.batch_size))
        if self.patience is not None and self.patience < 1:
            raise ConfigError("the patience should be >= 1, found \"{}\"".format(self.patience))
        if self.l2 <= 0.:
            raise ConfigError("l2 should be > 0, found \"{}\"".format(self.l2))
        if self.detector_epochs < 1:
            raise ConfigError("detector_epochs should be >= 1, found \"{}\"".format(self.detector_epochs))

    @property
    def betas(self):
        return self.beta1, self.beta2
