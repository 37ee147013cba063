# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os

import numpy as np

from recipe_workflows.Exceptions import CheckpointError
from recipe_workflows.core.vocab import build_vocab, save_vocab, load_vocab
from recipe_workflows.graphkit.EdgeProbMatrix import EdgeProbMatrix
from recipe_workflows.tensor.Adam import Adam
from recipe_workflows.tensor.Tensor import backward
from recipe_workflows.tensor.checkpoint import save_checkpoint, load_checkpoint
from recipe_workflows.utils.BaseWorkflowBuilder import BaseWorkflowBuilder
from recipe_workflows.utils.TrainingParam import TrainingParam
from recipe_workflows.PointerWorkflow.PointerWorkflow_NNParam import PointerWorkflow_NNParam

DEFAULT_NAME = "PointerWorkflow"


class PointerWorkflow(BaseWorkflowBuilder):
    """
    The multi-modal pointer network: it encodes every step from its images and its text, contextualizes the steps
    with a transformer-like recipe encoder and points, for each step, to the previous steps it depends on.

    Attributes
    ----------
    nn_archi: :class:`PointerWorkflow_NNParam`
        The architecture of the network

    vocab: ``collections.OrderedDict``
        The word -> id map of the network (built on the training recipes if not given)

    network: :class:`recipe_workflows.PointerWorkflow.PointerWorkflow_NN`
        The network, ``None`` before training or loading

    Examples
    --------

    .. code-block:: python

        from recipe_workflows.core import load_dataset
        from recipe_workflows.PointerWorkflow import PointerWorkflow, PointerWorkflow_NNParam

        dataset = load_dataset("recipes.jsonl")
        model = PointerWorkflow(PointerWorkflow_NNParam(d_img=dataset.d_img, fusion_mode="concat"))
        model.train(dataset, epochs=5, save_path="saved_models")
        workflow = model.predict(dataset[0])

    """
    def __init__(self, nn_archi=None, name=DEFAULT_NAME, theta=None, vocab=None, verbose=False):
        if nn_archi is None:
            nn_archi = PointerWorkflow_NNParam()
        BaseWorkflowBuilder.__init__(self, name, theta=nn_archi.theta if theta is None else theta, verbose=verbose)
        self.nn_archi = nn_archi
        self.vocab = vocab
        self.network = None
        self._optimizer = None

    def predict_proba(self, recipe):
        if self.network is None:
            raise CheckpointError("the model \"{}\" has not been trained or loaded".format(self.name))
        if recipe.n < 2:
            return EdgeProbMatrix(recipe.n)
        self.network.eval()
        return self.network.edge_probs(recipe, self.vocab)

    # training
    def prepare(self, train_recipes, training_param=None, seed=0):
        """create the network (if needed) and the optimizer without training, see :func:`PointerWorkflow.train_step`"""
        if training_param is None:
            training_param = TrainingParam()
        self._training_param = training_param
        self._init_training(list(train_recipes), training_param, seed)

    def _init_training(self, train_recipes, training_param, seed):
        if self.network is not None:
            # reloaded model: training continues from its weights
            self._make_optimizer(training_param)
            return
        if self.vocab is None:
            self.vocab = build_vocab(train_recipes, min_count=1)
        updates = {"vocab_size": len(self.vocab)}
        dims = {recipe.d_img for recipe in train_recipes if recipe.d_img is not None}
        if len(dims) == 1 and self.nn_archi.d_img not in dims:
            updates["d_img"] = dims.pop()
            if self.verbose:
                print("INFO: image feature dimension set to {} from the training data".format(updates["d_img"]))
        self.nn_archi = self.nn_archi.replace(**updates)
        self.network = self.nn_archi.make_nn(training_param, seed=seed)
        self._make_optimizer(training_param)

    def _make_optimizer(self, training_param):
        self._optimizer = Adam(self.network.parameters(),
                               lr=training_param.lr,
                               betas=training_param.betas,
                               eps=training_param.adam_eps,
                               max_global_norm_grad=training_param.max_global_norm_grad)

    def _train_epoch(self, train_recipes, rng):
        network = self.network
        network.train()
        order = rng.permutation(len(train_recipes))
        batch_size = self._training_param.batch_size
        losses = []
        for beg in range(0, len(order), batch_size):
            batch = [train_recipes[k] for k in order[beg:beg + batch_size]]
            self._optimizer.zero_grad()
            for recipe in batch:
                loss = network.loss(network(recipe, self.vocab, rng=rng), recipe.gold_workflow)
                backward(loss)
                losses.append(loss.item())
            self._optimizer.step(scale=1. / len(batch))
        network.eval()
        return float(np.mean(losses))

    def train_step(self, recipes):
        """one optimizer step on ``recipes`` (gradients averaged over them), returns the mean loss before it"""
        self.network.train()
        self._optimizer.zero_grad()
        losses = []
        for recipe in recipes:
            loss = self.network.loss(self.network(recipe, self.vocab), recipe.gold_workflow)
            backward(loss)
            losses.append(loss.item())
        self._optimizer.step(scale=1. / len(recipes))
        self.network.eval()
        return float(np.mean(losses))

    def _get_state(self):
        return self.network.state_dict()

    def _set_state(self, state):
        self.network.load_state_dict(state)

    # save / load
    def save(self, path):
        """
        Save the model in ``path/name``: ``nn_architecture.json``, ``training_params.json``, ``vocab.json`` and
        the weights ``weights.json``.
        """
        if path is None:
            return
        if self.network is None:
            raise CheckpointError("the model \"{}\" has not been trained or loaded".format(self.name))
        tmp_me = self._dir_to_save(path)
        if self._training_param is not None:
            self._training_param.save_as_json(tmp_me, name="training_params.json")
        self.nn_archi.save_as_json(tmp_me, "nn_architecture.json")
        save_vocab(self.vocab, tmp_me)
        save_checkpoint(self.network.state_dict(), os.path.join(tmp_me, "weights.json"))

    def load(self, path):
        """
        Read back a model saved with :func:`PointerWorkflow.save`. The architecture stored next to the weights
        replaces the one given at construction.
        """
        tmp_me = self._dir_to_load(path)
        self.nn_archi = PointerWorkflow_NNParam.from_json(os.path.join(tmp_me, "nn_architecture.json"))
        tp_path = os.path.join(tmp_me, "training_params.json")
        if os.path.exists(tp_path):
            self._training_param = TrainingParam.from_json(tp_path)
        self.vocab = load_vocab(tmp_me)
        self.network = self.nn_archi.make_nn(self._training_param)
        try:
            self.network.load_state_dict(load_checkpoint(os.path.join(tmp_me, "weights.json")))
        except CheckpointError as exc:
            raise CheckpointError("Impossible to load the model located at \"{}\" with error \n{}".format(path, exc))
        self.network.eval()
