# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import csv
import warnings
from abc import ABC, abstractmethod

import numpy as np
from tqdm import tqdm

from recipe_workflows.Exceptions import DataError, TrainingError, CheckpointError
from recipe_workflows.graphkit.EdgeProbMatrix import EdgeProbMatrix
from recipe_workflows.graphkit.graph_algos import build_workflow
from recipe_workflows.metrics.edge_metrics import evaluate
from recipe_workflows.utils.TrainingParam import TrainingParam

LOG_COLUMNS = ["epoch", "mean_loss", "val_loss", "best_val_loss", "val_edge_f1", "val_avg_f1"]
# probabilities are clamped to [EPS_LOSS, 1 - EPS_LOSS] in every cross entropy
EPS_LOSS = 1e-7


def recipe_bce(probs, gold):
    """cross entropy of the edge probabilities of one recipe against its gold workflow, averaged over the pairs"""
    n = probs.n
    if n < 2:
        raise DataError("a recipe needs at least 2 steps to have candidate edges")
    rows, cols = np.tril_indices(n, k=-1)
    p = np.clip(probs.probs[rows, cols], EPS_LOSS, 1. - EPS_LOSS)
    y = gold.adjacency().T[rows, cols].astype(np.float64)
    return float(-np.mean(y * np.log(p) + (1. - y) * np.log(1. - p)))


def trainable_recipes(dataset, what="training"):
    """
    The recipes of ``dataset`` usable for training or validation: every recipe must have a gold workflow, the
    recipes with less than 2 steps are skipped with a warning.
    """
    res = []
    nb_skipped = 0
    for recipe in dataset:
        if not recipe.has_gold:
            raise DataError("recipe \"{}\" has no gold workflow, it cannot be used for {}".format(recipe.id, what))
        if recipe.n < 2:
            nb_skipped += 1
            continue
        res.append(recipe)
    if nb_skipped:
        warnings.warn("{} recipe(s) with less than 2 steps are skipped for {}".format(nb_skipped, what))
    return res


class BaseWorkflowBuilder(ABC):
    """
    Interface shared by every system that builds workflow graphs: it scores every candidate edge of a recipe
    (:func:`BaseWorkflowBuilder.predict_proba`) and the graph is then built by thresholding and pruning
    (:func:`recipe_workflows.graphkit.build_workflow`).

    This class also implements the training schedule common to all the systems: epochs over the training recipes,
    evaluation on the validation recipes after each epoch, early stopping on the validation average F1 and a CSV
    log with the columns :data:`LOG_COLUMNS`. The systems only implement the abstract methods.

    Attributes
    ----------
    name: ``str``
        The name of the system, it is also the name of the directory in which it is saved

    theta: ``float``
        Default decision threshold used by :func:`BaseWorkflowBuilder.predict`

    verbose: ``bool``
        Whether to print information and progress bars

    train_log: ``list``
        One dictionary (keys :data:`LOG_COLUMNS`) per training epoch

    """
    # systems fitted in one go (linear detectors) train for a single epoch whatever the number of epochs asked
    iterative = True

    def __init__(self, name, theta=0.5, verbose=False):
        self.name = name
        self.theta = float(theta)
        self.verbose = verbose
        self._training_param = None
        self.train_log = []

    # interface
    @abstractmethod
    def predict_proba(self, recipe):
        """the :class:`recipe_workflows.graphkit.EdgeProbMatrix` of ``recipe``"""
        raise NotImplementedError()

    def predict(self, recipe, theta=None):
        """the predicted :class:`recipe_workflows.core.WorkflowGraph` of ``recipe``"""
        if recipe.n < 2:
            return build_workflow(EdgeProbMatrix(recipe.n), self.theta if theta is None else theta)
        return build_workflow(self.predict_proba(recipe), self.theta if theta is None else theta)

    def predict_dataset(self, dataset, theta=None):
        """the predicted workflows of all the recipes of ``dataset``, in order"""
        return [self.predict(recipe, theta) for recipe in tqdm(dataset, disable=not self.verbose)]

    @abstractmethod
    def save(self, path):
        """save the system in the directory ``path/name``"""
        raise NotImplementedError()

    @abstractmethod
    def load(self, path):
        """read back a system saved with :func:`BaseWorkflowBuilder.save` in ``path/name``"""
        raise NotImplementedError()

    # training hooks
    @abstractmethod
    def _init_training(self, train_recipes, training_param, seed):
        """create (or reset) everything that is learned, before the first epoch"""
        raise NotImplementedError()

    @abstractmethod
    def _train_epoch(self, train_recipes, rng):
        """one pass over the training recipes, returns the mean training loss"""
        raise NotImplementedError()

    @abstractmethod
    def _get_state(self):
        """a copy of everything that is learned"""
        raise NotImplementedError()

    @abstractmethod
    def _set_state(self, state):
        raise NotImplementedError()

    # helpers for the systems
    def get_path_model(self, path):
        return os.path.join(path, self.name)

    def _dir_to_save(self, path):
        if not os.path.exists(path):
            os.makedirs(path)
        if not os.path.isdir(path):
            raise NotADirectoryError("\"{}\" should be a directory".format(path))
        tmp_me = self.get_path_model(path)
        if not os.path.exists(tmp_me):
            os.mkdir(tmp_me)
        return tmp_me

    def _dir_to_load(self, path):
        tmp_me = self.get_path_model(path)
        if not os.path.isdir(tmp_me):
            raise CheckpointError("The model should be stored in \"{}\". But this appears to be empty".format(tmp_me))
        return tmp_me

    def validation_loss(self, recipes):
        """mean over the recipes of the cross entropy of the predicted probabilities"""
        if not recipes:
            return None
        return float(np.mean([recipe_bce(self.predict_proba(recipe), recipe.gold_workflow) for recipe in recipes]))

    # training
    def train(self,
              train_set,
              val_set=None,
              training_param=None,
              epochs=None,
              save_path=None,
              log_path=None,
              seed=0):
        """
        Train the system.

        Parameters
        ----------
        train_set: :class:`recipe_workflows.core.Dataset`
            The training recipes, all with a gold workflow

        val_set: :class:`recipe_workflows.core.Dataset`
            The validation recipes used for early stopping (``None`` to train for exactly ``epochs`` epochs)

        training_param: :class:`recipe_workflows.utils.TrainingParam`
            The meta parameters of the training

        epochs: ``int``
            Overrides ``training_param.epochs`` if not ``None``

        save_path: ``str``
            Where to save the system at the end of the training (the best epoch is kept), ``None`` to not save it

        log_path: ``str``
            Path of the CSV training log, ``None`` to not write it

        seed: ``int``
            Seed of every random choice made during training, two runs with the same seed are identical

        Returns
        -------
        train_log: ``list``
            One row (``dict``) per epoch

        """
        if training_param is None:
            training_param = TrainingParam()
        if epochs is not None:
            training_param = training_param.replace(epochs=int(epochs))
        self._training_param = training_param
        train_recipes = trainable_recipes(train_set, "training")
        val_recipes = trainable_recipes(val_set, "validation") if val_set is not None else []
        if not train_recipes:
            raise DataError("no recipe can be used for training")

        rng = np.random.default_rng(seed)
        self._init_training(train_recipes, training_param, seed)
        nb_epochs = training_param.epochs if self.iterative else min(training_param.epochs, 1)
        if self.verbose:
            print("INFO: training \"{}\" on {} recipes ({} for validation) for at most {} epoch(s)"
                  "".format(self.name, len(train_recipes), len(val_recipes), nb_epochs))

        self.train_log = []
        best_state = self._get_state()
        best_f1 = None
        best_val_loss = None
        nb_no_improvement = 0
        with tqdm(total=nb_epochs, disable=not self.verbose) as pbar:
            for epoch in range(1, nb_epochs + 1):
                mean_loss = self._train_epoch(train_recipes, rng)
                if not np.isfinite(mean_loss):
                    raise TrainingError("the training loss is not finite at epoch {}".format(epoch))
                row = {"epoch": epoch, "mean_loss": float(mean_loss), "val_loss": None, "best_val_loss": None,
                       "val_edge_f1": None, "val_avg_f1": None}
                if val_recipes:
                    val_loss = self.validation_loss(val_recipes)
                    report = evaluate([el.gold_workflow for el in val_recipes],
                                      [self.predict(el) for el in val_recipes])
                    best_val_loss = val_loss if best_val_loss is None else min(best_val_loss, val_loss)
                    row.update(val_loss=val_loss, best_val_loss=best_val_loss,
                               val_edge_f1=report.edge_f1, val_avg_f1=report.avg_f1)
                    if best_f1 is None or report.avg_f1 > best_f1:
                        best_f1 = report.avg_f1
                        best_state = self._get_state()
                        nb_no_improvement = 0
                    else:
                        nb_no_improvement += 1
                else:
                    best_state = self._get_state()
                self.train_log.append(row)
                if log_path is not None:
                    self.save_log(log_path)
                pbar.update(1)
                pbar.set_postfix(loss="{:.4f}".format(mean_loss))
                if training_param.patience is not None and nb_no_improvement >= training_param.patience:
                    if self.verbose:
                        print("INFO: early stopping at epoch {}, best validation average F1 {:.4f}"
                              "".format(epoch, best_f1))
                    break

        self._set_state(best_state)
        if log_path is not None:
            self.save_log(log_path)
        if save_path is not None:
            self.save(save_path)
        return self.train_log

    def save_log(self, log_path):
        """write :attr:`BaseWorkflowBuilder.train_log` as CSV"""
        with open(log_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(LOG_COLUMNS)
            for row in self.train_log:
                writer.writerow(["" if row[el] is None else
                                 (str(row[el]) if el == "epoch" else "{:.8f}".format(row[el]))
                                 for el in LOG_COLUMNS])
