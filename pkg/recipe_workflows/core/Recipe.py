# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ValidationError, DataError


class Recipe(object):
    """
    A recipe: an identifier, its ordered cooking steps and, when it is annotated, its gold workflow.

    Attributes
    ----------
    id: ``str``
        Identifier of the recipe, unique in a dataset

    steps: ``tuple``
        The :class:`recipe_workflows.core.CookingStep` of the recipe, ``steps[k].index == k``

    gold_workflow: :class:`recipe_workflows.core.WorkflowGraph` or ``None``
        The annotated workflow, ``None`` for an unlabeled recipe.

    """
    def __init__(self, id, steps, gold_workflow=None):
        self.id = str(id)
        self.steps = tuple(steps)
        self.gold_workflow = gold_workflow

    @property
    def n(self):
        return len(self.steps)

    @property
    def has_gold(self):
        return self.gold_workflow is not None

    @property
    def d_img(self):
        """dimension of the image features of this recipe, ``None`` if no step has any image"""
        for step in self.steps:
            if step.d_img is not None:
                return step.d_img
        return None

    def validate(self, min_steps=1):
        """check every structural invariant of the recipe, raise a :class:`ValidationError` otherwise"""
        if self.n < min_steps:
            raise ValidationError("a recipe needs at least {} steps, found {}".format(min_steps, self.n), self.id)
        dims = set()
        for k, step in enumerate(self.steps):
            if step.index != k:
                raise ValidationError("step at position {} has index {}".format(k, step.index), self.id)
            step.validate(self.id)
            if step.d_img is not None:
                dims.add(step.d_img)
        if len(dims) > 1:
            raise ValidationError("image feature dimension mismatch inside the recipe: {}".format(sorted(dims)),
                                  self.id)
        if self.gold_workflow is not None:
            if self.gold_workflow.n != self.n:
                raise ValidationError("gold workflow has {} nodes but the recipe has {} steps"
                                      "".format(self.gold_workflow.n, self.n), self.id)
            self.gold_workflow.validate(self.id)

    def check_trainable(self):
        """raise a :class:`DataError` if this recipe cannot be used for training or evaluation"""
        if self.gold_workflow is None:
            raise DataError("recipe \"{}\" has no gold workflow".format(self.id))
        if self.n < 2:
            raise DataError("recipe \"{}\" has {} step, at least 2 are needed".format(self.id, self.n))

    def replace(self, steps=None, gold_workflow=None, drop_gold=False):
        """return a copy of this recipe with some attributes replaced"""
        gold = None if drop_gold else (self.gold_workflow if gold_workflow is None else gold_workflow)
        return Recipe(self.id, self.steps if steps is None else steps, gold)

    def __eq__(self, other):
        if not isinstance(other, Recipe):
            return NotImplemented
        return self.id == other.id and self.steps == other.steps and self.gold_workflow == other.gold_workflow

    def __repr__(self):
        return "Recipe(id=\"{}\", n={}, gold={})".format(self.id, self.n, self.gold_workflow)
