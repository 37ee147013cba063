# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ValidationError
from recipe_workflows.core.vocab import build_vocab, check_vocab


class Dataset(object):
    """
    A collection of recipes sharing the same image feature dimension, together with a vocabulary.

    Datasets are never modified once built, the methods that "change" a dataset return a new one.

    Attributes
    ----------
    recipes: ``tuple``
        The :class:`recipe_workflows.core.Recipe` of the dataset

    d_img: ``int``
        Dimension of every image feature vector (0 if the dataset has no image at all)

    vocab: ``collections.OrderedDict``
        Token -> id map, see :func:`recipe_workflows.core.build_vocab`

    """
    def __init__(self, recipes, d_img=None, vocab=None, check=True):
        self.recipes = tuple(recipes)
        if d_img is None:
            d_img = 0
            for recipe in self.recipes:
                if recipe.d_img is not None:
                    d_img = recipe.d_img
                    break
        self.d_img = int(d_img)
        if vocab is None:
            vocab = build_vocab(self.recipes, min_count=1)
        self.vocab = vocab
        if check:
            self.validate()

    def validate(self):
        check_vocab(self.vocab)
        seen = set()
        for recipe in self.recipes:
            recipe.validate()
            if recipe.id in seen:
                raise ValidationError("duplicate recipe id", recipe.id)
            seen.add(recipe.id)
            if recipe.d_img is not None and recipe.d_img != self.d_img:
                raise ValidationError("image feature dimension mismatch: expected {}, found {}"
                                      "".format(self.d_img, recipe.d_img), recipe.id)

    @property
    def is_labeled(self):
        return all(el.has_gold for el in self.recipes)

    def subset(self, indices, vocab=None):
        """a new dataset made of the recipes at the given positions"""
        return Dataset([self.recipes[i] for i in indices],
                       d_img=self.d_img,
                       vocab=self.vocab if vocab is None else vocab,
                       check=False)

    def with_vocab(self, vocab):
        return Dataset(self.recipes, d_img=self.d_img, vocab=vocab, check=False)

    def get(self, recipe_id):
        for recipe in self.recipes:
            if recipe.id == recipe_id:
                return recipe
        raise KeyError(recipe_id)

    def __len__(self):
        return len(self.recipes)

    def __iter__(self):
        return iter(self.recipes)

    def __getitem__(self, item):
        return self.recipes[item]

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.d_img == other.d_img and self.recipes == other.recipes and \
            list(self.vocab.items()) == list(other.vocab.items())

    def __repr__(self):
        return "Dataset(nb_recipes={}, d_img={}, vocab_size={})".format(len(self), self.d_img, len(self.vocab))
