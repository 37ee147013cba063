# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np

from recipe_workflows.Exceptions import ConfigError

DEFAULT_FRACTIONS = (0.8, 0.1, 0.1)


def split_indices(recipe_ids, seed, fractions=DEFAULT_FRACTIONS):
    """
    Random train / validation / test partition of recipe positions.

    The partition only depends on the set of identifiers and on ``seed``: the identifiers are sorted before being
    shuffled, so reordering the dataset file gives the same split.

    Returns
    -------
    train, val, test: ``list``
        Positions (in ``recipe_ids``) of each part, in increasing order

    """
    fractions = tuple(float(el) for el in fractions)
    if len(fractions) != 3 or any(el < 0. for el in fractions) or abs(sum(fractions) - 1.) > 1e-6:
        raise ConfigError("split fractions should be 3 non negative values summing to 1, found {}"
                          "".format(list(fractions)))
    order = sorted(range(len(recipe_ids)), key=lambda k: recipe_ids[k])
    perm = np.random.default_rng(seed).permutation(len(order))
    shuffled = [order[k] for k in perm]
    nb = len(shuffled)
    nb_train = int(round(fractions[0] * nb))
    nb_val = min(int(round(fractions[1] * nb)), nb - nb_train)
    train = sorted(shuffled[:nb_train])
    val = sorted(shuffled[nb_train:nb_train + nb_val])
    test = sorted(shuffled[nb_train + nb_val:])
    return train, val, test


def split_dataset(dataset, seed, fractions=DEFAULT_FRACTIONS):
    """the train, validation and test :class:`recipe_workflows.core.Dataset` (they share the vocabulary)"""
    ids = [el.id for el in dataset]
    return tuple(dataset.subset(part) for part in split_indices(ids, seed, fractions))
