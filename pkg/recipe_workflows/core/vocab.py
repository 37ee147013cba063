# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json
from collections import Counter, OrderedDict

import numpy as np

from recipe_workflows.Exceptions import ArgumentError, ValidationError

PAD_TOKEN = "<pad>"
UNK_TOKEN = "<unk>"
PAD_ID = 0
UNK_ID = 1


def build_vocab(recipes, min_count=1):
    """
    Build the token to id map used by the text encoders.

    Ids 0 and 1 are reserved for the padding and the unknown token. Every token appearing at least
    ``min_count`` times in the steps of ``recipes`` gets an id starting from 2. Ids are given by decreasing
    count then by lexicographic order of the token, so the result does not depend on the order of the recipes.

    Parameters
    ----------
    recipes: ``list``
        List of :class:`recipe_workflows.core.Recipe`

    min_count: ``int``
        Minimum number of occurrences for a token to get its own id (``>= 1``)

    Returns
    -------
    vocab: ``collections.OrderedDict``
        Token -> id mapping.

    """
    if min_count is None or int(min_count) < 1:
        raise ArgumentError("min_count should be >= 1, found \"{}\"".format(min_count))
    counts = Counter()
    for recipe in recipes:
        for step in recipe.steps:
            counts.update(step.text)

    vocab = OrderedDict()
    vocab[PAD_TOKEN] = PAD_ID
    vocab[UNK_TOKEN] = UNK_ID
    kept = sorted(((tok, cnt) for tok, cnt in counts.items() if cnt >= min_count),
                  key=lambda el: (-el[1], el[0]))
    for tok, _ in kept:
        vocab[tok] = len(vocab)
    return vocab


def encode_tokens(tokens, vocab):
    """convert a list of tokens into an array of ids, unknown tokens are mapped to UNK"""
    return np.array([vocab.get(tok, UNK_ID) for tok in tokens], dtype=np.int64)


def check_vocab(vocab):
    """raise a ValidationError if the reserved ids are not where they should be"""
    if vocab.get(PAD_TOKEN) != PAD_ID or vocab.get(UNK_TOKEN) != UNK_ID:
        raise ValidationError("vocabulary must map \"{}\" to {} and \"{}\" to {}"
                              "".format(PAD_TOKEN, PAD_ID, UNK_TOKEN, UNK_ID))
    ids = sorted(vocab.values())
    if ids != list(range(len(ids))):
        raise ValidationError("vocabulary ids must be contiguous starting at 0")


def save_vocab(vocab, path, name="vocab.json"):
    """save the vocabulary as a json file"""
    if not os.path.isdir(path):
        raise NotADirectoryError("\"{}\" should be a directory".format(path))
    with open(os.path.join(path, name), "w", encoding="utf-8") as f:
        json.dump(list(vocab.items()), fp=f, indent=1, ensure_ascii=False)


def load_vocab(path, name="vocab.json"):
    """load back a vocabulary saved with :func:`save_vocab`"""
    path_vocab = os.path.join(path, name)
    if not os.path.exists(path_vocab):
        raise FileNotFoundError("No path are located at \"{}\"".format(path_vocab))
    with open(path_vocab, "r", encoding="utf-8") as f:
        items = json.load(f)
    vocab = OrderedDict((str(tok), int(id_)) for tok, id_ in items)
    check_vocab(vocab)
    return vocab
