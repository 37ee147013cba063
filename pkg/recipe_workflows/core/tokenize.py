# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import re

# a word is a run of word characters, every other non blank character is a token on its own
_TOKEN_RE = re.compile(r"\w+|[^\w\s]", re.UNICODE)


def tokenize(text):
    """
    Split a step description into lower cased tokens.

    Words are split on whitespace and punctuation boundaries, punctuation marks are kept as tokens.

    Parameters
    ----------
    text: ``str``
        The raw text of a cooking step.

    Returns
    -------
    res: ``list``
        The list of tokens, for example ``tokenize("Mix the flour, then bake.")`` gives
        ``["mix", "the", "flour", ",", "then", "bake", "."]``

    """
    return [el.lower() for el in _TOKEN_RE.findall(text)]


def detokenize(tokens):
    """join tokens back into a string that :func:`tokenize` splits into the same tokens"""
    return " ".join(tokens)
