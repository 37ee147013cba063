# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
The fixed English stopword list (150 words, plus the punctuation tokens) used by the hand-crafted textual
features.

Cooking verbs (``add``, ``mix``, ``stir``...) and the parallel cues / anaphors looked for by
:mod:`recipe_workflows.utils.pair_features` are not in it.
"""

STOPWORDS = frozenset("""
a about above after again against all also am an and any are as at be because been before being below between
both but by can could did do does doing down during each few for from further had has have having he her here
hers herself him himself his how i if in into is its itself just me more most my myself no nor not now of off
on once only or other our ours ourselves out over own same she should so some such than that the their theirs
then there these they this those through to too under until up very was we were what when where which while who
whom why will with would you your yours yourself yourselves cannot must might may shall upon within without
across along among around behind beside beyond toward towards onto per via yet though although unless whether
either
, . ; : ! ? ( ) - ' " /
""".split())


def is_stopword(token):
    return token in STOPWORDS


def content_tokens(tokens):
    """the tokens that are not stopwords, in their original order"""
    return [el for el in tokens if el not in STOPWORDS]
