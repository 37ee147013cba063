# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
Hand-crafted features of a pair of steps ``(j, i)``, ``j < i``, of the same recipe.

Textual features, in this order:

0. number of distinct content tokens (stopwords removed) shared by the two steps
1. TF-IDF cosine similarity of the two steps, the IDF being computed over the steps of the recipe
2. normalized distance ``(i - j) / n``
3. 1 if step ``i`` contains a parallel cue ("another", "separate", "meanwhile", "set aside", "in a second")
4. 1 if step ``i`` contains a definite anaphor ("the mixture", "the batter", "the dough", "it", "them")
5. Jaccard similarity of the token sets

Image features: average, maximum and minimum cosine similarity over all the cross pairs of images of the two
steps (all 0 when one of them has no image).
"""

import numpy as np
from sklearn.feature_extraction.text import TfidfVectorizer
from sklearn.metrics.pairwise import cosine_similarity

from recipe_workflows.Exceptions import ArgumentError
from recipe_workflows.utils.stopwords import content_tokens

PARALLEL_CUES = (("another",), ("separate",), ("meanwhile",), ("set", "aside"), ("in", "a", "second"))
ANAPHORS = (("the", "mixture"), ("the", "batter"), ("the", "dough"), ("it",), ("them",))

TEXT_FEATURE_NAMES = ("shared_content_tokens", "tfidf_cosine", "step_distance", "parallel_cue", "anaphor",
                      "jaccard")
IMAGE_FEATURE_NAMES = ("img_sim_avg", "img_sim_max", "img_sim_min")
NB_TEXT_FEATURES = len(TEXT_FEATURE_NAMES)
NB_IMAGE_FEATURES = len(IMAGE_FEATURE_NAMES)


def _check_pair(recipe, j, i):
    if not 0 <= j < i < recipe.n:
        raise ArgumentError("a step pair needs 0 <= j < i < n, found j={}, i={}, n={}".format(j, i, recipe.n))


def contains_phrase(tokens, phrase):
    """whether the token sequence ``phrase`` appears contiguously in ``tokens``"""
    size = len(phrase)
    return any(tuple(tokens[k:k + size]) == phrase for k in range(len(tokens) - size + 1))


def contains_any(tokens, phrases):
    return any(contains_phrase(tokens, el) for el in phrases)


def recipe_tfidf(recipe):
    """
    TF-IDF vectors (one row per step) of the content tokens of the steps, the documents being the steps of
    ``recipe``. A recipe without any content token gives zero vectors.
    """
    vectorizer = TfidfVectorizer(analyzer=content_tokens)
    try:
        return vectorizer.fit_transform([list(step.text) for step in recipe.steps])
    except ValueError:
        # empty vocabulary
        return np.zeros((recipe.n, 1))


def text_pair_features(recipe, j, i, tfidf=None):
    """
    The 6 textual features of the pair ``(j, i)``, see the module documentation.

    Parameters
    ----------
    recipe: :class:`recipe_workflows.core.Recipe`
        The recipe

    j, i: ``int``
        The two steps, ``j < i``

    tfidf:
        Output of :func:`recipe_tfidf` for this recipe (computed if not given)

    Returns
    -------
    res: :class:`numpy.ndarray`
        The features, shape ``(6,)``

    """
    _check_pair(recipe, j, i)
    if tfidf is None:
        tfidf = recipe_tfidf(recipe)
    tok_j = recipe.steps[j].text
    tok_i = recipe.steps[i].text
    shared = len(set(content_tokens(tok_j)) & set(content_tokens(tok_i)))
    cosine = float(cosine_similarity(tfidf[j:j + 1], tfidf[i:i + 1])[0, 0])
    all_j, all_i = set(tok_j), set(tok_i)
    jaccard = len(all_j & all_i) / len(all_j | all_i) if (all_j | all_i) else 0.
    return np.array([shared,
                     min(max(cosine, 0.), 1.),
                     (i - j) / recipe.n,
                     float(contains_any(tok_i, PARALLEL_CUES)),
                     float(contains_any(tok_i, ANAPHORS)),
                     jaccard], dtype=np.float64)


def image_pair_similarities(recipe, j, i):
    """``(avg, max, min)`` cosine similarity between the images of steps ``j`` and ``i``, symmetric in ``(j, i)``"""
    if not (0 <= j < recipe.n and 0 <= i < recipe.n):
        raise ArgumentError("steps {} and {} do not both exist in a recipe of {} steps".format(j, i, recipe.n))
    img_j = recipe.steps[j].images
    img_i = recipe.steps[i].images
    if img_j.shape[0] == 0 or img_i.shape[0] == 0:
        return 0., 0., 0.
    sims = cosine_similarity(img_j, img_i)
    return float(sims.mean()), float(sims.max()), float(sims.min())


def image_pair_features(recipe, j, i):
    """the 3 image similarities followed by an indicator set to 1 when one of the two steps has no image"""
    missing = recipe.steps[j].nb_images == 0 or recipe.steps[i].nb_images == 0
    return np.array(image_pair_similarities(recipe, j, i) + (float(missing),), dtype=np.float64)


def multimodal_pair_features(recipe, j, i, tfidf=None):
    """the 6 textual features followed by the 3 image similarities"""
    return np.concatenate([text_pair_features(recipe, j, i, tfidf=tfidf),
                           np.array(image_pair_similarities(recipe, j, i), dtype=np.float64)])


def recipe_pair_matrix(recipe, feature_fn):
    """
    Features of every pair ``j < i`` of the recipe, in the order of
    :func:`recipe_workflows.graphkit.EdgeProbMatrix.pairs` (by ``i`` then ``j``), as a list of ``(j, i)``.

    ``feature_fn(recipe, j, i)`` computes the features of one pair. The TF-IDF vectors are computed once per
    recipe when ``feature_fn`` accepts them.
    """
    pairs = [(j, i) for i in range(recipe.n) for j in range(i)]
    if feature_fn in (text_pair_features, multimodal_pair_features):
        tfidf = recipe_tfidf(recipe)
        rows = [feature_fn(recipe, j, i, tfidf=tfidf) for j, i in pairs]
    else:
        rows = [feature_fn(recipe, j, i) for j, i in pairs]
    if not rows:
        return pairs, np.zeros((0, 0), dtype=np.float64)
    return pairs, np.stack(rows)
