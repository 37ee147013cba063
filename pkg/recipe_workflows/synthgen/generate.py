# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np
from tqdm import tqdm

from recipe_workflows.core.CookingStep import CookingStep
from recipe_workflows.core.Dataset import Dataset
from recipe_workflows.core.Recipe import Recipe
from recipe_workflows.core.WorkflowGraph import WorkflowGraph
from recipe_workflows.graphkit.graph_algos import transitive_reduce
from recipe_workflows.metrics.visibility import VISIBILITY_CLASSES
from recipe_workflows.synthgen.GenConfig import GenConfig
from recipe_workflows.synthgen.templates import VERBS, INGREDIENTS, PRODUCTS, CONTAINERS, DISTRACTOR_PHRASE, \
    ANAPHOR_PHRASE

# probability that a step (other than the first) has a uniformly drawn main prerequisite
P_MAIN_PARENT = 0.8


def recipe_id(k):
    return "synth-{:05d}".format(k)


def plant_workflow(n, rng, parent_geometric_p):
    """
    Random workflow over ``n`` steps: each step gets a main prerequisite with probability 0.8 and a geometric
    number of extra ones, then the last step receives an edge from every step without successor. The result is
    transitively reduced.
    """
    edges = set()
    for i in range(1, n):
        candidates = list(range(i))
        if rng.random() < P_MAIN_PARENT:
            edges.add((int(rng.integers(i)), i))
        nb_extra = min(int(rng.geometric(parent_geometric_p)) - 1, i)
        if nb_extra > 0:
            for j in rng.choice(candidates, size=nb_extra, replace=False):
                edges.add((int(j), i))
    has_child = {j for j, _ in edges}
    for j in range(n - 1):
        if j not in has_child:
            edges.add((j, n - 1))
    return transitive_reduce(WorkflowGraph(n, edges))


def ingredient_directions(rng, n_ingredients, d_img):
    """one random unit vector per ingredient"""
    res = rng.standard_normal((n_ingredients, d_img))
    return res / np.linalg.norm(res, axis=1, keepdims=True)


def _step_text(verb, ingredient, product, text_parents, image_parents, container, distractor):
    tokens = [verb, "the", ingredient]
    for k, prod in enumerate(text_parents):
        tokens += ["with", "the", prod] if k == 0 else ["and", "the", prod]
    if image_parents:
        tokens += list(ANAPHOR_PHRASE)
    if container is not None:
        tokens += list(container)
    if distractor is not None:
        tokens += [el.format(distractor) for el in DISTRACTOR_PHRASE]
    tokens += ["to", "make", "the", product, "."]
    return tokens


def generate_recipe(k, config, directions, seed_seq):
    """
    The ``k``-th synthetic recipe and the visibility labels of its edges. It only depends on ``seed_seq`` (the
    sub-seed of the recipe) so recipes can be generated in any order.
    """
    rng = np.random.default_rng(seed_seq)
    n = int(rng.integers(config.steps_range[0], config.steps_range[1] + 1))
    gold = plant_workflow(n, rng, config.parent_geometric_p)
    parents = {i: gold.parents(i) for i in range(n)}

    p_vis = np.array(config.visibility) / np.sum(config.visibility)
    labels = {}
    for j, i in sorted(gold.edges, key=lambda el: (el[1], el[0])):
        labels[(j, i)] = VISIBILITY_CLASSES[int(rng.choice(len(VISIBILITY_CLASSES), p=p_vis))]

    products = rng.choice(len(PRODUCTS), size=n, replace=n > len(PRODUCTS))
    ingredients = rng.choice(config.n_ingredients, size=n, replace=n > config.n_ingredients)
    verbs = rng.choice(len(VERBS), size=n)

    steps = []
    used_containers = []
    for i in range(n):
        text_parents = [PRODUCTS[products[j]] for j in parents[i] if labels[(j, i)] in ("text", "both")]
        image_parents = [j for j in parents[i] if labels[(j, i)] in ("image", "both")]

        container = None
        if not parents[i]:
            free = [c for c in CONTAINERS if c not in used_containers] or list(CONTAINERS)
            cont = free[int(rng.integers(len(free)))]
            used_containers.append(cont)
            if i == 0:
                container = ("in", "a", cont)
            elif rng.random() < 0.5:
                container = ("in", "another", cont)
            else:
                container = ("in", "a", "separate", cont)

        distractor = None
        unrelated = [j for j in range(i) if j not in parents[i]]
        if unrelated and rng.random() < config.p_distractor:
            distractor = PRODUCTS[products[unrelated[int(rng.integers(len(unrelated)))]]]

        text = _step_text(VERBS[verbs[i]], INGREDIENTS[ingredients[i]], PRODUCTS[products[i]],
                          text_parents, image_parents, container, distractor)

        state = directions[ingredients[i]].copy()
        for j in image_parents:
            state += config.carry * directions[ingredients[j]]
        state /= max(np.linalg.norm(state), 1e-12)

        if rng.random() < config.p_no_image:
            images = np.zeros((0, config.d_img))
        else:
            nb_img = int(rng.integers(config.images_range[0], config.images_range[1] + 1))
            images = state + config.noise_sigma * rng.standard_normal((nb_img, config.d_img))
        steps.append(CookingStep(i, text, images, d_img=config.d_img))
    return Recipe(recipe_id(k), steps, gold), labels


def dataset_stats(dataset, visibility):
    """summary of a dataset: sizes, image coverage, text length, edges and share of each visibility class"""
    steps = [step for recipe in dataset for step in recipe.steps]
    nb_recipes = len(dataset)
    nb_steps = len(steps)
    counts = {cls_: 0 for cls_ in VISIBILITY_CLASSES}
    for labels in visibility.values():
        for cls_ in labels.values():
            counts[cls_] += 1
    nb_edges = sum(counts.values())
    return {
        "n_recipes": nb_recipes,
        "avg_steps_per_recipe": nb_steps / nb_recipes if nb_recipes else 0.,
        "avg_images_per_step": float(np.mean([el.nb_images for el in steps])) if steps else 0.,
        "pct_steps_with_images": 100. * float(np.mean([el.nb_images > 0 for el in steps])) if steps else 0.,
        "avg_tokens_per_step": float(np.mean([len(el.text) for el in steps])) if steps else 0.,
        "avg_edges_per_recipe": nb_edges / nb_recipes if nb_recipes else 0.,
        "visibility_shares": {cls_: (cnt / nb_edges if nb_edges else 0.) for cls_, cnt in counts.items()},
    }


def generate(config=None, verbose=False):
    """
    Generate a labeled synthetic dataset with planted workflows.

    Each step has an output product and an ingredient. Every planted edge is visible from the text of the
    successor (it names the product of its prerequisite), from its images (they add the ingredient direction of the
    prerequisite) or from both. Root steps other than the first one use a new container ("in another
    bowl") and some steps mention an unrelated product ("while the glaze rests").

    Parameters
    ----------
    config: :class:`GenConfig`
        The settings, default ones if ``None``

    verbose: ``bool``
        Display a progress bar

    Returns
    -------
    dataset: :class:`recipe_workflows.core.Dataset`
        The recipes, with their gold workflow

    visibility: ``dict``
        recipe id -> ``{(j, i): "text" | "image" | "both"}``

    stats: ``dict``
        See :func:`dataset_stats`

    """
    if config is None:
        config = GenConfig()
    children = np.random.SeedSequence(config.seed).spawn(config.n_recipes + 1)
    directions = ingredient_directions(np.random.default_rng(children[0]), config.n_ingredients, config.d_img)
    recipes = []
    visibility = {}
    for k in tqdm(range(config.n_recipes), disable=not verbose):
        recipe, labels = generate_recipe(k, config, directions, children[k + 1])
        recipes.append(recipe)
        visibility[recipe.id] = labels
    dataset = Dataset(recipes, d_img=config.d_img)
    return dataset, visibility, dataset_stats(dataset, visibility)
