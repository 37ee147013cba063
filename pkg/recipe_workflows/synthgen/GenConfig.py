# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np

from recipe_workflows.Exceptions import ConfigError
from recipe_workflows.utils.BaseParam import BaseParam
from recipe_workflows.synthgen.templates import INGREDIENTS


class GenConfig(BaseParam):
    """
    Settings of the synthetic recipe generator.

    Attributes
    ----------
    n_recipes: ``int``
        Number of recipes

    steps_range: ``list``
        ``[n_min, n_max]``, the number of steps of a recipe is uniform in this range (``n_min >= 2``)

    d_img: ``int``
        Dimension of the image feature vectors

    n_ingredients: ``int``
        Number of distinct ingredients (each has its own direction in the image feature space)

    parent_geometric_p: ``float``
        Success probability of the geometric law giving the number of extra prerequisites of a step

    visibility: ``list``
        ``[p_text_only, p_image_only, p_both]``, probabilities that a planted edge is visible from the text only,
        from the images only or from both. They sum to 1.

    noise_sigma: ``float``
        Standard deviation of the Gaussian noise added to every image feature

    seed: ``int``
        Seed of the generator

    images_range: ``list``
        ``[min, max]`` number of images of a step that has images

    p_no_image: ``float``
        Probability that a step has no image at all

    p_distractor: ``float``
        Probability that a step mentions the product of an earlier step it does not depend on

    carry: ``float``
        Weight of the ingredient direction of a prerequisite added to the images of a step along an image visible
        edge. Only direct prerequisites contribute.

    """
    _default_json_name = "gen_config.json"
    _int_attr = ["n_recipes", "d_img", "n_ingredients", "seed"]
    _float_attr = ["parent_geometric_p", "noise_sigma", "p_no_image", "p_distractor", "carry"]
    _list_int = ["steps_range", "images_range"]
    _list_float = ["visibility"]

    def __init__(self,
                 n_recipes=2000,
                 steps_range=(6, 12),
                 d_img=32,
                 n_ingredients=40,
                 parent_geometric_p=0.6,
                 visibility=(0.4, 0.3, 0.3),
                 noise_sigma=0.1,
                 seed=42,
                 images_range=(1, 3),
                 p_no_image=0.,
                 p_distractor=0.3,
                 carry=0.7):
        self.n_recipes = int(n_recipes)
        self.steps_range = [int(el) for el in steps_range]
        self.d_img = int(d_img)
        self.n_ingredients = int(n_ingredients)
        self.parent_geometric_p = float(parent_geometric_p)
        self.visibility = [float(el) for el in visibility]
        self.noise_sigma = float(noise_sigma)
        self.seed = int(seed)
        self.images_range = [int(el) for el in images_range]
        self.p_no_image = float(p_no_image)
        self.p_distractor = float(p_distractor)
        self.carry = float(carry)
        self.check()

    def check(self):
        if self.n_recipes < 0:
            raise ConfigError("n_recipes should be >= 0, found \"{}\"".format(self.n_recipes))
        if len(self.steps_range) != 2 or self.steps_range[0] < 2 or self.steps_range[0] > self.steps_range[1]:
            raise ConfigError("steps_range should be [n_min, n_max] with 2 <= n_min <= n_max, found \"{}\""
                              "".format(self.steps_range))
        if len(self.images_range) != 2 or self.images_range[0] < 1 or self.images_range[0] > self.images_range[1]:
            raise ConfigError("images_range should be [min, max] with 1 <= min <= max, found \"{}\""
                              "".format(self.images_range))
        if self.d_img < 1:
            raise ConfigError("d_img should be >= 1, found \"{}\"".format(self.d_img))
        if not 1 <= self.n_ingredients <= len(INGREDIENTS):
            raise ConfigError("n_ingredients should be in [1, {}], found \"{}\""
                              "".format(len(INGREDIENTS), self.n_ingredients))
        if not 0. < self.parent_geometric_p <= 1.:
            raise ConfigError("parent_geometric_p should be in (0, 1], found \"{}\"".format(self.parent_geometric_p))
        vis = np.array(self.visibility)
        if vis.shape != (3,) or np.any(vis < 0.) or abs(vis.sum() - 1.) > 1e-6:
            raise ConfigError("visibility should be 3 probabilities summing to 1, found \"{}\""
                              "".format(self.visibility))
        for nm in ["p_no_image", "p_distractor", "carry"]:
            if not 0. <= getattr(self, nm) <= 1.:
                raise ConfigError("\"{}\" should be in [0, 1], found \"{}\"".format(nm, getattr(self, nm)))
        if self.noise_sigma < 0.:
            raise ConfigError("noise_sigma should be >= 0, found \"{}\"".format(self.noise_sigma))
