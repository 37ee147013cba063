# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np

from recipe_workflows.Exceptions import ValidationError
from recipe_workflows.core.tokenize import tokenize


class CookingStep(object):
    """
    One step of a recipe: its text, already tokenized, and the feature vectors of its images.

    Images are never decoded here, each image is represented by a precomputed feature vector of dimension
    ``d_img``. A step may have no image at all.

    Attributes
    ----------
    index: ``int``
        0-based position of the step in its recipe

    text: ``tuple``
        The lower cased tokens of the step description (at least one)

    images: :class:`numpy.ndarray`
        Read-only array of shape ``(nb_images, d_img)``. When the step has no image its shape is ``(0, d_img)``
        (or ``(0, 0)`` if the dimension is unknown).

    """
    def __init__(self, index, text, images=None, d_img=None):
        self.index = int(index)
        if isinstance(text, str):
            text = tokenize(text)
        self.text = tuple(str(el) for el in text)

        if images is None or len(images) == 0:
            images = np.zeros((0, 0 if d_img is None else int(d_img)), dtype=np.float64)
        elif isinstance(images, np.ndarray):
            images = np.array(images, dtype=np.float64)
        else:
            vects = [np.asarray(el, dtype=np.float64).reshape(-1) for el in images]
            if len({el.shape[0] for el in vects}) != 1:
                raise ValidationError("step {}: image feature vectors have different dimensions".format(self.index))
            images = np.stack(vects)
        if images.ndim == 1:
            images = images.reshape(1, -1)
        images.setflags(write=False)
        self.images = images

    @property
    def nb_images(self):
        return self.images.shape[0]

    @property
    def d_img(self):
        """dimension of the image features, ``None`` if the step has no image"""
        if self.nb_images == 0:
            return None
        return self.images.shape[1]

    def mean_image(self, d_img):
        """the average of the image vectors, or the zero vector of size ``d_img`` for a step without image"""
        if self.nb_images == 0:
            return np.zeros(d_img, dtype=np.float64)
        return self.images.mean(axis=0)

    def validate(self, recipe_id=None):
        if len(self.text) == 0:
            raise ValidationError("step {} has an empty text".format(self.index), recipe_id)
        if self.images.ndim != 2:
            raise ValidationError("step {}: image features should be a list of vectors".format(self.index),
                                  recipe_id)
        if self.nb_images and not np.all(np.isfinite(self.images)):
            raise ValidationError("step {}: image features should be finite".format(self.index), recipe_id)

    def replace(self, text=None, images=None):
        """return a copy of this step with its text or its images replaced"""
        return CookingStep(self.index,
                           self.text if text is None else text,
                           self.images if images is None else images,
                           d_img=self.images.shape[1])

    def __eq__(self, other):
        if not isinstance(other, CookingStep):
            return NotImplemented
        if self.index != other.index or self.text != other.text:
            return False
        if self.nb_images != other.nb_images:
            return False
        if self.nb_images == 0:
            return True
        return self.images.shape == other.images.shape and np.array_equal(self.images, other.images)

    def __repr__(self):
        return "CookingStep(index={}, text=\"{}\", nb_images={})".format(self.index, " ".join(self.text),
                                                                       self.nb_images)
