# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np

from recipe_workflows.Exceptions import ArgumentError


class EdgeProbMatrix(object):
    """
    Independent probabilities ``P[i][j]`` that step ``j`` is a prerequisite of step ``i``, for ``0 <= j < i < n``.

    Only the strictly lower triangular part is meaningful, the rest of :attr:`EdgeProbMatrix.probs` is kept at 0.

    Attributes
    ----------
    n: ``int``
        Number of steps

    probs: :class:`numpy.ndarray`
        Read-only ``(n, n)`` array, ``probs[i, j]`` is the probability of the edge ``(j, i)``

    """
    def __init__(self, n, probs=None):
        self.n = int(n)
        if probs is None:
            probs = np.zeros((self.n, self.n), dtype=np.float64)
        probs = np.array(probs, dtype=np.float64)
        if probs.shape != (self.n, self.n):
            raise ArgumentError("probability matrix should have shape ({0}, {0}), found {1}"
                                "".format(self.n, probs.shape))
        mask = np.tril(np.ones((self.n, self.n), dtype=bool), k=-1)
        probs = np.where(mask, probs, 0.)
        if np.any(~np.isfinite(probs)) or np.any(probs < 0.) or np.any(probs > 1.):
            raise ArgumentError("edge probabilities should be in [0, 1]")
        probs.setflags(write=False)
        self.probs = probs

    @classmethod
    def from_rows(cls, rows):
        """
        Build the matrix from the per step vectors: ``rows[i]`` has length ``i`` and holds ``P[i][0..i-1]``
        (``rows[0]`` is empty).
        """
        n = len(rows)
        probs = np.zeros((n, n), dtype=np.float64)
        for i, row in enumerate(rows):
            row = np.asarray(row, dtype=np.float64).reshape(-1)
            if row.shape[0] != i:
                raise ArgumentError("row {} should have {} values, found {}".format(i, i, row.shape[0]))
            probs[i, :i] = row
        return cls(n, probs)

    @classmethod
    def constant(cls, n, value):
        return cls(n, np.full((n, n), float(value)))

    def row(self, i):
        """probabilities of all the candidate prerequisites of step ``i`` (length ``i``)"""
        return self.probs[i, :i].copy()

    def __getitem__(self, item):
        i, j = item
        if not 0 <= j < i < self.n:
            raise ArgumentError("P[{}][{}] is not defined for {} steps (need j < i)".format(i, j, self.n))
        return float(self.probs[i, j])

    def pairs(self):
        """iterate over ``(j, i, P[i][j])`` for all candidate edges"""
        for i in range(self.n):
            for j in range(i):
                yield j, i, float(self.probs[i, j])

    def __eq__(self, other):
        if not isinstance(other, EdgeProbMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.probs, other.probs)

    def __repr__(self):
        return "EdgeProbMatrix(n={})".format(self.n)
