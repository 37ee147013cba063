# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np
import networkx as nx

from recipe_workflows.Exceptions import ValidationError


class WorkflowGraph(object):
    """
    The causal workflow of a recipe: a set of directed edges ``(j, i)`` meaning that step ``j`` must be finished
    before step ``i`` can start.

    Every edge satisfies ``0 <= j < i < n`` so the graph is acyclic by construction. Instances are immutable.

    Attributes
    ----------
    n: ``int``
        Number of nodes (cooking steps)

    edges: ``frozenset``
        The set of edges, each one represented as a tuple ``(j, i)``

    Examples
    --------

    .. code-block:: python

        from recipe_workflows.core import WorkflowGraph

        g = WorkflowGraph(3, [(0, 1), (1, 2)])
        assert (0, 1) in g
        assert g.parents(2) == [1]

    """
    def __init__(self, n, edges=(), check=True):
        self.n = int(n)
        edges = [(self._index(j), self._index(i)) for j, i in edges]
        if check:
            self._check(edges)
        self.edges = frozenset(edges)

    @staticmethod
    def _index(x):
        if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
            raise ValidationError("edge indices should be integers, found \"{}\"".format(x))
        return int(x)

    def _check(self, edges, recipe_id=None):
        if self.n < 0:
            raise ValidationError("number of nodes should be >= 0, found \"{}\"".format(self.n), recipe_id)
        for j, i in edges:
            if not j < i:
                raise ValidationError("edge must satisfy j < i, found ({}, {})".format(j, i), recipe_id)
            if j < 0 or i >= self.n:
                raise ValidationError("edge ({}, {}) out of range for {} steps".format(j, i, self.n), recipe_id)
        if len(set(edges)) != len(edges):
            raise ValidationError("duplicate edges in workflow", recipe_id)

    def validate(self, recipe_id=None):
        """run all the structural checks again, raise a :class:`ValidationError` on failure"""
        self._check(list(self.edges), recipe_id)

    def sorted_edges(self):
        """edges ordered by child then parent index"""
        return sorted(self.edges, key=lambda el: (el[1], el[0]))

    def parents(self, i):
        return sorted(j for j, i_ in self.edges if i_ == i)

    def children(self, j):
        return sorted(i for j_, i in self.edges if j_ == j)

    def adjacency(self):
        """boolean matrix ``A`` with ``A[j, i]`` true iff ``(j, i)`` is an edge"""
        res = np.zeros((self.n, self.n), dtype=bool)
        for j, i in self.edges:
            res[j, i] = True
        return res

    def to_networkx(self):
        res = nx.DiGraph()
        res.add_nodes_from(range(self.n))
        res.add_edges_from(self.edges)
        return res

    @classmethod
    def from_networkx(cls, graph, n=None):
        if n is None:
            n = graph.number_of_nodes()
        return cls(n, graph.edges())

    def to_list(self):
        """json friendly representation: the sorted list of ``[j, i]``"""
        return [[j, i] for j, i in self.sorted_edges()]

    def __contains__(self, edge):
        return tuple(edge) in self.edges

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges())

    def __eq__(self, other):
        if not isinstance(other, WorkflowGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "WorkflowGraph(n={}, edges={})".format(self.n, self.to_list())
