# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import numpy as np
import networkx as nx

from recipe_workflows.Exceptions import ArgumentError
from recipe_workflows.core.WorkflowGraph import WorkflowGraph


def _check_node(g, node, nm):
    if not 0 <= int(node) < g.n:
        raise ArgumentError("{} node \"{}\" out of range for a graph with {} nodes".format(nm, node, g.n))


def has_path(g, src, dst):
    """
    Whether a directed path of length at least 1 goes from ``src`` to ``dst``.

    As every edge goes forward, ``has_path(g, k, k)`` is always ``False``.
    """
    _check_node(g, src, "source")
    _check_node(g, dst, "destination")
    if src == dst:
        return False
    return nx.has_path(g.to_networkx(), int(src), int(dst))


def transitive_closure(g):
    """
    Reachability matrix of the graph.

    Returns
    -------
    res: :class:`numpy.ndarray`
        Boolean ``(n, n)`` matrix with ``res[j, i]`` true iff there is a path of length >= 1 from ``j`` to ``i``.

    """
    res = np.zeros((g.n, g.n), dtype=bool)
    closure = nx.transitive_closure_dag(g.to_networkx())
    for j, i in closure.edges():
        res[j, i] = True
    return res


def transitive_reduce(g):
    """
    Remove every edge ``(j, i)`` implied by a longer path from ``j`` to ``i``.

    Paths are looked for in the original graph, before any removal, so the result does not depend on the order
    in which edges are considered: it is the unique transitive reduction of the DAG. The transitive closure is
    preserved and applying the function twice gives the same graph.
    """
    if len(g) == 0:
        return g
    reduced = nx.transitive_reduction(g.to_networkx())
    return WorkflowGraph(g.n, reduced.edges(), check=False)


def candidate_edges(p, theta):
    """all the edges ``(j, i)`` with ``P[i][j] > theta`` (strict inequality)"""
    theta = float(theta)
    if not 0. <= theta <= 1.:
        raise ArgumentError("theta should be in [0, 1], found \"{}\"".format(theta))
    js, is_ = np.nonzero(p.probs.T > theta)
    return WorkflowGraph(p.n, [(j, i) for j, i in zip(js, is_) if j < i], check=False)


def build_workflow(p, theta=0.5):
    """
    Turn edge probabilities into a workflow graph.

    First keep the candidate edges whose probability is strictly above ``theta``, then prune the redundant ones
    with :func:`transitive_reduce`.

    Parameters
    ----------
    p: :class:`recipe_workflows.graphkit.EdgeProbMatrix`
        The probabilities predicted for one recipe

    theta: ``float``
        Decision threshold in [0, 1]

    Returns
    -------
    res: :class:`recipe_workflows.core.WorkflowGraph`

    """
    return transitive_reduce(candidate_edges(p, theta))
