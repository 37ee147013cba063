# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

import unittest

import numpy as np

from recipe_workflows.Exceptions import ArgumentError
from recipe_workflows.core import CookingStep, Recipe, WorkflowGraph
from recipe_workflows.graphkit import EdgeProbMatrix, has_path, transitive_closure, transitive_reduce, \
    candidate_edges, build_workflow, export_dot


class TestEdgeProbMatrix(unittest.TestCase):
    def test_from_rows(self):
        p = EdgeProbMatrix.from_rows([[], [0.9], [0.7, 0.8]])
        assert p.n == 3
        assert p[2, 0] == 0.7
        assert np.allclose(p.row(2), [0.7, 0.8])
        assert list(p.pairs()) == [(0, 1, 0.9), (0, 2, 0.7), (1, 2, 0.8)]

    def test_upper_part_ignored(self):
        p = EdgeProbMatrix(2, [[0.3, 0.9], [0.4, 0.2]])
        assert p.probs[0, 1] == 0.
        assert p.probs[1, 1] == 0.
        assert p[1, 0] == 0.4

    def test_invalid(self):
        with self.assertRaises(ArgumentError):
            EdgeProbMatrix(2, [[0., 0.], [1.5, 0.]])
        with self.assertRaises(ArgumentError):
            EdgeProbMatrix.from_rows([[], [0.5, 0.5]])
        with self.assertRaises(ArgumentError):
            EdgeProbMatrix.constant(3, 0.5)[0, 1]


class TestGraphAlgos(unittest.TestCase):
    def test_has_path(self):
        g = WorkflowGraph(4, [(0, 1), (1, 3)])
        assert has_path(g, 0, 3)
        assert not has_path(g, 0, 2)
        assert not has_path(g, 3, 0)
        assert not has_path(g, 1, 1)
        with self.assertRaises(ArgumentError):
            has_path(g, 0, 4)

    def test_closure(self):
        g = WorkflowGraph(3, [(0, 1), (1, 2)])
        closure = transitive_closure(g)
        assert closure[0, 2]
        assert not closure[2, 0]
        assert closure.sum() == 3

    def test_reduce(self):
        g = WorkflowGraph(3, [(0, 1), (1, 2), (0, 2)])
        reduced = transitive_reduce(g)
        assert reduced.edges == {(0, 1), (1, 2)}
        assert transitive_reduce(reduced) == reduced
        assert np.array_equal(transitive_closure(reduced), transitive_closure(g))

    def test_reduce_long_path(self):
        g = WorkflowGraph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (3, 4), (0, 4)])
        assert transitive_reduce(g).edges == {(0, 1), (1, 2), (2, 3), (3, 4)}

    def test_reduce_empty(self):
        g = WorkflowGraph(3)
        assert transitive_reduce(g) == g

    def test_candidate_edges_strict(self):
        p = EdgeProbMatrix.from_rows([[], [0.5], [0.6, 0.4]])
        assert candidate_edges(p, 0.5).edges == {(0, 2)}
        assert len(candidate_edges(p, 1.)) == 0
        with self.assertRaises(ArgumentError):
            candidate_edges(p, 1.1)

    def test_build_workflow(self):
        p = EdgeProbMatrix.from_rows([[], [0.9], [0.7, 0.8]])
        g = build_workflow(p, 0.5)
        assert g.edges == {(0, 1), (1, 2)}

    def test_build_workflow_parallel(self):
        p = EdgeProbMatrix.from_rows([[], [0.1], [0.9, 0.9]])
        assert build_workflow(p, 0.5).edges == {(0, 2), (1, 2)}

    def test_threshold_zero(self):
        p = EdgeProbMatrix.constant(4, 0.3)
        g = build_workflow(p, 0.)
        assert g.edges == {(0, 1), (1, 2), (2, 3)}

    def test_single_step(self):
        assert len(build_workflow(EdgeProbMatrix(1), 0.5)) == 0


def random_dag(rng, n, p):
    return WorkflowGraph(n, [(j, i) for i in range(n) for j in range(i) if rng.random() < p])


class TestGraphProperties(unittest.TestCase):
    def test_reduce(self):
        rng = np.random.default_rng(0)
        for _ in range(500):
            g = random_dag(rng, int(rng.integers(1, 9)), rng.random())
            reduced = transitive_reduce(g)
            closure = transitive_closure(g)
            assert reduced.edges <= g.edges
            assert np.array_equal(transitive_closure(reduced), closure)
            assert transitive_reduce(reduced) == reduced
            for edge in reduced.edges:
                smaller = WorkflowGraph(g.n, reduced.edges - {edge})
                assert not np.array_equal(transitive_closure(smaller), closure)

    def test_build_workflow(self):
        rng = np.random.default_rng(1)
        for _ in range(500):
            n = int(rng.integers(1, 9))
            p = EdgeProbMatrix(n, rng.random((n, n)))
            theta = float(rng.random())
            res = build_workflow(p, theta)
            candidates = candidate_edges(p, theta)
            assert all(p[i, j] > theta for j, i in res.edges)
            assert res.edges <= candidates.edges
            assert np.array_equal(transitive_closure(res), transitive_closure(candidates))
            assert transitive_reduce(res) == res


class TestExportDot(unittest.TestCase):
    def test_export(self):
        recipe = Recipe("r\"1", [CookingStep(0, "boil the water"), CookingStep(1, "add pasta")])
        res = export_dot(recipe, WorkflowGraph(2, [(0, 1)]))
        assert res.startswith("digraph \"r\\\"1\" {")
        assert "\"1\" -> \"2\";" in res
        assert "label=\"1: boil the water\"" in res
        assert res.endswith("}\n")

    def test_long_label(self):
        recipe = Recipe("r", [CookingStep(0, "a b c d e f g h"), CookingStep(1, "z")])
        res = export_dot(recipe, WorkflowGraph(2))
        assert "1: a b c d e f ..." in res
        assert "->" not in res

    def test_mismatch(self):
        recipe = Recipe("r", [CookingStep(0, "a"), CookingStep(1, "b")])
        with self.assertRaises(ArgumentError):
            export_dot(recipe, WorkflowGraph(3))


if __name__ == "__main__":
    unittest.main()
