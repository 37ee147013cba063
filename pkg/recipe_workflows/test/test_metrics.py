# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

import os
import json
import unittest
import tempfile
import warnings

import numpy as np

from recipe_workflows.Exceptions import ArgumentError
from recipe_workflows.core import WorkflowGraph
from recipe_workflows.metrics import MetricsReport, evaluate, f1, pair_accuracy, cohens_kappa, graph_agreement, \
    save_visibility, load_visibility, sidecar_path, recall_by_visibility


class TestF1(unittest.TestCase):
    def test_f1(self):
        assert f1(1., 1.) == 1.
        assert f1(0., 0.) == 0.
        assert abs(f1(0.5, 1.) - 2. / 3.) <= 1e-12


class TestEvaluate(unittest.TestCase):
    def test_identity(self):
        gold = [WorkflowGraph(3, [(0, 1), (1, 2)]), WorkflowGraph(2, [(0, 1)])]
        report = evaluate(gold, gold)
        for val in report.to_dict().values():
            assert val in (1., 2, 3)
        assert report.avg_f1 == 1.

    def test_single_recipe(self):
        gold = WorkflowGraph(4, [(0, 1), (1, 2), (1, 3)])
        pred = WorkflowGraph(4, [(0, 1), (0, 2), (1, 3)])
        report = evaluate([gold], [pred])
        for val in (report.edge_p, report.edge_r, report.edge_f1, report.recipe_p, report.recipe_r,
                    report.recipe_f1):
            assert abs(val - 2. / 3.) <= 1e-12

    def test_edge_vs_recipe_level(self):
        gold = [WorkflowGraph(3, [(0, 1), (1, 2)]), WorkflowGraph(3, [(0, 2)])]
        pred = [WorkflowGraph(3, [(0, 1), (1, 2)]), WorkflowGraph(3, [(1, 2)])]
        report = evaluate(gold, pred)
        assert abs(report.edge_p - 2. / 3.) <= 1e-12
        assert abs(report.edge_r - 2. / 3.) <= 1e-12
        assert abs(report.recipe_p - 0.5) <= 1e-12
        assert abs(report.recipe_r - 0.5) <= 1e-12
        assert report.n_gold_edges == 3
        assert report.n_pred_edges == 3

    def test_empty_sets(self):
        report = evaluate([WorkflowGraph(2)], [WorkflowGraph(2)])
        assert report.recipe_p == 1.
        assert report.recipe_r == 1.
        report = evaluate([WorkflowGraph(2, [(0, 1)])], [WorkflowGraph(2)])
        assert report.recipe_p == 0.
        assert report.edge_r == 0.

    def test_swap(self):
        gold = [WorkflowGraph(4, [(0, 1), (1, 2), (1, 3)])]
        pred = [WorkflowGraph(4, [(0, 1), (0, 3)])]
        r1 = evaluate(gold, pred)
        r2 = evaluate(pred, gold)
        assert abs(r1.edge_p - r2.edge_r) <= 1e-12
        assert abs(r1.recipe_r - r2.recipe_p) <= 1e-12
        assert abs(r1.avg_f1 - r2.avg_f1) <= 1e-12

    def test_reduce_gold(self):
        gold = [WorkflowGraph(3, [(0, 1), (1, 2), (0, 2)])]
        pred = [WorkflowGraph(3, [(0, 1), (1, 2)])]
        assert evaluate(gold, pred).edge_r < 1.
        assert evaluate(gold, pred, reduce_gold=True).edge_r == 1.

    def test_errors(self):
        with self.assertRaises(ArgumentError):
            evaluate([WorkflowGraph(2)], [])
        with self.assertRaises(ArgumentError):
            evaluate([], [])
        with self.assertRaises(ArgumentError):
            evaluate([WorkflowGraph(2)], [WorkflowGraph(3)])

    def test_pair_accuracy(self):
        gold = [WorkflowGraph(3, [(0, 1), (1, 2)])]
        pred = [WorkflowGraph(3, [(0, 1)])]
        assert abs(pair_accuracy(gold, pred) - 2. / 3.) <= 1e-12
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert pair_accuracy([WorkflowGraph(1)], [WorkflowGraph(1)]) == 1.


def random_graph(rng, n):
    p = rng.random()
    return WorkflowGraph(n, [(j, i) for i in range(n) for j in range(i) if rng.random() < p])


class TestRandomCases(unittest.TestCase):
    def test_properties(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            sizes = rng.integers(1, 7, size=int(rng.integers(1, 5)))
            gold = [random_graph(rng, int(n)) for n in sizes]
            pred = [random_graph(rng, int(n)) for n in sizes]
            report = evaluate(gold, pred)
            for nm in MetricsReport._float_attr:
                assert 0. <= getattr(report, nm) <= 1.
            assert abs(report.edge_f1 - f1(report.edge_p, report.edge_r)) <= 1e-12
            assert abs(report.avg_f1 - (report.edge_f1 + report.recipe_f1) / 2.) <= 1e-12
            swapped = evaluate(pred, gold)
            assert abs(swapped.edge_p - report.edge_r) <= 1e-12
            assert abs(swapped.recipe_r - report.recipe_p) <= 1e-12
            assert evaluate(gold, gold).avg_f1 == 1.


class TestMetricsReport(unittest.TestCase):
    def test_json(self):
        report = MetricsReport(0.5, 1., 0.25, 0.75, 4, 10, 12)
        assert abs(report.avg_p - 0.375) <= 1e-12
        tmp_dir = tempfile.mkdtemp()
        report.save_as_json(tmp_dir)
        with open(os.path.join(tmp_dir, "metrics.json"), "r", encoding="utf-8") as f:
            content = json.load(f)
        assert sorted(content) == sorted(MetricsReport._float_attr + MetricsReport._int_attr)
        assert MetricsReport.from_dict(content) == report
        assert report.to_json() == MetricsReport.from_dict(content).to_json()

    def test_table(self):
        report = MetricsReport(1., 1., 0.5, 0.5, 1, 1, 1)
        header = MetricsReport.table_header()
        row = report.table_row("concat")
        assert "Edge-level" in header and "Recipe-level" in header and "Average" in header
        assert row.startswith("concat")
        assert "100.00" in row
        assert " 50.00" in row


class TestAgreement(unittest.TestCase):
    def test_kappa(self):
        assert cohens_kappa([1, 0, 1], [1, 0, 1]) == 1.
        assert abs(cohens_kappa([1, 1, 0, 0], [1, 0, 0, 0]) - 0.5) <= 1e-12
        assert abs(cohens_kappa([1, 0], [0, 1]) + 1.) <= 1e-12

    def test_kappa_single_label(self):
        assert cohens_kappa([0, 0, 0], [0, 0, 0]) == 1.

    def test_kappa_errors(self):
        with self.assertRaises(ArgumentError):
            cohens_kappa([1, 0], [1])
        with self.assertRaises(ArgumentError):
            cohens_kappa([], [])
        with self.assertRaises(ArgumentError):
            cohens_kappa([2, 0], [1, 0])

    def test_graph_agreement(self):
        g = WorkflowGraph(3, [(0, 1), (1, 2)])
        assert graph_agreement(g, g) == 1.
        other = WorkflowGraph(3, [(0, 2)])
        assert graph_agreement(g, other) < 0.
        with self.assertRaises(ArgumentError):
            graph_agreement(g, WorkflowGraph(4))


class TestVisibility(unittest.TestCase):
    def test_save_load(self):
        vis = {"r1": {(0, 1): "text", (1, 2): "both"}, "r2": {(0, 1): "image"}}
        tmp_dir = tempfile.mkdtemp()
        path = sidecar_path(os.path.join(tmp_dir, "data.jsonl"))
        assert path.endswith("data.jsonl.visibility.json")
        save_visibility(vis, path)
        assert load_visibility(path) == vis

    def test_recall(self):
        gold = [WorkflowGraph(3, [(0, 1), (1, 2)]), WorkflowGraph(2, [(0, 1)])]
        pred = [WorkflowGraph(3, [(0, 1)]), WorkflowGraph(2, [(0, 1)])]
        vis = {"a": {(0, 1): "text", (1, 2): "image"}, "b": {(0, 1): "text"}}
        res = recall_by_visibility(["a", "b"], gold, pred, vis)
        assert res["text"] == {"n_gold_edges": 2, "n_found": 2, "recall": 1.}
        assert res["image"]["recall"] == 0.
        assert res["both"] == {"n_gold_edges": 0, "n_found": 0, "recall": 0.}

    def test_missing_labels(self):
        gold = [WorkflowGraph(2, [(0, 1)])]
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter("always")
            res = recall_by_visibility(["x"], gold, gold, {})
        assert len(w) == 1
        assert np.all([el["n_gold_edges"] == 0 for el in res.values()])


if __name__ == "__main__":
    unittest.main()
