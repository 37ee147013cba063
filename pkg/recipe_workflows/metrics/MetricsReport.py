# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json


def f1(p, r):
    """harmonic mean of a precision and a recall, 0 when both are 0"""
    p = float(p)
    r = float(r)
    if p + r == 0.:
        return 0.
    return 2. * p * r / (p + r)


class MetricsReport(object):
    """
    Precision, recall and F1 of predicted workflows, computed at the edge level (pooling every edge of the data
    set) and at the recipe level (average over recipes), plus their average.

    Attributes
    ----------
    edge_p, edge_r, edge_f1: ``float``
        Edge level precision, recall and F1

    recipe_p, recipe_r, recipe_f1: ``float``
        Recipe level precision, recall and F1

    avg_p, avg_r, avg_f1: ``float``
        Arithmetic mean of the edge level and the recipe level values

    n_recipes: ``int``
        Number of recipes evaluated

    n_gold_edges, n_pred_edges: ``int``
        Total number of gold and predicted edges

    """
    _float_attr = ["edge_p", "edge_r", "edge_f1", "recipe_p", "recipe_r", "recipe_f1", "avg_p", "avg_r", "avg_f1"]
    _int_attr = ["n_recipes", "n_gold_edges", "n_pred_edges"]

    def __init__(self, edge_p, edge_r, recipe_p, recipe_r, n_recipes, n_gold_edges, n_pred_edges):
        self.edge_p = float(edge_p)
        self.edge_r = float(edge_r)
        self.edge_f1 = f1(self.edge_p, self.edge_r)
        self.recipe_p = float(recipe_p)
        self.recipe_r = float(recipe_r)
        self.recipe_f1 = f1(self.recipe_p, self.recipe_r)
        self.avg_p = (self.edge_p + self.recipe_p) / 2.
        self.avg_r = (self.edge_r + self.recipe_r) / 2.
        self.avg_f1 = (self.edge_f1 + self.recipe_f1) / 2.
        self.n_recipes = int(n_recipes)
        self.n_gold_edges = int(n_gold_edges)
        self.n_pred_edges = int(n_pred_edges)

    def to_dict(self):
        res = {}
        for attr_nm in self._float_attr:
            res[attr_nm] = float(getattr(self, attr_nm))
        for attr_nm in self._int_attr:
            res[attr_nm] = int(getattr(self, attr_nm))
        return res

    @classmethod
    def from_dict(cls, tmp):
        return cls(edge_p=tmp["edge_p"], edge_r=tmp["edge_r"],
                   recipe_p=tmp["recipe_p"], recipe_r=tmp["recipe_r"],
                   n_recipes=tmp["n_recipes"], n_gold_edges=tmp["n_gold_edges"], n_pred_edges=tmp["n_pred_edges"])

    def to_json(self):
        """flat json object, keys sorted so that equal reports always give the same string"""
        return json.dumps(self.to_dict(), indent=4, sort_keys=True)

    def save_as_json(self, path, name="metrics.json"):
        if not os.path.isdir(path):
            raise NotADirectoryError("\"{}\" should be a directory".format(path))
        with open(os.path.join(path, name), "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")

    @staticmethod
    def table_header(name_width=18):
        """header of the table printed by :func:`MetricsReport.table_row`"""
        cols = ["P", "R", "F1"]
        line1 = "{:<{w}} | {:^20} | {:^20} | {:^20}".format("system", "Edge-level", "Recipe-level", "Average",
                                                          w=name_width)
        sub = " ".join("{:>6}".format(el) for el in cols)
        line2 = "{:<{w}} | {} | {} | {}".format("", sub, sub, sub, w=name_width)
        return line1 + "\n" + line2

    def table_row(self, name="", name_width=18):
        """the 9 values as percentages, in the order edge / recipe / average and P / R / F1"""
        def _fmt(p, r, f):
            return " ".join("{:6.2f}".format(100. * el) for el in (p, r, f))
        return "{:<{w}} | {} | {} | {}".format(name,
                                                _fmt(self.edge_p, self.edge_r, self.edge_f1),
                                                _fmt(self.recipe_p, self.recipe_r, self.recipe_f1),
                                                _fmt(self.avg_p, self.avg_r, self.avg_f1),
                                                w=name_width)

    def __eq__(self, other):
        if not isinstance(other, MetricsReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return "MetricsReport({})".format(", ".join("{}={:.4f}".format(k, v) if isinstance(v, float)
                                                    else "{}={}".format(k, v)
                                                    for k, v in self.to_dict().items()))
