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

import numpy as np

from recipe_workflows.Exceptions import ParseError, ValidationError, DataError, ArgumentError
from recipe_workflows.core import CookingStep, Recipe, WorkflowGraph, Dataset, tokenize, build_vocab, \
    encode_tokens, load_dataset, save_dataset, read_recipes, recipe_from_json, PAD_ID, UNK_ID
from recipe_workflows.core.vocab import save_vocab, load_vocab


def make_recipe(recipe_id="r1", texts=("mix the flour and the sugar", "add the eggs", "bake the dough ."),
                edges=((0, 2), (1, 2)), images=None):
    steps = []
    for k, text in enumerate(texts):
        imgs = None if images is None else images[k]
        steps.append(CookingStep(k, text, imgs))
    gold = None if edges is None else WorkflowGraph(len(texts), edges)
    return Recipe(recipe_id, steps, gold)


class TestTokenize(unittest.TestCase):
    def test_tokenize(self):
        assert tokenize("Mix the flour, then bake.") == ["mix", "the", "flour", ",", "then", "bake", "."]

    def test_empty(self):
        assert tokenize("   ") == []


class TestCookingStep(unittest.TestCase):
    def test_text_is_tokenized(self):
        step = CookingStep(0, "Add Salt.")
        assert step.text == ("add", "salt", ".")
        assert step.nb_images == 0
        assert step.d_img is None

    def test_images(self):
        step = CookingStep(1, "stir", [[1., 0., 0.], [0., 1., 0.]])
        assert step.images.shape == (2, 3)
        assert step.d_img == 3
        assert np.allclose(step.mean_image(3), [0.5, 0.5, 0.])
        assert np.allclose(CookingStep(1, "stir").mean_image(3), np.zeros(3))

    def test_images_read_only(self):
        step = CookingStep(0, "stir", [[1., 2.]])
        with self.assertRaises(ValueError):
            step.images[0, 0] = 3.

    def test_different_dims(self):
        with self.assertRaises(ValidationError):
            CookingStep(0, "stir", [[1., 2.], [1., 2., 3.]])

    def test_empty_text(self):
        with self.assertRaises(ValidationError):
            CookingStep(0, "").validate()

    def test_not_finite(self):
        with self.assertRaises(ValidationError):
            CookingStep(0, "stir", [[np.nan, 1.]]).validate()


class TestWorkflowGraph(unittest.TestCase):
    def test_basic(self):
        g = WorkflowGraph(3, [(0, 1), (1, 2)])
        assert (0, 1) in g
        assert (0, 2) not in g
        assert len(g) == 2
        assert g.parents(2) == [1]
        assert g.children(0) == [1]
        assert g.to_list() == [[0, 1], [1, 2]]
        adj = g.adjacency()
        assert adj[0, 1] and adj[1, 2] and not adj[1, 0]

    def test_backward_edge(self):
        with self.assertRaises(ValidationError):
            WorkflowGraph(3, [(2, 1)])
        with self.assertRaises(ValidationError):
            WorkflowGraph(3, [(1, 1)])

    def test_out_of_range(self):
        with self.assertRaises(ValidationError):
            WorkflowGraph(3, [(0, 3)])

    def test_duplicate(self):
        with self.assertRaises(ValidationError):
            WorkflowGraph(3, [(0, 1), (0, 1)])

    def test_non_integer_index(self):
        for edges in ([(0.9, 1.7)], [(True, 2)], [("0", 1)]):
            with self.assertRaises(ValidationError):
                WorkflowGraph(3, edges)
        assert (0, 1) in WorkflowGraph(3, [(np.int64(0), np.int32(1))])

    def test_sorted_edges(self):
        g = WorkflowGraph(4, [(1, 3), (0, 3), (0, 1)])
        assert g.sorted_edges() == [(0, 1), (0, 3), (1, 3)]

    def test_networkx(self):
        g = WorkflowGraph(4, [(0, 2), (1, 2)])
        g_nx = g.to_networkx()
        assert g_nx.number_of_nodes() == 4
        assert WorkflowGraph.from_networkx(g_nx) == g

    def test_eq_hash(self):
        assert WorkflowGraph(3, [(0, 1)]) == WorkflowGraph(3, [(0, 1)])
        assert WorkflowGraph(3, [(0, 1)]) != WorkflowGraph(4, [(0, 1)])
        assert len({WorkflowGraph(3, [(0, 1)]), WorkflowGraph(3, [(0, 1)])}) == 1


class TestRecipe(unittest.TestCase):
    def test_properties(self):
        recipe = make_recipe()
        assert recipe.n == 3
        assert recipe.has_gold
        assert recipe.d_img is None
        recipe.validate()

    def test_gold_size_mismatch(self):
        steps = [CookingStep(0, "a"), CookingStep(1, "b")]
        with self.assertRaises(ValidationError):
            Recipe("r", steps, WorkflowGraph(3, [(0, 2)])).validate()

    def test_bad_index(self):
        steps = [CookingStep(0, "a"), CookingStep(2, "b")]
        with self.assertRaises(ValidationError):
            Recipe("r", steps).validate()

    def test_image_dim_mismatch(self):
        steps = [CookingStep(0, "a", [[1., 0.]]), CookingStep(1, "b", [[1., 0., 0.]])]
        with self.assertRaises(ValidationError):
            Recipe("r", steps).validate()

    def test_check_trainable(self):
        with self.assertRaises(DataError):
            make_recipe(edges=None).check_trainable()
        with self.assertRaises(DataError):
            make_recipe(texts=("only one step",), edges=()).check_trainable()

    def test_replace(self):
        recipe = make_recipe()
        unlabeled = recipe.replace(drop_gold=True)
        assert not unlabeled.has_gold
        assert unlabeled.steps == recipe.steps
        assert recipe.has_gold


class TestVocab(unittest.TestCase):
    def test_reserved_ids(self):
        vocab = build_vocab([make_recipe()])
        assert vocab["<pad>"] == PAD_ID
        assert vocab["<unk>"] == UNK_ID
        # "the" is the most frequent token
        assert vocab["the"] == 2

    def test_order_independent(self):
        r1 = make_recipe("r1")
        r2 = make_recipe("r2", texts=("boil water", "add pasta"), edges=[(0, 1)])
        assert list(build_vocab([r1, r2]).items()) == list(build_vocab([r2, r1]).items())

    def test_min_count(self):
        vocab = build_vocab([make_recipe()], min_count=2)
        assert "the" in vocab
        assert "eggs" not in vocab
        with self.assertRaises(ArgumentError):
            build_vocab([make_recipe()], min_count=0)

    def test_encode(self):
        vocab = build_vocab([make_recipe()])
        ids = encode_tokens(["the", "unseen"], vocab)
        assert ids.tolist() == [vocab["the"], UNK_ID]

    def test_save_load(self):
        vocab = build_vocab([make_recipe()])
        tmp_dir = tempfile.mkdtemp()
        save_vocab(vocab, tmp_dir)
        assert list(load_vocab(tmp_dir).items()) == list(vocab.items())


class TestDataset(unittest.TestCase):
    def test_d_img(self):
        images = [[[1., 0.]], None, [[0., 1.], [1., 1.]]]
        ds = Dataset([make_recipe(images=images)])
        assert ds.d_img == 2
        assert Dataset([make_recipe()]).d_img == 0

    def test_duplicate_ids(self):
        with self.assertRaises(ValidationError):
            Dataset([make_recipe("r"), make_recipe("r")])

    def test_subset(self):
        ds = Dataset([make_recipe("r{}".format(k)) for k in range(4)])
        sub = ds.subset([3, 1])
        assert [el.id for el in sub] == ["r3", "r1"]
        assert sub.vocab is ds.vocab
        assert ds.get("r2").id == "r2"
        with self.assertRaises(KeyError):
            ds.get("missing")


class TestDatasetIO(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()
        self.path = os.path.join(self.tmp_dir, "data.jsonl")

    def _write(self, lines):
        with open(self.path, "w", encoding="utf-8") as f:
            for el in lines:
                f.write(el + "\n")

    def test_save_load(self):
        images = [[[0.1, 0.2]], None, [[0.3, 0.4], [0.5, 0.6]]]
        ds = Dataset([make_recipe("a", images=images), make_recipe("b", edges=None, images=images)])
        save_dataset(ds, self.path)
        ds2 = load_dataset(self.path)
        assert ds2 == ds
        assert not ds2.get("b").has_gold

    def test_save_twice_same_bytes(self):
        ds = Dataset([make_recipe()])
        save_dataset(ds, self.path)
        with open(self.path, "rb") as f:
            content = f.read()
        save_dataset(load_dataset(self.path), self.path)
        with open(self.path, "rb") as f:
            assert f.read() == content

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            load_dataset(os.path.join(self.tmp_dir, "nothing.jsonl"))

    def test_malformed_line(self):
        good = json.dumps({"id": "r", "steps": [{"text": "a"}, {"text": "b"}], "edges": [[0, 1]]})
        self._write([good, "", "{not json"])
        with self.assertRaises(ParseError) as ctx:
            read_recipes(self.path)
        assert ctx.exception.line == 3

    def test_missing_key(self):
        self._write([json.dumps({"id": "r"})])
        with self.assertRaises(ParseError):
            read_recipes(self.path)

    def test_backward_edge(self):
        self._write([json.dumps({"id": "r", "steps": [{"text": "a"}, {"text": "b"}], "edges": [[1, 0]]})])
        with self.assertRaises(ValidationError) as ctx:
            read_recipes(self.path)
        assert ctx.exception.recipe_id == "r"

    def test_non_integer_edge(self):
        steps = [{"text": "a"}, {"text": "b"}, {"text": "c"}]
        for edges in ([[0.9, 1.7]], [[True, 2]], [[0, 1], [1.0, 2]]):
            self._write([json.dumps({"id": "r", "steps": steps}),
                         json.dumps({"id": "s", "steps": steps, "edges": edges})])
            with self.assertRaises(ParseError) as ctx:
                load_dataset(self.path)
            assert ctx.exception.line == 2

    def test_recipe_from_json(self):
        recipe = recipe_from_json({"id": 3, "steps": [{"text": "Boil water", "image_features": [[1, 2]]},
                                                      {"text": "add pasta"}]})
        assert recipe.id == "3"
        assert recipe.gold_workflow is None
        assert recipe.d_img == 2


if __name__ == "__main__":
    unittest.main()
