# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

import os
import unittest
import tempfile

import numpy as np

from recipe_workflows.Exceptions import ArgumentError, ShapeError, TrainingError, CheckpointError, ConfigError
from recipe_workflows.core import CookingStep, Recipe, WorkflowGraph
from recipe_workflows.tensor import check_gradients, functional as F
from recipe_workflows.utils import TrainingParam, LinearDetector, train_linear_detector, baseline_predict, \
    sample_balanced_pairs, text_pair_features, image_pair_similarities, image_pair_features, \
    multimodal_pair_features
from recipe_workflows.utils.make_builder import make_builder, load_builder
from recipe_workflows.utils.stopwords import STOPWORDS, content_tokens
from recipe_workflows.synthgen import GenConfig, generate
from recipe_workflows.HandCrafted import HandCrafted, HandCraftedMM
from recipe_workflows.HandCrafted import train as train_handcrafted, evaluate as evaluate_handcrafted
from recipe_workflows.ImageSimilarity import ImageSimilarity
from recipe_workflows.ImageSimilarity import train as train_imgsim, evaluate as evaluate_imgsim
from recipe_workflows.FeedForwardPair import FeedForwardPair, FeedForwardPair_NNParam, feedforward_pair_detector
from recipe_workflows.FeedForwardPair import train as train_ffpair, evaluate as evaluate_ffpair
from recipe_workflows.PointerWorkflow import PointerWorkflow, ModelConfig


def text_recipe(*texts):
    return Recipe("txt", [CookingStep(k, el) for k, el in enumerate(texts)])


def image_recipe(*images):
    return Recipe("img", [CookingStep(k, "step {}".format(k), el) for k, el in enumerate(images)])


def small_dataset(n_recipes=20, seed=1):
    dataset, _, _ = generate(GenConfig(n_recipes=n_recipes, steps_range=[3, 5], d_img=4, seed=seed))
    return dataset


class TestStopwords(unittest.TestCase):
    def test_size(self):
        assert len([el for el in STOPWORDS if el.isalpha()]) == 150

    def test_cues_kept(self):
        for word in ["another", "separate", "meanwhile", "mixture", "it", "them", "add", "mix", "stir"]:
            assert word not in STOPWORDS, "error for {}".format(word)
        assert content_tokens(["mix", "the", "flour", "without", "sugar", "."]) == ["mix", "flour", "sugar"]


class TestTextFeatures(unittest.TestCase):
    def test_identical(self):
        feats = text_pair_features(text_recipe("mix flour sugar", "mix flour sugar", "bake"), 0, 1)
        assert feats.shape == (6,)
        assert feats[0] == 3.
        assert abs(feats[1] - 1.) <= 1e-12
        assert feats[5] == 1.

    def test_disjoint(self):
        feats = text_pair_features(text_recipe("boil water", "chop onion"), 0, 1)
        assert feats[0] == 0.
        assert feats[1] == 0.
        assert feats[5] == 0.

    def test_shared_content_tokens(self):
        feats = text_pair_features(text_recipe("mix flour sugar", "add sugar to mixture"), 0, 1)
        assert feats[0] == 1.

    def test_distance_and_cues(self):
        recipe = text_recipe("melt the butter", "whisk eggs", "meanwhile , chop the onion", "pour the mixture")
        assert abs(text_pair_features(recipe, 0, 2)[2] - 0.5) <= 1e-12
        assert text_pair_features(recipe, 0, 2)[3] == 1.
        assert text_pair_features(recipe, 0, 3)[3] == 0.
        assert text_pair_features(recipe, 0, 3)[4] == 1.
        assert text_pair_features(recipe, 0, 1)[4] == 0.

    def test_bad_pair(self):
        recipe = text_recipe("a", "b")
        with self.assertRaises(ArgumentError):
            text_pair_features(recipe, 1, 0)
        with self.assertRaises(ArgumentError):
            text_pair_features(recipe, 0, 2)


class TestImageFeatures(unittest.TestCase):
    def test_example(self):
        recipe = image_recipe([[1., 0.], [0., 1.]], [[1., 0.]])
        res = image_pair_similarities(recipe, 0, 1)
        assert np.allclose(res, (0.5, 1., 0.))

    def test_identical_and_orthogonal(self):
        recipe = image_recipe([[1., 2.]], [[1., 2.]], [[-2., 1.]])
        assert np.allclose(image_pair_similarities(recipe, 0, 1), (1., 1., 1.))
        assert np.allclose(image_pair_similarities(recipe, 0, 2), (0., 0., 0.))

    def test_symmetric(self):
        recipe = image_recipe([[1., 0.], [0.3, 1.]], [[1., 1.]])
        assert np.allclose(image_pair_similarities(recipe, 0, 1), image_pair_similarities(recipe, 1, 0))

    def test_missing_images(self):
        recipe = image_recipe([[1., 0.]], None)
        assert image_pair_similarities(recipe, 0, 1) == (0., 0., 0.)
        assert np.array_equal(image_pair_features(recipe, 0, 1), [0., 0., 0., 1.])
        full = image_recipe([[1., 0.]], [[1., 0.]])
        assert image_pair_features(full, 0, 1)[3] == 0.

    def test_multimodal(self):
        recipe = Recipe("mm", [CookingStep(0, "boil water", [[1., 0.]]), CookingStep(1, "add pasta", [[1., 0.]])])
        feats = multimodal_pair_features(recipe, 0, 1)
        assert feats.shape == (9,)
        assert np.allclose(feats[6:], 1.)


class TestLinearDetector(unittest.TestCase):
    def test_separable(self):
        rng = np.random.default_rng(0)
        labels = (rng.random(200) > 0.5).astype(np.float64)
        features = np.stack([2. * labels - 1. + 0.1 * rng.normal(size=200), rng.normal(size=200)], axis=1)
        detector = train_linear_detector(features, labels)
        assert np.array_equal(detector.predict_proba(features) > 0.5, labels == 1.)
        assert abs(detector.weights[0]) > abs(detector.weights[1])

    def test_random_labels(self):
        rng = np.random.default_rng(1)
        features = rng.normal(size=(2000, 3))
        labels = (rng.random(2000) > 0.5).astype(np.float64)
        detector = train_linear_detector(features[:1000], labels[:1000])
        acc = np.mean((detector.predict_proba(features[1000:]) > 0.5) == (labels[1000:] == 1.))
        assert 0.42 <= acc <= 0.58

    def test_single_class(self):
        with self.assertRaises(TrainingError):
            train_linear_detector(np.ones((4, 2)), np.ones(4))
        with self.assertRaises(ShapeError):
            train_linear_detector(np.ones((4, 2)), np.array([0, 1, 0]))

    def test_zeros(self):
        detector = LinearDetector.zeros(3)
        assert np.allclose(detector.predict_proba(np.ones((2, 3))), 0.5)
        with self.assertRaises(ShapeError):
            detector.predict_proba(np.ones(2))

    def test_save_load(self):
        detector = LinearDetector([1., -2., 0.5], 0.3)
        tmp_dir = tempfile.mkdtemp()
        detector.save(tmp_dir)
        assert LinearDetector.load(tmp_dir) == detector


class TestBaselinePredict(unittest.TestCase):
    def test_constant_detectors(self):
        recipe = text_recipe("a", "b", "c", "d")
        assert len(baseline_predict(recipe, lambda r, j, i: 0.)) == 0
        assert baseline_predict(recipe, lambda r, j, i: 1.).edges == {(0, 1), (1, 2), (2, 3)}

    def test_two_steps(self):
        recipe = text_recipe("a", "b")
        assert baseline_predict(recipe, lambda r, j, i: 0.6, 0.5).edges == {(0, 1)}

    def test_balanced_pairs(self):
        dataset = small_dataset()
        sample = sample_balanced_pairs(dataset.recipes, np.random.default_rng(0))
        labels = [el[3] for el in sample]
        assert sum(labels) * 2 == len(labels)
        assert sample == sample_balanced_pairs(dataset.recipes, np.random.default_rng(0))
        for k, j, i, label in sample:
            assert ((j, i) in dataset[k].gold_workflow) == (label == 1)

    def test_balanced_pairs_one_class(self):
        recipe = Recipe("r", [CookingStep(0, "a"), CookingStep(1, "b")], WorkflowGraph(2, [(0, 1)]))
        with self.assertRaises(TrainingError):
            sample_balanced_pairs([recipe], np.random.default_rng(0))


class TestFeedForwardDetector(unittest.TestCase):
    def test_zero_weights(self):
        network = FeedForwardPair_NNParam(d_img=2, hidden_size=3).make_nn()
        network.output.weight.data = np.zeros_like(network.output.weight.data)
        recipe = image_recipe([[1., 0.]], [[0., 1.]])
        assert feedforward_pair_detector(recipe, 0, 1, network) == 0.5

    def test_pure_function(self):
        network = FeedForwardPair_NNParam(d_img=2, hidden_size=3).make_nn(seed=2)
        recipe = image_recipe([[1., 0.]], [[0., 1.]], [[1., 0.]])
        assert feedforward_pair_detector(recipe, 0, 1, network) == feedforward_pair_detector(recipe, 2, 1, network)
        assert network.pair_proba(recipe, [(0, 1), (0, 2)]).shape == (2,)

    def test_wrong_dim(self):
        network = FeedForwardPair_NNParam(d_img=2, hidden_size=3).make_nn()
        recipe = image_recipe([[1., 0., 0.]], [[0., 1., 0.]])
        with self.assertRaises(ShapeError):
            feedforward_pair_detector(recipe, 0, 1, network)

    def test_gradients(self):
        rng = np.random.default_rng(3)
        network = FeedForwardPair_NNParam(d_img=2, hidden_size=5).make_nn(seed=3)
        x = rng.normal(size=(6, 4))
        y = (rng.random(6) > 0.5).astype(np.float64)
        ok, max_err = check_gradients(lambda: F.binary_cross_entropy(network(x), y), network.parameters())
        assert ok, "max relative error {}".format(max_err)


class TestSystems(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.dataset = small_dataset()
        cls.train_set = cls.dataset.subset(range(15))
        cls.val_set = cls.dataset.subset(range(15, 20))

    def test_handcrafted(self):
        tmp_dir = tempfile.mkdtemp()
        system = train_handcrafted(self.train_set, self.val_set, save_path=tmp_dir, verbose=False)
        assert isinstance(system, HandCrafted)
        assert system.detector.nb_features == 6
        assert len(system.train_log) == 1
        logs_dir = os.path.join(tmp_dir, "logs")
        loaded, report = evaluate_handcrafted(self.val_set, load_path=tmp_dir, logs_path=logs_dir)
        assert loaded.detector == system.detector
        assert os.path.exists(os.path.join(logs_dir, "metrics.json"))
        assert 0. <= report.avg_f1 <= 1.
        for recipe in self.val_set:
            assert all(j < i for j, i in system.predict(recipe).edges)

    def test_handcrafted_mm(self):
        tmp_dir = tempfile.mkdtemp()
        system = train_handcrafted(self.train_set, multimodal=True, name="HandCrafted", save_path=tmp_dir,
                                   training_param=TrainingParam(epochs=5), verbose=False)
        assert isinstance(system, HandCraftedMM)
        assert system.detector.nb_features == 9
        # a single fit whatever the number of epochs
        assert len(system.train_log) == 1
        with self.assertRaises(CheckpointError):
            HandCrafted().load(tmp_dir)

    def test_deterministic(self):
        sys_1 = HandCrafted()
        sys_1.train(self.train_set, seed=4)
        sys_2 = HandCrafted()
        sys_2.train(self.train_set, seed=4)
        assert sys_1.detector == sys_2.detector

    def test_imgsim(self):
        tmp_dir = tempfile.mkdtemp()
        system = train_imgsim(self.train_set, self.val_set, save_path=tmp_dir, verbose=False)
        assert isinstance(system, ImageSimilarity)
        assert system.detector.nb_features == 4
        loaded, report = evaluate_imgsim(self.val_set, load_path=tmp_dir, logs_path=None)
        assert loaded.detector == system.detector
        assert report.n_recipes == len(self.val_set)

    def test_ffpair(self):
        tmp_dir = tempfile.mkdtemp()
        system = train_ffpair(self.train_set, self.val_set, epochs=2, save_path=tmp_dir,
                              kwargs_archi={"hidden_size": 8}, verbose=False)
        assert isinstance(system, FeedForwardPair)
        assert system.nn_archi.d_img == 4
        assert 1 <= len(system.train_log) <= 2
        loaded, _ = evaluate_ffpair(self.val_set, load_path=tmp_dir, logs_path=None)
        recipe = self.val_set[0]
        assert np.array_equal(loaded.predict_proba(recipe).probs, system.predict_proba(recipe).probs)

    def test_ffpair_untrained(self):
        with self.assertRaises(CheckpointError):
            FeedForwardPair().predict_proba(self.dataset[0])

    def test_missing_checkpoint(self):
        with self.assertRaises(RuntimeError):
            evaluate_imgsim(self.val_set, load_path=None)


class TestMakeBuilder(unittest.TestCase):
    def test_modes(self):
        assert isinstance(make_builder("handcrafted"), HandCrafted)
        assert isinstance(make_builder("handcrafted_mm"), HandCraftedMM)
        assert isinstance(make_builder("imgsim"), ImageSimilarity)
        ffpair = make_builder("ffpair", d_img=6)
        assert isinstance(ffpair, FeedForwardPair)
        assert ffpair.nn_archi.d_img == 6
        model = make_builder("image_only", model_config=ModelConfig(fusion_mode="concat"), theta=0.3)
        assert isinstance(model, PointerWorkflow)
        assert model.nn_archi.fusion_mode == "image_only"
        assert model.theta == 0.3

    def test_unknown_mode(self):
        with self.assertRaises(ConfigError):
            make_builder("late_fusion")

    def test_fusion_mismatch(self):
        dataset = small_dataset(n_recipes=4)
        config = ModelConfig(d_img=4, d_model=8, lstm_hidden=4, n_heads=2, n_enc_layers=1, n_dec_layers=1,
                             d_word=4, n_fusion_layers=1, max_len=64, dropout=0.)
        tmp_dir = tempfile.mkdtemp()
        make_builder("text_only", model_config=config).train(dataset, epochs=0, save_path=tmp_dir)
        assert load_builder("text_only", tmp_dir).nn_archi.fusion_mode == "text_only"
        with self.assertRaises(CheckpointError):
            load_builder("concat", tmp_dir)


if __name__ == "__main__":
    unittest.main()
