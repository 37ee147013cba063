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

from recipe_workflows.Exceptions import ArgumentError, ConfigError
from recipe_workflows.core import CookingStep
from recipe_workflows.graphkit import transitive_reduce
from recipe_workflows.synthgen import GenConfig, generate, generate_recipe, plant_workflow, dedup_frames, \
    dedup_step_images


class TestPlantWorkflow(unittest.TestCase):
    def test_two_steps(self):
        for seed in range(10):
            assert plant_workflow(2, np.random.default_rng(seed), 0.6).edges == {(0, 1)}

    def test_valid(self):
        rng = np.random.default_rng(0)
        for n in range(2, 15):
            gold = plant_workflow(n, rng, 0.6)
            assert gold.n == n
            assert all(0 <= j < i < n for j, i in gold.edges)
            assert transitive_reduce(gold) == gold
            # every step is a prerequisite of something, except the last one
            for j in range(n - 1):
                assert gold.children(j)


class TestGenerate(unittest.TestCase):
    def test_two_steps(self):
        dataset, visibility, _ = generate(GenConfig(n_recipes=5, steps_range=[2, 2], d_img=3, seed=0))
        for recipe in dataset:
            assert recipe.n == 2
            assert recipe.gold_workflow.edges == {(0, 1)}
            assert set(visibility[recipe.id]) == {(0, 1)}

    def test_content(self):
        config = GenConfig(n_recipes=10, steps_range=[3, 6], d_img=5, seed=3)
        dataset, visibility, _ = generate(config)
        assert len(dataset) == 10
        assert dataset.d_img == 5
        assert dataset.is_labeled
        assert [el.id for el in dataset] == ["synth-{:05d}".format(k) for k in range(10)]
        for recipe in dataset:
            assert 3 <= recipe.n <= 6
            assert set(visibility[recipe.id]) == recipe.gold_workflow.edges
            assert set(visibility[recipe.id].values()) <= {"text", "image", "both"}
            for step in recipe.steps:
                assert 1 <= step.nb_images <= 3
                assert step.images.shape[1] == 5

    def test_text_visible_edges(self):
        dataset, visibility, _ = generate(GenConfig(n_recipes=10, steps_range=[3, 6], d_img=5, seed=4))
        for recipe in dataset:
            for (j, i), cls_ in visibility[recipe.id].items():
                if cls_ in ("text", "both"):
                    # steps end with "to make the <product> ."
                    assert recipe.steps[j].text[-2] in recipe.steps[i].text

    def test_deterministic(self):
        config = GenConfig(n_recipes=4, steps_range=[3, 5], d_img=4, seed=7)
        dataset_1, vis_1, stats_1 = generate(config)
        dataset_2, vis_2, stats_2 = generate(config)
        assert vis_1 == vis_2
        assert stats_1 == stats_2
        for rec_1, rec_2 in zip(dataset_1, dataset_2):
            assert rec_1 == rec_2
        dataset_3, _, _ = generate(config.replace(seed=8))
        assert any(rec_1 != rec_3 for rec_1, rec_3 in zip(dataset_1, dataset_3))

    def test_prefix_stable(self):
        small, _, _ = generate(GenConfig(n_recipes=3, steps_range=[3, 5], d_img=4, seed=7))
        large, _, _ = generate(GenConfig(n_recipes=6, steps_range=[3, 5], d_img=4, seed=7))
        for k in range(3):
            assert small[k] == large[k]

    def test_no_image(self):
        dataset, _, stats = generate(GenConfig(n_recipes=3, steps_range=[3, 4], d_img=4, p_no_image=1., seed=0))
        assert all(step.nb_images == 0 for recipe in dataset for step in recipe.steps)
        assert stats["pct_steps_with_images"] == 0.

    def test_stats(self):
        _, visibility, stats = generate(GenConfig(n_recipes=8, steps_range=[4, 4], d_img=4, seed=1))
        assert set(stats) == {"n_recipes", "avg_steps_per_recipe", "avg_images_per_step", "pct_steps_with_images",
                              "avg_tokens_per_step", "avg_edges_per_recipe", "visibility_shares"}
        assert stats["n_recipes"] == 8
        assert stats["avg_steps_per_recipe"] == 4.
        assert stats["pct_steps_with_images"] == 100.
        nb_edges = sum(len(el) for el in visibility.values())
        assert abs(stats["avg_edges_per_recipe"] - nb_edges / 8) <= 1e-12
        assert abs(sum(stats["visibility_shares"].values()) - 1.) <= 1e-12

    def test_empty(self):
        dataset, visibility, stats = generate(GenConfig(n_recipes=0, d_img=4))
        assert len(dataset) == 0
        assert visibility == {}
        assert stats["avg_steps_per_recipe"] == 0.

    def test_image_signal_from_direct_parents_only(self):
        config = GenConfig(n_recipes=1, steps_range=[6, 9], d_img=12, n_ingredients=12, visibility=[0., 1., 0.],
                           noise_sigma=0., carry=0.7)
        directions = np.eye(12)
        nb_chains = 0
        for seed in range(20):
            recipe, labels = generate_recipe(0, config, directions, np.random.SeedSequence(seed))
            assert set(labels.values()) == {"image"}
            gold = recipe.gold_workflow
            own = [int(np.argmax(step.images[0])) for step in recipe.steps]
            for i, step in enumerate(recipe.steps):
                parents = gold.parents(i)
                support = set(np.flatnonzero(np.abs(step.images[0]) > 1e-12).tolist())
                assert support == {own[i]} | {own[j] for j in parents}
                for j in parents:
                    assert abs(step.images[0][own[j]] - 0.7 * step.images[0][own[i]]) <= 1e-12
                    nb_chains += len(gold.parents(j))
        assert nb_chains > 0


class TestGenConfig(unittest.TestCase):
    def test_errors(self):
        with self.assertRaises(ConfigError):
            GenConfig(steps_range=[1, 4])
        with self.assertRaises(ConfigError):
            GenConfig(steps_range=[5, 4])
        with self.assertRaises(ConfigError):
            GenConfig(visibility=[0.5, 0.3, 0.3])
        with self.assertRaises(ConfigError):
            GenConfig(parent_geometric_p=0.)
        with self.assertRaises(ConfigError):
            GenConfig(n_ingredients=0)
        with self.assertRaises(ConfigError):
            GenConfig(p_distractor=1.5)
        with self.assertRaises(ConfigError):
            GenConfig(noise_sigma=-0.1)

    def test_save_load(self):
        config = GenConfig(n_recipes=12, steps_range=[3, 7], seed=5)
        tmp_dir = tempfile.mkdtemp()
        config.save_as_json(tmp_dir, name="gen.json")
        assert GenConfig.from_json(os.path.join(tmp_dir, "gen.json")) == config


class TestDedupFrames(unittest.TestCase):
    def test_example(self):
        assert dedup_frames([[1., 0.], [0.95, 0.31], [0., 1.]], tau=0.9) == [0, 2]

    def test_identical(self):
        assert dedup_frames([[1., 2.]] * 5, tau=0.9) == [0]

    def test_orthogonal(self):
        assert dedup_frames(np.eye(4), tau=0.5) == [0, 1, 2, 3]

    def test_compares_with_last_kept(self):
        # 1 is too close to 0, 2 is close to 1 but not to 0
        frames = [[1., 0.], [0.96, 0.28], [0.8, 0.6]]
        assert dedup_frames(frames, tau=0.9) == [0, 2]

    def test_empty_and_errors(self):
        assert dedup_frames([]) == []
        with self.assertRaises(ArgumentError):
            dedup_frames([[1., 0.]], tau=1.5)
        with self.assertRaises(ArgumentError):
            dedup_frames([1., 0.])

    def test_step(self):
        step = CookingStep(0, "stir the sauce", [[1., 0.], [1., 0.01], [0., 1.]])
        res = dedup_step_images(step)
        assert res.nb_images == 2
        assert res.text == step.text
        single = CookingStep(1, "bake", [[1., 0.]])
        assert dedup_step_images(single) is single


if __name__ == "__main__":
    unittest.main()
