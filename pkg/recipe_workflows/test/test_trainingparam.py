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

from recipe_workflows.Exceptions import ConfigError
from recipe_workflows.utils import TrainingParam


class TestTrainingParam(unittest.TestCase):
    def test_save(self):
        tp = TrainingParam()
        tmp_dir = tempfile.mkdtemp()
        tp.save_as_json(tmp_dir, "test.json")
        assert os.path.exists(os.path.join(tmp_dir, "test.json"))

    def test_loadback(self):
        tp = TrainingParam()
        tmp_dir = tempfile.mkdtemp()
        tp.save_as_json(tmp_dir, "test.json")

        tp2 = TrainingParam.from_json(os.path.join(tmp_dir, "test.json"))
        assert tp2 == tp

    def test_loadback_modified(self):
        for el in TrainingParam._int_attr:
            self._aux_test_attr(el, 3)
        for el in ["lr", "adam_eps", "max_global_norm_grad", "l2"]:
            self._aux_test_attr(el, 0.5)
        self._aux_test_attr("beta1", 0.5)
        self._aux_test_attr("patience", None)
        self._aux_test_attr("max_global_norm_grad", None)

    def _aux_test_attr(self, attr, val):
        """
        test that i can modify an attribut and then load the training parameters the correct way
        """
        tp = TrainingParam()
        setattr(tp, attr, val)
        tmp_dir = tempfile.mkdtemp()
        tp.save_as_json(tmp_dir, "test.json")
        tp2 = TrainingParam.from_json(os.path.join(tmp_dir, "test.json"))
        assert tp2 == tp, "error for attributes {}".format(attr)

    def test_not_equal(self):
        assert TrainingParam(lr=1e-3) != TrainingParam(lr=1e-2)

    def test_invalid(self):
        with self.assertRaises(ConfigError):
            TrainingParam(lr=0.)
        with self.assertRaises(ConfigError):
            TrainingParam(batch_size=0)
        with self.assertRaises(ConfigError):
            TrainingParam(beta1=1.)
        with self.assertRaises(ConfigError):
            TrainingParam.from_dict({"learning_rate": 1e-3})

    def test_replace(self):
        tp = TrainingParam()
        tp2 = tp.replace(epochs=2)
        assert tp2.epochs == 2
        assert tp.epochs == 30

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            TrainingParam.from_json(os.path.join(tempfile.mkdtemp(), "nothing.json"))


if __name__ == "__main__":
    unittest.main()
