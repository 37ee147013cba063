# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

# test that the systems can be imported

import unittest
import recipe_workflows


class BaseTestImport():
    def test_import(self):
        module_name = self.load_module()
        exec(f"from recipe_workflows.{module_name} import {module_name}")
        exec(f"from recipe_workflows.{module_name} import evaluate")
        exec(f"from recipe_workflows.{module_name} import train")
        assert recipe_workflows.__version__


class TestPointerWorkflow(BaseTestImport, unittest.TestCase):
    def load_module(self):
        return "PointerWorkflow"


class TestHandCrafted(BaseTestImport, unittest.TestCase):
    def load_module(self):
        return "HandCrafted"


class TestImageSimilarity(BaseTestImport, unittest.TestCase):
    def load_module(self):
        return "ImageSimilarity"


class TestFeedForwardPair(BaseTestImport, unittest.TestCase):
    def load_module(self):
        return "FeedForwardPair"


if __name__ == "__main__":
    unittest.main()
