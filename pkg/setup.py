# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

import setuptools
from setuptools import setup
__version__ = "0.1.0"


pkgs = {
    "required": [
        "numpy>=1.19.0",
        "scipy>=1.4.1",
        "scikit-learn>=0.22.2.post1",
        "networkx>=2.4",
        "tqdm>=4.45.0",
    ],
    "extras": {
        "docs": [
            "numpydoc>=0.9.2",
            "sphinx>=2.4.4",
            "sphinx-rtd-theme>=0.4.3",
            "sphinxcontrib-trio>=1.1.0",
            "autodocsumm>=0.1.13"
        ]
    }
}


setup(name='recipe-workflows',
      version=__version__,
      description='Build the workflow graph of a cooking recipe ' \
      'from its step texts and images.',
      long_description='This repository predicts, for a recipe given as an ' \
      'ordered list of steps (each with a text and image features), which ' \
      'steps are prerequisites of which. It contains a pointer network ' \
      'over a multi-modal encoder with several fusion modes, pairwise ' \
      'baselines, a synthetic dataset generator and the evaluation metrics.',
      classifiers=[
          'Development Status :: 4 - Beta',
          'Programming Language :: Python :: 3.6',
          'Programming Language :: Python :: 3.7',
          "License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)",
          "Intended Audience :: Developers",
          "Intended Audience :: Education",
          "Intended Audience :: Science/Research",
          "Natural Language :: English"
      ],
      keywords='ML recipes workflow graph multi-modal pointer-network',
      author='recipe-workflows developers',
      license='MPL',
      packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
      include_package_data=True,
      install_requires=pkgs["required"],
      extras_require=pkgs["extras"],
      zip_safe=False,
      entry_points={
          "console_scripts": ["recipe-workflows=recipe_workflows.cli.main:main"]
      }
)
