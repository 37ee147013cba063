# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json

from recipe_workflows.Exceptions import OutputExistsError
from recipe_workflows.core.dataset_io import save_dataset
from recipe_workflows.metrics.visibility import save_visibility, sidecar_path
from recipe_workflows.synthgen.generate import generate


def stats_path(dataset_path):
    return dataset_path + ".stats.json"


def cmd_generate(run, force=False, verbose=False):
    """
    Generate a synthetic dataset and write it to ``run.dataset`` (JSON lines), with its visibility labels
    (``<dataset>.visibility.json``) and its statistics (``<dataset>.stats.json``).

    Returns
    -------
    stats: ``dict``
        The statistics of the generated dataset

    """
    run.require("dataset")
    outputs = [run.dataset, sidecar_path(run.dataset), stats_path(run.dataset)]
    existing = [el for el in outputs if os.path.exists(el)]
    if existing and not force:
        raise OutputExistsError("\"{}\" already exists, use --force to overwrite it".format(existing[0]))
    out_dir = os.path.dirname(os.path.abspath(run.dataset))
    os.makedirs(out_dir, exist_ok=True)

    dataset, visibility, stats = generate(run.gen, verbose=verbose)
    save_dataset(dataset, run.dataset)
    save_visibility(visibility, sidecar_path(run.dataset))
    with open(stats_path(run.dataset), "w", encoding="utf-8") as f:
        json.dump(stats, fp=f, indent=4, sort_keys=True)
    if verbose:
        print("INFO: {} recipes written to \"{}\"".format(stats["n_recipes"], run.dataset))
        for key, val in sorted(stats.items()):
            print("INFO:   {}: {}".format(key, val))
    return stats
