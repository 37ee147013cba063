# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json
from collections import OrderedDict

import numpy as np

from recipe_workflows.Exceptions import CheckpointError

CHECKPOINT_FORMAT_VERSION = 1


def save_checkpoint(state, path):
    """
    Write a map ``name -> array`` as JSON: ``{"format_version": 1, "parameters": {name: {"shape", "values"}}}``
    where ``values`` is the row major flattening of the array.
    """
    params = OrderedDict()
    for name, value in state.items():
        value = np.asarray(value, dtype=np.float64)
        params[name] = {"shape": list(value.shape), "values": value.reshape(-1).tolist()}
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"format_version": CHECKPOINT_FORMAT_VERSION, "parameters": params}, fp=f)


def load_checkpoint(path):
    """read a file written by :func:`save_checkpoint`, returns an ordered map ``name -> array``"""
    if not os.path.exists(path):
        raise CheckpointError("No checkpoint is located at \"{}\"".format(path))
    try:
        with open(path, "r", encoding="utf-8") as f:
            content = json.load(f)
    except json.JSONDecodeError as exc:
        raise CheckpointError("checkpoint \"{}\" is not valid JSON ({})".format(path, exc))
    if not isinstance(content, dict) or "parameters" not in content:
        raise CheckpointError("checkpoint \"{}\" has no \"parameters\" entry".format(path))
    version = content.get("format_version")
    if version != CHECKPOINT_FORMAT_VERSION:
        raise CheckpointError("checkpoint \"{}\" has format version {}, only {} is supported"
                              "".format(path, version, CHECKPOINT_FORMAT_VERSION))
    res = OrderedDict()
    for name, entry in content["parameters"].items():
        try:
            shape = tuple(int(el) for el in entry["shape"])
            values = np.asarray(entry["values"], dtype=np.float64)
            res[name] = values.reshape(shape)
        except (KeyError, TypeError, ValueError):
            raise CheckpointError("checkpoint \"{}\": parameter \"{}\" is malformed".format(path, name))
    return res
