# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json

from recipe_workflows.Exceptions import ConfigError
from recipe_workflows.utils.TrainingParam import TrainingParam
from recipe_workflows.utils.modes import MODES, DEFAULT_MODE
from recipe_workflows.utils.splits import DEFAULT_FRACTIONS
from recipe_workflows.synthgen.GenConfig import GenConfig
from recipe_workflows.PointerWorkflow.PointerWorkflow_NNParam import ModelConfig

RUN_CONFIG_NAME = "run_config.json"


class RunConfig(object):
    """
    Everything a command needs: the model, generator and training settings, the paths, the split, the seed, the
    system (``mode``) and the decision threshold.

    A configuration file is a json object with the optional sections ``"model"``, ``"gen"`` and ``"training"``
    and the top level keys of :attr:`RunConfig._top_keys`. Flags given on the command line win over the file.

    Examples
    --------

    .. code-block:: json

        {
            "dataset": "data/synth.jsonl",
            "checkpoint": "saved_models",
            "mode": "joint_transformer",
            "seed": 0,
            "model": {"d_model": 64, "n_heads": 4},
            "training": {"epochs": 30, "patience": 5},
            "gen": {"n_recipes": 2000}
        }

    """
    _sections = ("model", "gen", "training")
    _top_keys = ("dataset", "checkpoint", "output", "log", "mode", "theta", "seed", "split_fractions")

    def __init__(self,
                 model=None,
                 gen=None,
                 training=None,
                 dataset=None,
                 checkpoint=None,
                 output=None,
                 log=None,
                 mode=DEFAULT_MODE,
                 theta=None,
                 seed=0,
                 split_fractions=DEFAULT_FRACTIONS):
        self.model = ModelConfig() if model is None else model
        self.gen = GenConfig() if gen is None else gen
        self.training = TrainingParam() if training is None else training
        self.dataset = dataset
        self.checkpoint = checkpoint
        self.output = output
        self.log = log
        self.mode = mode
        self.theta = None if theta is None else float(theta)
        self.seed = int(seed)
        self.split_fractions = tuple(float(el) for el in split_fractions)
        self.check()

    def check(self):
        if self.mode not in MODES:
            raise ConfigError("unknown mode \"{}\", it should be one of {}".format(self.mode, ", ".join(MODES)))
        if self.theta is not None and not 0. <= self.theta <= 1.:
            raise ConfigError("theta should be in [0, 1], found \"{}\"".format(self.theta))
        fractions = self.split_fractions
        if len(fractions) != 3 or min(fractions) < 0. or abs(sum(fractions) - 1.) > 1e-6:
            raise ConfigError("split_fractions should be 3 non negative numbers summing to 1, found \"{}\""
                              "".format(list(fractions)))

    @classmethod
    def from_dict(cls, tmp):
        if not isinstance(tmp, dict):
            raise ConfigError("a run configuration must be a json object, and not \"{}\"".format(tmp))
        unknown = sorted(set(tmp) - set(cls._sections) - set(cls._top_keys))
        if unknown:
            raise ConfigError("unknown configuration key(s): {}".format(", ".join(unknown)))
        kwargs = {key: tmp[key] for key in cls._top_keys if key in tmp}
        if "model" in tmp:
            kwargs["model"] = ModelConfig.from_dict(tmp["model"])
        if "gen" in tmp:
            kwargs["gen"] = GenConfig.from_dict(tmp["gen"])
        if "training" in tmp:
            kwargs["training"] = TrainingParam.from_dict(tmp["training"])
        try:
            return cls(**kwargs)
        except (TypeError, ValueError) as exc:
            raise ConfigError("invalid run configuration: {}".format(exc))

    @classmethod
    def from_json(cls, json_path):
        if not os.path.exists(json_path):
            raise FileNotFoundError("No path are located at \"{}\"".format(json_path))
        with open(json_path, "r", encoding="utf-8") as f:
            try:
                tmp = json.load(f)
            except json.JSONDecodeError as exc:
                raise ConfigError("\"{}\" is not a valid json file ({})".format(json_path, exc))
        return cls.from_dict(tmp)

    @classmethod
    def from_args(cls, args):
        """
        The configuration of a command: the file given by ``--config`` (or the defaults) overridden by every flag
        of ``args`` that is not ``None``.

        When no mode is given at all and the checkpoint directory holds a saved run configuration, its mode is
        used.
        """
        file_cfg = {}
        if getattr(args, "config", None) is not None:
            res = cls.from_json(args.config)
            with open(args.config, "r", encoding="utf-8") as f:
                file_cfg = json.load(f)
        else:
            res = cls()
        for key in ("dataset", "checkpoint", "output", "log", "theta", "seed", "mode"):
            val = getattr(args, key, None)
            if val is not None:
                setattr(res, key, val)
        if getattr(args, "epochs", None) is not None:
            res.training = res.training.replace(epochs=args.epochs)
        if getattr(args, "n_recipes", None) is not None:
            res.gen = res.gen.replace(n_recipes=args.n_recipes)
        if getattr(args, "seed", None) is not None:
            res.gen = res.gen.replace(seed=args.seed)
        if getattr(args, "mode", None) is None and "mode" not in file_cfg and res.checkpoint is not None:
            saved = os.path.join(res.checkpoint, RUN_CONFIG_NAME)
            if os.path.exists(saved):
                res.mode = cls.from_json(saved).mode
        res.check()
        return res

    def require(self, *names):
        """raise a :class:`ConfigError` if one of the paths ``names`` is not set"""
        for nm in names:
            if getattr(self, nm) is None:
                raise ConfigError("\"{}\" is required (give it with --{} or in the configuration file)"
                                  "".format(nm, nm))

    def to_dict(self):
        res = {key: getattr(self, key) for key in self._top_keys}
        res["split_fractions"] = list(self.split_fractions)
        res["model"] = self.model.to_dict()
        res["gen"] = self.gen.to_dict()
        res["training"] = self.training.to_dict()
        return res

    def save_as_json(self, path, name=RUN_CONFIG_NAME):
        if not os.path.isdir(path):
            raise NotADirectoryError("\"{}\" should be a directory".format(path))
        with open(os.path.join(path, name), "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), fp=f, indent=4, sort_keys=True)

    def __repr__(self):
        return "RunConfig(mode={}, dataset={}, checkpoint={}, seed={})".format(self.mode, self.dataset,
                                                                                self.checkpoint, self.seed)
