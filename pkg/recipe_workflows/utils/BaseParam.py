# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import os
import json
import copy
from collections.abc import Iterable

import numpy as np

from recipe_workflows.Exceptions import ConfigError


class BaseParam(object):
    """
    Base of every configuration object of this package. It gives an easy way to save and restore, as json, a set
    of typed attributes.

    The attributes that are serialized are listed, by type, in the class level lists ``_int_attr``,
    ``_float_attr``, ``_str_attr``, ``_bool_attr``, ``_list_int`` and ``_list_float``. Each of them should also be an
    argument of the constructor of the class, so that ``cls(**self.to_dict())`` gives back an equal object.

    An attribute listed as ``int`` or ``float`` can be ``None`` (it is then saved as ``null``).

    Examples
    --------

    .. code-block:: python

        from recipe_workflows.utils import TrainingParam

        tp = TrainingParam(lr=1e-4)
        tp.save_as_json("/WHERE/I/SAVE/MY/MODEL", name="training_params.json")
        tp2 = TrainingParam.from_json("/WHERE/I/SAVE/MY/MODEL/training_params.json")
        assert tp == tp2

    """
    _tol_float_equal = float(1e-8)
    _default_json_name = "parameters.json"

    _int_attr = []
    _float_attr = []
    _str_attr = []
    _bool_attr = []
    _list_int = []
    _list_float = []

    @classmethod
    def _all_attr(cls):
        return cls._int_attr + cls._float_attr + cls._str_attr + cls._bool_attr + cls._list_int + cls._list_float

    def to_dict(self):
        """convert this instance to a dictionary"""
        res = {}
        for attr_nm in self._int_attr:
            tmp = getattr(self, attr_nm)
            res[attr_nm] = int(tmp) if tmp is not None else None
        for attr_nm in self._float_attr:
            tmp = getattr(self, attr_nm)
            res[attr_nm] = float(tmp) if tmp is not None else None
        for attr_nm in self._str_attr:
            tmp = getattr(self, attr_nm)
            res[attr_nm] = str(tmp) if tmp is not None else None
        for attr_nm in self._bool_attr:
            res[attr_nm] = bool(getattr(self, attr_nm))
        for attr_nm in self._list_int:
            res[attr_nm] = self._convert_list_to_json(getattr(self, attr_nm), int)
        for attr_nm in self._list_float:
            res[attr_nm] = self._convert_list_to_json(getattr(self, attr_nm), float)
        return res

    @classmethod
    def _convert_list_to_json(cls, obj, type_):
        if isinstance(obj, np.ndarray):
            return [cls._convert_list_to_json(el, type_) for el in obj]
        if isinstance(obj, Iterable) and not isinstance(obj, str):
            return [cls._convert_list_to_json(el, type_) for el in obj]
        return type_(obj)

    @classmethod
    def from_dict(cls, tmp):
        """
        Build an instance from a dictionary, the values are converted to the type of each attribute.

        Keys that are not attributes of the class raise a :class:`recipe_workflows.Exceptions.ConfigError` (most
        of the time this is a typo in a configuration file).
        """
        if not isinstance(tmp, dict):
            raise ConfigError("{} must be built from a dictionary, and not \"{}\"".format(cls.__name__, tmp))
        unknown = sorted(set(tmp) - set(cls._all_attr()))
        if unknown:
            raise ConfigError("unknown {} parameter(s): {}".format(cls.__name__, ", ".join(unknown)))
        cls_as_dict = {}
        try:
            for attr_nm in cls._int_attr:
                if attr_nm in tmp:
                    cls_as_dict[attr_nm] = int(tmp[attr_nm]) if tmp[attr_nm] is not None else None
            for attr_nm in cls._float_attr:
                if attr_nm in tmp:
                    cls_as_dict[attr_nm] = float(tmp[attr_nm]) if tmp[attr_nm] is not None else None
            for attr_nm in cls._str_attr:
                if attr_nm in tmp:
                    cls_as_dict[attr_nm] = str(tmp[attr_nm]) if tmp[attr_nm] is not None else None
            for attr_nm in cls._bool_attr:
                if attr_nm in tmp:
                    cls_as_dict[attr_nm] = cls._to_bool(tmp[attr_nm])
            for attr_nm in cls._list_int:
                if attr_nm in tmp:
                    cls_as_dict[attr_nm] = cls._convert_list_to_json(tmp[attr_nm], int)
            for attr_nm in cls._list_float:
                if attr_nm in tmp:
                    cls_as_dict[attr_nm] = cls._convert_list_to_json(tmp[attr_nm], float)
        except (TypeError, ValueError) as exc:
            raise ConfigError("invalid value for {}: {}".format(cls.__name__, exc))
        return cls(**cls_as_dict)

    @staticmethod
    def _to_bool(val):
        if isinstance(val, bool):
            return val
        if isinstance(val, str) and val.lower() in ("true", "false"):
            return val.lower() == "true"
        if val in (0, 1):
            return bool(val)
        raise ValueError("boolean value expected, found \"{}\"".format(val))

    @classmethod
    def from_json(cls, json_path):
        """load from a json file"""
        if not os.path.exists(json_path):
            raise FileNotFoundError("No path are located at \"{}\"".format(json_path))
        with open(json_path, "r", encoding="utf-8") as f:
            try:
                dict_ = json.load(f)
            except json.JSONDecodeError as exc:
                raise ConfigError("\"{}\" is not a valid json file ({})".format(json_path, exc))
        return cls.from_dict(dict_)

    def save_as_json(self, path, name=None):
        """save as a json file named ``name`` in the existing directory ``path``"""
        res = self.to_dict()
        if name is None:
            name = self._default_json_name
        if not os.path.exists(path):
            raise FileNotFoundError("Directory \"{}\" not found to save the parameters".format(path))
        if not os.path.isdir(path):
            raise NotADirectoryError("\"{}\" should be a directory".format(path))
        path_out = os.path.join(path, name)
        with open(path_out, "w", encoding="utf-8") as f:
            json.dump(res, fp=f, indent=4, sort_keys=True)

    def replace(self, **kwargs):
        """a copy of this instance with some attributes changed (and checked again)"""
        tmp = copy.deepcopy(self.to_dict())
        tmp.update(kwargs)
        return type(self).from_dict(tmp)

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        me_ = self.to_dict()
        oth_ = other.to_dict()
        for attr_nm in self._float_attr:
            a, b = me_.pop(attr_nm), oth_.pop(attr_nm)
            if (a is None) != (b is None):
                return False
            if a is not None and abs(a - b) > self._tol_float_equal:
                return False
        for attr_nm in self._list_float:
            a = np.asarray(me_.pop(attr_nm), dtype=np.float64)
            b = np.asarray(oth_.pop(attr_nm), dtype=np.float64)
            if a.shape != b.shape or np.any(np.abs(a - b) > self._tol_float_equal):
                return False
        return me_ == oth_

    def __repr__(self):
        return "{}({})".format(type(self).__name__,
                               ", ".join("{}={}".format(k, v) for k, v in sorted(self.to_dict().items())))
