# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
import argparse

_BOOL_STRINGS = {"yes": True, "y": True, "true": True, "t": True, "1": True, "on": True,
                 "no": False, "n": False, "false": False, "f": False, "0": False, "off": False}


def str2bool(v):
    """argparse type of the boolean flags (``--verbose``, ``--force``...), case insensitive"""
    if isinstance(v, bool):
        return v
    try:
        return _BOOL_STRINGS[str(v).strip().lower()]
    except KeyError:
        raise argparse.ArgumentTypeError("boolean value expected, found \"{}\"".format(v)) from None
