# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
All the exceptions raised by this package.

Every exception carries a short machine readable ``code`` that the command line interface prints as a prefix
on the standard error, for example ``E_VALIDATION: recipe "r1": edge must satisfy j < i``.
"""

__all__ = ["WorkflowException",
           "DataError",
           "ParseError",
           "ValidationError",
           "ConfigError",
           "ArgumentError",
           "ShapeError",
           "TrainingError",
           "CheckpointError",
           "OutputExistsError"]


class WorkflowException(RuntimeError):
    """Base class of every error raised on purpose by recipe_workflows"""
    code = "E_WORKFLOW"


class DataError(WorkflowException):
    """The data given (dataset, recipe, gold workflow) cannot be used for the requested operation"""
    code = "E_DATA"


class ParseError(DataError):
    """A dataset file is not well formed (carries the line number in its message)"""
    code = "E_PARSE"

    def __init__(self, msg, line=None):
        if line is not None:
            msg = "line {}: {}".format(line, msg)
        DataError.__init__(self, msg)
        self.line = line


class ValidationError(DataError):
    """A structural invariant of a recipe, a workflow or a dataset is violated"""
    code = "E_VALIDATION"

    def __init__(self, msg, recipe_id=None):
        if recipe_id is not None:
            msg = "recipe \"{}\": {}".format(recipe_id, msg)
        DataError.__init__(self, msg)
        self.recipe_id = recipe_id


class ConfigError(WorkflowException):
    """A configuration value (model, generator, run) is invalid"""
    code = "E_CONFIG"


class ArgumentError(WorkflowException, ValueError):
    """A function received an argument outside of its domain"""
    code = "E_ARGUMENT"


class ShapeError(ArgumentError):
    """Incompatible shapes given to a tensor operation"""
    code = "E_SHAPE"


class TrainingError(WorkflowException):
    """A model or a detector cannot be trained on the data provided"""
    code = "E_TRAINING"


class CheckpointError(WorkflowException):
    """A checkpoint cannot be read back"""
    code = "E_CHECKPOINT"


class OutputExistsError(WorkflowException):
    """An output would be overwritten without the user asking for it"""
    code = "E_EXISTS"
