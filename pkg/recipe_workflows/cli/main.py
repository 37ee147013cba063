#!/usr/bin/env python3

# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
Command line entry point: ``recipe-workflows {generate,train,eval,predict} [flags]``.

Errors are reported on the standard error as ``E_CODE: message``. The exit code is 0 on success, 1 for an
error of this package, 2 for invalid arguments (code ``E_USAGE``) and 3 for a file system error (code ``E_IO``).
"""

import sys
import argparse

from recipe_workflows.Exceptions import WorkflowException
from recipe_workflows.utils.cli_generate import cli_generate
from recipe_workflows.utils.cli_train import cli_train
from recipe_workflows.utils.cli_eval import cli_eval
from recipe_workflows.utils.cli_predict import cli_predict
from recipe_workflows.cli.RunConfig import RunConfig
from recipe_workflows.cli.cmd_generate import cmd_generate
from recipe_workflows.cli.cmd_train import cmd_train
from recipe_workflows.cli.cmd_eval import cmd_eval
from recipe_workflows.cli.cmd_predict import cmd_predict

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_IO = 3
IO_CODE = "E_IO"
USAGE_CODE = "E_USAGE"


class WorkflowArgumentParser(argparse.ArgumentParser):
    """argument parser whose usage errors carry the same code prefix as the other errors"""
    def error(self, message):
        sys.stderr.write("{}: {}: {}\n".format(USAGE_CODE, self.prog, message))
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE)


def make_parser():
    parser = WorkflowArgumentParser(prog="recipe-workflows",
                                    description="Build cooking workflow graphs from multi-modal recipes")
    subparsers = parser.add_subparsers(title="Commands", dest="command")
    subparsers.required = True
    cli_generate(subparsers.add_parser("generate", help="Generate a synthetic labeled dataset"))
    cli_train(subparsers.add_parser("train", help="Train a system"))
    cli_eval(subparsers.add_parser("eval", help="Evaluate a trained system"))
    cli_predict(subparsers.add_parser("predict", help="Predict the workflows of recipes"))
    return parser


def run_command(args):
    run = RunConfig.from_args(args)
    if args.command == "generate":
        cmd_generate(run, force=args.force, verbose=args.verbose)
    elif args.command == "train":
        cmd_train(run, verbose=args.verbose)
    elif args.command == "eval":
        cmd_eval(run, split=args.split, reduce_gold=args.reduce_gold, verbose=args.verbose)
    elif args.command == "predict":
        cmd_predict(run, dot=args.dot, force=args.force, verbose=args.verbose)


def main(argv=None):
    """run the command given by ``argv`` (``sys.argv[1:]`` by default) and return the exit code"""
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        run_command(args)
    except WorkflowException as exc:
        sys.stderr.write("{}: {}\n".format(exc.code, exc))
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write("{}: {}\n".format(IO_CODE, exc))
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
